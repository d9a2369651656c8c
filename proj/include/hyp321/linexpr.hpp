#pragma once

#include "hyp321/rational.hpp"

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyp321 {

using Complex = std::complex<double>;
using Assignment = std::map<std::string, Complex>;

enum class SymbolKind { Continuous, NonnegInteger };

// n, m, L, k, N, M are integer-valued everywhere in the database
SymbolKind symbol_kind(const std::string& name);
inline bool is_integer_symbol(const std::string& name) {
    return symbol_kind(name) == SymbolKind::NonnegInteger;
}

class LinExpr {
public:
    LinExpr() = default;
    LinExpr(Rational c) : constant_(std::move(c)) {}
    LinExpr(long c) : constant_(c) {}
    LinExpr(int c) : constant_(c) {}
    static LinExpr symbol(const std::string& name, Rational coeff = 1);

    const std::map<std::string, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }
    Rational coeff(const std::string& name) const;
    void set_coeff(const std::string& name, const Rational& c);
    void set_constant(const Rational& c) { constant_ = c; }

    bool is_constant() const { return terms_.empty(); }
    bool mentions(const std::string& name) const { return terms_.count(name) != 0; }
    std::set<std::string> symbols() const;

    LinExpr operator-() const;
    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    LinExpr& operator*=(const Rational& s);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    friend LinExpr operator*(LinExpr a, const Rational& s) { return a *= s; }
    friend LinExpr operator*(const Rational& s, LinExpr a) { return a *= s; }
    friend bool operator==(const LinExpr& a, const LinExpr& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }
    friend std::strong_ordering operator<=>(const LinExpr& a, const LinExpr& b);

    LinExpr substitute(const std::map<std::string, LinExpr>& mapping) const;
    Complex eval(const Assignment& a) const;
    std::string str() const;

private:
    std::map<std::string, Rational> terms_;
    Rational constant_;
};

std::vector<LinExpr> sorted(std::vector<LinExpr> v);

}  // namespace hyp321
