#include "hyp321/linexpr.hpp"

#include "hyp321/errors.hpp"

#include <algorithm>

namespace hyp321 {

SymbolKind symbol_kind(const std::string& name) {
    static const std::set<std::string> reserved = {"n", "m", "L", "k", "N", "M"};
    return reserved.count(name) ? SymbolKind::NonnegInteger : SymbolKind::Continuous;
}

LinExpr LinExpr::symbol(const std::string& name, Rational coeff) {
    LinExpr e;
    e.set_coeff(name, coeff);
    return e;
}

Rational LinExpr::coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational() : it->second;
}

void LinExpr::set_coeff(const std::string& name, const Rational& c) {
    if (c.is_zero())
        terms_.erase(name);
    else
        terms_[name] = c;
}

std::set<std::string> LinExpr::symbols() const {
    std::set<std::string> out;
    for (auto& [s, c] : terms_) out.insert(s);
    return out;
}

LinExpr LinExpr::operator-() const {
    LinExpr r = *this;
    r *= Rational(-1);
    return r;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    constant_ += o.constant_;
    for (auto& [s, c] : o.terms_) set_coeff(s, coeff(s) + c);
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    constant_ -= o.constant_;
    for (auto& [s, c] : o.terms_) set_coeff(s, coeff(s) - c);
    return *this;
}

LinExpr& LinExpr::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        constant_ = Rational();
        return *this;
    }
    constant_ *= s;
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::strong_ordering operator<=>(const LinExpr& a, const LinExpr& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (auto c = ia->second <=> ib->second; c != 0) return c;
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return a.constant_ <=> b.constant_;
}

LinExpr LinExpr::substitute(const std::map<std::string, LinExpr>& mapping) const {
    LinExpr r(constant_);
    for (auto& [s, c] : terms_) {
        auto it = mapping.find(s);
        if (it == mapping.end())
            r += LinExpr::symbol(s, c);
        else
            r += it->second * c;
    }
    return r;
}

Complex LinExpr::eval(const Assignment& a) const {
    Complex v = constant_.to_double();
    for (auto& [s, c] : terms_) {
        auto it = a.find(s);
        if (it == a.end()) throw UnboundSymbol("unbound symbol '" + s + "'");
        v += c.to_double() * it->second;
    }
    return v;
}

std::string LinExpr::str() const {
    std::string out;
    auto emit = [&](const Rational& c, const std::string& sym) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (sym.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += sym;
        else
            out += mag.str() + "*" + sym;
    };
    for (auto& [s, c] : terms_) emit(c, s);
    if (!constant_.is_zero() || out.empty()) emit(constant_, "");
    return out;
}

std::vector<LinExpr> sorted(std::vector<LinExpr> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace hyp321
