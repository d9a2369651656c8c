#include "hyp321/rational.hpp"

#include "hyp321/errors.hpp"

#include <cctype>

namespace hyp321 {

namespace {

bool is_int_text(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class int_of(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int_text(text)) throw ParseError("malformed rational '" + std::string(text) + "'");
        return Rational(mpq_class(int_of(text)));
    }
    auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!is_int_text(n) || !is_int_text(d) || d[0] == '-')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class den = int_of(d);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(int_of(n), den));
}

Rational Rational::from_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.empty() || !is_int_text(frac) || frac[0] == '-' || frac[0] == '+')
        throw ParseError("malformed decimal '" + std::string(text) + "'");
    bool negative = !digits.empty() && digits[0] == '-';
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    if (!is_int_text(digits)) throw ParseError("malformed decimal '" + std::string(text) + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpz_class num = mpz_class(digits, 10) * den + mpz_class(frac, 10);
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::optional<long> Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
    return q_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational floor_of(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(mpq_class(f));
}

}  // namespace hyp321
