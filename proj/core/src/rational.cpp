#include "qcohom/rational.hpp"

#include <cctype>
#include <ostream>

#include "qcohom/errors.hpp"

namespace qcohom {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_decimal_integer(s))
        throw ParseError("not a decimal integer: '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, 1);
    v_ /= den;
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(mpq_class(parse_integer(s)));
    const mpz_class num = parse_integer(s.substr(0, slash));
    const mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0)
        throw DivisionByZero("rational literal '" + std::string(s) + "'");
    return Rational(mpq_class(num, den));
}

Rational Rational::inv() const {
    if (is_zero())
        throw DivisionByZero("inverse of 0");
    return Rational(mpq_class(1 / v_));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw DivisionByZero("division by 0");
    v_ /= o.v_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

Rational pow(const Rational &base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(mpq_class(num, den));
}

} // namespace qcohom
