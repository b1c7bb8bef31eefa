#ifndef QCOHOM_RATFUNC_HPP
#define QCOHOM_RATFUNC_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "qcohom/rational.hpp"
#include "qcohom/unipoly.hpp"

namespace qcohom {

using QPoly = UniPoly<Rational>;

/// Element of the rational function field Q(q).
///
/// Stored as num/den with den monic and gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(QPoly::constant(Rational::one())) {}
    RatFunc(long c) : RatFunc(Rational(c)) {} // NOLINT
    RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT
    RatFunc(const Rational &c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational::one())) {} // NOLINT
    RatFunc(QPoly num, QPoly den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    /// The indeterminate q.
    static RatFunc q() { return RatFunc(QPoly::x(), QPoly::constant(Rational::one())); }

    /// Parses an arithmetic expression in q built from rational literals,
    /// q, + - * / ^ (nonnegative integer exponents) and parentheses.
    static RatFunc parse(std::string_view s);

    const QPoly &num() const { return num_; }
    const QPoly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Constant value; only meaningful when is_constant().
    Rational constant_value() const { return num_.coeff(0); }
    /// True when the value is c * q^k for some rational c != 0 and integer k.
    bool is_q_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
    /// Exponent k of c * q^k; only meaningful when is_q_monomial().
    long q_exponent() const { return num_.degree() - den_.degree(); }

    RatFunc inv() const;
    /// Substitution q -> -q.
    RatFunc negate_q() const;
    /// Substitution q -> value. Throws DivisionByZero on a pole.
    Rational eval(const Rational &value) const;

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    friend bool operator==(const RatFunc &, const RatFunc &) = default;

    std::string to_string() const;

private:
    struct NoNormalize {};
    RatFunc(QPoly num, QPoly den, NoNormalize) : num_(std::move(num)), den_(std::move(den)) {}

    QPoly num_;
    QPoly den_;
};

std::ostream &operator<<(std::ostream &os, const RatFunc &r);

} // namespace qcohom

#endif
