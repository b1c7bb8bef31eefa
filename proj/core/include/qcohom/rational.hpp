#ifndef QCOHOM_RATIONAL_HPP
#define QCOHOM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcohom {

/// Exact rational number in lowest terms with positive denominator.
///
/// Arithmetic is delegated to GMP; every constructor and operation leaves the
/// value canonicalized, so structural equality is value equality.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {} // NOLINT: implicit from integers is intended
    Rational(int v) : v_(v) {}  // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (decimal integers). Throws ParseError or
    /// DivisionByZero.
    static Rational parse(std::string_view s);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inv() const;

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const { return v_.get_str(); }
    const mpq_class &raw() const { return v_; }

private:
    mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Integer power with nonnegative exponent.
Rational pow(const Rational &base, unsigned exp);

} // namespace qcohom

#endif
