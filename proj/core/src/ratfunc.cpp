#include "qcohom/ratfunc.hpp"

#include <cctype>
#include <ostream>

#include "qcohom/errors.hpp"

namespace qcohom {

namespace {

const QPoly &poly_one() {
    static const QPoly one = QPoly::constant(Rational::one());
    return one;
}

/// Recursive-descent parser for expressions in q.
class QExprParser {
public:
    explicit QExprParser(std::string_view s) : s_(s) {}

    RatFunc parse_all() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return v;
    }

private:
    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                acc = acc * unary();
            else if (accept('/'))
                acc = acc / unary();
            else
                return acc;
        }
    }

    RatFunc unary() {
        skip_ws();
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        skip_ws();
        if (!accept('^'))
            return base;
        skip_ws();
        const mpz_class e = integer();
        if (!e.fits_ulong_p())
            fail("exponent out of range");
        RatFunc acc = RatFunc::one();
        for (unsigned long k = 0; k < e.get_ui(); ++k)
            acc = acc * base;
        return acc;
    }

    RatFunc atom() {
        skip_ws();
        if (accept('(')) {
            RatFunc v = expr();
            skip_ws();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (accept('q'))
            return RatFunc::q();
        return RatFunc(Rational(mpq_class(integer())));
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number or q");
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc::RatFunc(QPoly num, QPoly den) {
    if (den.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = poly_one();
        return;
    }
    if (!den.is_constant()) {
        const QPoly g = gcd(num, den);
        if (!g.is_constant()) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
    }
    const Rational lead = den.leading();
    if (!lead.is_one()) {
        const Rational s = lead.inv();
        num = num.scaled(s);
        den = den.scaled(s);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::parse(std::string_view s) { return QExprParser(s).parse_all(); }

RatFunc RatFunc::inv() const {
    if (is_zero())
        throw DivisionByZero("inverse of 0 in Q(q)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::negate_q() const {
    auto flip = [](const QPoly &p) {
        std::vector<Rational> c = p.coeffs();
        for (std::size_t k = 1; k < c.size(); k += 2)
            c[k] = -c[k];
        return QPoly(std::move(c));
    };
    return RatFunc(flip(num_), flip(den_));
}

Rational RatFunc::eval(const Rational &value) const {
    const Rational d = den_.eval(value);
    if (d.is_zero())
        throw DivisionByZero("rational function has a pole at q = " + value.to_string());
    return num_.eval(value) / d;
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant())
            return RatFunc(a.num_ + b.num_, poly_one(), RatFunc::NoNormalize{});
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero() || b.is_zero())
        return RatFunc();
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.num_ * b.num_, poly_one(), RatFunc::NoNormalize{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inv(); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, NoNormalize{}); }

std::string RatFunc::to_string() const {
    if (den_.is_constant())
        return num_.to_string("q");
    std::string n = num_.to_string("q");
    if (!num_.is_monomial() || n.find('/') != std::string::npos)
        n = "(" + n + ")";
    return n + "/(" + den_.to_string("q") + ")";
}

std::ostream &operator<<(std::ostream &os, const RatFunc &r) { return os << r.to_string(); }

} // namespace qcohom
