#ifndef QCOHOM_UNIPOLY_HPP
#define QCOHOM_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcohom/errors.hpp"
#include "qcohom/field.hpp"

namespace qcohom {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
template <Field F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(F c) { return UniPoly(std::vector<F>{std::move(c)}); }
    /// c * x^k
    static UniPoly monomial(F c, std::size_t k) {
        std::vector<F> v(k + 1, F::zero());
        v[k] = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly x() { return monomial(F::one(), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F> &coeffs() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F::zero(); }
    const F &leading() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// True for c * x^k with c != 0.
    bool is_monomial() const {
        return !c_.empty() && std::all_of(c_.begin(), c_.end() - 1, [](const F &a) { return a.is_zero(); });
    }

    UniPoly monic() const {
        if (is_zero())
            return *this;
        return scaled(leading().inv());
    }
    UniPoly scaled(const F &s) const {
        if (s.is_zero())
            return {};
        std::vector<F> v(c_);
        for (auto &a : v)
            a = a * s;
        return UniPoly(std::move(v));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<F> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            v[k - 1] = c_[k] * F(static_cast<long>(k));
        return UniPoly(std::move(v));
    }

    F eval(const F &at) const {
        F acc = F::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            v[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k)
            v[k] = v[k] + b.c_[k];
        return UniPoly(std::move(v));
    }
    UniPoly operator-() const { return scaled(-F::one()); }
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly &d) const {
        if (d.is_zero())
            throw DivisionByZero("polynomial division by zero");
        std::vector<F> r(c_);
        if (r.size() < d.c_.size())
            return {UniPoly(), *this};
        std::vector<F> q(r.size() - d.c_.size() + 1, F::zero());
        const F lead_inv = d.leading().inv();
        for (std::size_t k = r.size(); k-- >= d.c_.size();) {
            if (r[k].is_zero())
                continue;
            const F f = r[k] * lead_inv;
            const std::size_t shift = k + 1 - d.c_.size();
            q[shift] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                r[shift + j] = r[shift + j] - f * d.c_[j];
        }
        r.resize(d.c_.size() - 1);
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    /// Polynomial raised to a nonnegative power.
    UniPoly pow(unsigned e) const {
        UniPoly acc = constant(F::one()), base = *this;
        while (e) {
            if (e & 1u)
                acc = acc * base;
            e >>= 1u;
            if (e)
                base = base * base;
        }
        return acc;
    }

    std::string to_string(const std::string &var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<F> c_;
};

/// Monic greatest common divisor. Throws ZeroPolynomial when both inputs vanish.
template <Field F>
UniPoly<F> gcd(UniPoly<F> f, UniPoly<F> g) {
    if (f.is_zero() && g.is_zero())
        throw ZeroPolynomial("gcd(0, 0) is undefined");
    if (f.is_monomial() && g.is_monomial()) {
        const auto k = static_cast<std::size_t>(std::min(f.degree(), g.degree()));
        return UniPoly<F>::monomial(F::one(), k);
    }
    while (!g.is_zero()) {
        auto r = f.divmod(g).second;
        f = std::move(g);
        g = r.monic();
    }
    return f.monic();
}

/// Product of the distinct irreducible factors of f, made monic.
/// Valid in characteristic zero: f / gcd(f, f').
template <Field F>
UniPoly<F> squarefree_part(const UniPoly<F> &f) {
    if (f.is_zero())
        throw ZeroPolynomial("squarefree part of 0");
    if (f.degree() == 0)
        return UniPoly<F>::constant(F::one());
    return f.divmod(gcd(f, f.derivative())).first.monic();
}

template <Field F>
std::string UniPoly<F>::to_string(const std::string &var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero())
            continue;
        std::string c = c_[k].to_string();
        const bool negative = !c.empty() && c.front() == '-';
        if (negative)
            c.erase(0, 1);
        if (c.find_first_of("+-/") != std::string::npos)
            c = "(" + c + ")";
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (c == "1");
        if (k == 0) {
            out += c;
            continue;
        }
        if (!unit)
            out += c + "*";
        out += var;
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace qcohom

#endif
