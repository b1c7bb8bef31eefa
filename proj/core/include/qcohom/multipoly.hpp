#ifndef QCOHOM_MULTIPOLY_HPP
#define QCOHOM_MULTIPOLY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcohom/field.hpp"
#include "qcohom/monomial.hpp"
#include "qcohom/poly_ring.hpp"
#include "qcohom/ratfunc.hpp"
#include "qcohom/rational.hpp"

namespace qcohom {

/// Sparse multivariate polynomial over F.
///
/// Terms are kept sorted strictly descending in the ring's monomial order,
/// with no zero coefficients, so the representation is canonical and the
/// leading term is terms().front().
template <Field F>
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        F coeff;
        friend bool operator==(const Term &, const Term &) = default;
    };

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, const F &c);
    static MultiPoly variable(RingPtr ring, std::size_t var);
    static MultiPoly variable(const RingPtr &ring, const std::string &name) {
        return variable(ring, ring->index_of(name));
    }
    static MultiPoly term(RingPtr ring, Monomial m, const F &c);
    /// Canonicalizes arbitrary input: any order, duplicates and zeros allowed.
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
    /// Precondition: terms strictly descending in the ring's order, nonzero.
    static MultiPoly from_sorted(RingPtr ring, std::vector<Term> terms);

    const RingPtr &ring() const { return ring_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Coefficient of the monomial 1.
    F constant_term() const;
    F coefficient(const Monomial &m) const;

    const Term &leading_term() const;
    const Monomial &leading_monomial() const { return leading_term().mono; }
    const F &leading_coeff() const { return leading_term().coeff; }
    long total_degree() const;

    MultiPoly monic() const;
    MultiPoly scaled(const F &s) const;
    MultiPoly mul_term(const Monomial &m, const F &c) const;
    MultiPoly pow(unsigned e) const;

    MultiPoly operator-() const { return scaled(-F::one()); }
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) { return multiply(a, b); }
    friend MultiPoly operator*(const MultiPoly &a, const F &s) { return a.scaled(s); }
    friend MultiPoly operator*(const F &s, const MultiPoly &a) { return a.scaled(s); }

    /// Same ring (structurally) and same terms.
    friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    /// Partial derivative with respect to a variable.
    MultiPoly derivative(std::size_t var) const;
    /// Value at a point given in ring-variable order.
    F evaluate(const std::vector<F> &point) const;
    /// Substitutes variable i by images[i]; all images share the target ring.
    MultiPoly substitute(const std::vector<MultiPoly> &images) const;
    /// Coefficient of var^power, as a polynomial in the same ring not
    /// involving var.
    MultiPoly coefficient_in(std::size_t var, Exponent power) const;
    /// Degree in a single variable; -1 for zero.
    long degree_in(std::size_t var) const;
    /// Re-sorts the terms for a ring with the same variables and field.
    MultiPoly with_ring(RingPtr ring) const;
    /// Moves to another ring: variable i goes to target variable index_map[i]
    /// (or must not occur when index_map[i] < 0).
    MultiPoly relocate(RingPtr target, const std::vector<long> &index_map) const;
    /// Applies a function to every coefficient.
    template <class Fn>
    MultiPoly map_coefficients(Fn fn) const {
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const auto &x : terms_)
            t.push_back({x.mono, fn(x.coeff)});
        return from_terms(ring_, std::move(t));
    }

    std::string to_string() const;

private:
    MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    static MultiPoly multiply(const MultiPoly &a, const MultiPoly &b);
    void check_ring(const MultiPoly &o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

template <Field F>
std::ostream &operator<<(std::ostream &os, const MultiPoly<F> &p) {
    return os << p.to_string();
}

/// Merges two term lists sorted descending by `order`, adding `factor * b`
/// into a. Exposed for the reduction loops of the Groebner engine.
template <Field F>
std::vector<typename MultiPoly<F>::Term> merge_terms(const MonomialOrder &order,
                                                     const std::vector<typename MultiPoly<F>::Term> &a,
                                                     const std::vector<typename MultiPoly<F>::Term> &b,
                                                     const F &factor, const Monomial *shift);

extern template class MultiPoly<Rational>;
extern template class MultiPoly<RatFunc>;

} // namespace qcohom

#endif
