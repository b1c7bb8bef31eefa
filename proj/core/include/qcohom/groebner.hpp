#ifndef QCOHOM_GROEBNER_HPP
#define QCOHOM_GROEBNER_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qcohom/multipoly.hpp"

namespace qcohom {

/// Reduced Groebner basis: every element monic, no term of any element
/// divisible by the leading monomial of another, sorted by ascending
/// leading monomial.
template <Field F>
class ReducedGB {
public:
    const RingPtr &ring() const { return ring_; }
    const MonomialOrder &order() const { return ring_->order(); }
    const std::vector<MultiPoly<F>> &basis() const { return basis_; }
    std::vector<Monomial> leading_monomials() const;
    bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }

    friend bool operator==(const ReducedGB &a, const ReducedGB &b) {
        return same_ring(a.ring_, b.ring_) && a.basis_ == b.basis_;
    }

private:
    template <Field G>
    friend class GroebnerEngine;
    ReducedGB(RingPtr ring, std::vector<MultiPoly<F>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

    RingPtr ring_;
    std::vector<MultiPoly<F>> basis_;
};

/// Finitely generated ideal with a write-once Groebner basis cache per
/// monomial order. Copies share the cache.
template <Field F>
class Ideal {
public:
    /// Zero generators are dropped. Throws RingMismatch when a generator
    /// uses other variables than `ring`.
    Ideal(RingPtr ring, std::vector<MultiPoly<F>> generators);
    /// Ring taken from the first generator; throws EmptyGeneratorList if none.
    explicit Ideal(std::vector<MultiPoly<F>> generators);

    const RingPtr &ring() const { return ring_; }
    const std::vector<MultiPoly<F>> &generators() const { return gens_; }

    /// Reduced GB in the ring's own order.
    std::shared_ptr<const ReducedGB<F>> gb() const { return gb(ring_->order()); }
    std::shared_ptr<const ReducedGB<F>> gb(const MonomialOrder &order) const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const ReducedGB<F>>>> entries;
    };

    RingPtr ring_;
    std::vector<MultiPoly<F>> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Buchberger's algorithm on the interreduced generators with the coprime
/// and chain criteria; pairs are selected by sugar for degree orders and by
/// smallest lcm for lex. Returns the reduced basis. Deterministic in the
/// generator sequence. Throws EmptyGeneratorList.
template <Field F>
ReducedGB<F> buchberger(const Ideal<F> &ideal, const MonomialOrder &order);

/// Remainder of f on division by G. f may use another order over the same
/// variables; the result lives in G's ring. Throws RingMismatch.
template <Field F>
MultiPoly<F> normal_form(const MultiPoly<F> &f, const ReducedGB<F> &g);

/// Monomials outside the leading-term ideal, ascending in G's order, or
/// nullopt when there are infinitely many (ideal not zero-dimensional).
template <Field F>
std::optional<std::vector<Monomial>> standard_monomials(const ReducedGB<F> &g);

/// Vector-space dimension of R/I, or nullopt when infinite.
template <Field F>
std::optional<std::size_t> quotient_dim(const Ideal<F> &ideal);

template <Field F>
bool ideal_contains(const Ideal<F> &ideal, const MultiPoly<F> &f);

template <Field F>
Ideal<F> ideal_sum(const Ideal<F> &a, const Ideal<F> &b);

/// I ∩ J by eliminating a tag variable t from tI + (1 - t)J.
template <Field F>
Ideal<F> intersect(const Ideal<F> &a, const Ideal<F> &b);

/// (I : f) = {g : g f ∈ I}, from I ∩ (f) divided by f.
/// Throws ZeroDivisorPolynomial for f = 0.
template <Field F>
Ideal<F> ideal_quotient(const Ideal<F> &ideal, const MultiPoly<F> &f);

/// (I : m^∞) for m the maximal ideal of the origin, by iterating
/// I ← ∩_v (I : v) until the quotient dimension stops dropping.
/// Throws NotZeroDimensional.
template <Field F>
Ideal<F> saturate_at_origin(const Ideal<F> &ideal);

/// Length of the component of R/I at the origin: dim R/(I + m^k) once it
/// stabilizes in k. Throws NotZeroDimensional.
template <Field F>
std::size_t local_dim_at_origin(const Ideal<F> &ideal);

/// Generators of m^k: all monomials of total degree k.
template <Field F>
std::vector<MultiPoly<F>> maximal_ideal_power(const RingPtr &ring, unsigned k);

} // namespace qcohom

#endif
