#ifndef QCOHOM_IG_MODEL_HPP
#define QCOHOM_IG_MODEL_HPP

#include <string>
#include <vector>

#include "qcohom/coeff_field.hpp"
#include "qcohom/grading.hpp"
#include "qcohom/groebner.hpp"

namespace qcohom::ig {

/// Which presentation of the cohomology of IG(2, 2n) to build.
enum class Variant {
    SigmaClassical,        ///< special Schubert classes, q = 0
    SigmaQuantum,          ///< special Schubert classes, small quantum
    ABClassical,           ///< Chern classes a1, a2 of U and b_i of U^perp/U
    ABQuantum,             ///< same, small quantum
    SigmaBigTauFirstOrder, ///< sigma presentation deformed along sigma_2 to first order in t
};

std::string to_string(Variant v);
/// Throws ConfigError for an unknown name.
Variant parse_variant(const std::string &name);
inline bool is_quantum(Variant v) { return v != Variant::SigmaClassical && v != Variant::ABClassical; }
inline bool is_sigma(Variant v) { return v != Variant::ABClassical && v != Variant::ABQuantum; }

struct PresentationSpec {
    int n = 2;
    Variant variant = Variant::SigmaQuantum;
    CoeffField coeff = CoeffField::specialized(Rational(-1));
};

/// Relations of one presentation together with its ring and grading.
/// sigma rings use variables s1..s{2n-2} (then t when deformed); ab rings
/// use a1, a2, b1..b{n-2}. The ring order is grevlex.
template <Field F>
struct ModelPresentation {
    PresentationSpec spec;
    RingPtr ring;
    GradingSpec grading;
    std::vector<MultiPoly<F>> relations;

    Ideal<F> ideal() const { return Ideal<F>(ring, relations); }
};

/// Ring variables and grading (s_i: i, a1: 1, a2: 2, b_i: 2i, t: -1,
/// q: 2n - 1). Throws UnsupportedN for n < 2.
RingPtr model_ring(int n, Variant v, const CoeffField &coeff);
GradingSpec model_grading(int n, Variant v);

/// Builds the relations of spec. Throws UnsupportedN for n < 2.
template <Field F>
ModelPresentation<F> build_relations(const PresentationSpec &spec);
/// Same with an explicit value for the quantum parameter.
template <Field F>
ModelPresentation<F> build_relations(const PresentationSpec &spec, const F &q);

/// Substitutes t = t0 into a SigmaBigTauFirstOrder presentation; the
/// result lives in the plain sigma ring.
template <Field F>
ModelPresentation<F> specialize_t(const ModelPresentation<F> &deformed, const F &t0);

struct ExpectedCounts {
    long total;                  ///< 2n(n-1)
    long reduced_points;         ///< (2n-1)(n-1)
    long local_length;           ///< n-1
    long jacobian_rank_deformed; ///< 2n-2
    long radical_dim;            ///< n-2
    friend bool operator==(const ExpectedCounts &, const ExpectedCounts &) = default;
};

/// Closed forms for the structure of the small quantum ring.
ExpectedCounts expected_counts(int n);

/// sigma_k expressed in the ab ring: the x^k coefficient of P(-x) Q(x) with
/// P(x) = 1 + a1 x + a2 x^2 and Q(x) = 1 + b1 x^2 + ... + b_{n-2} x^{2n-4}.
/// Throws IndexOutOfRange unless 0 <= k <= 2n-2.
template <Field F>
MultiPoly<F> sigma_in_ab(int n, int k, const RingPtr &ab_ring);

struct CompatResult {
    bool well_defined = false;
    /// +1: the sigma relations map into the ab ideal as is; -1: only after
    /// q -> -q. Classical presentations report +1.
    int q_twist = 0;
    bool vanishes_untwisted = false;
    bool vanishes_twisted = false;
};

/// Checks that sigma_k -> sigma_in_ab(k) maps every sigma relation into the
/// ab ideal (quantum or classical).
template <Field F>
CompatResult presentation_compat(int n, const CoeffField &coeff, bool quantum = true);

struct ZCountResult {
    long ordered_pair_count;
    long point_count;
};

/// Counts pairs (z1, z2) with z1 != z2, both nonzero, z1^{2n} = z2^{2n} =
/// z1 + z2 (q = -1) via the distinct roots of (z^{2n} - z)^{2n} - z^{2n}
/// away from z = 0 and z^{2n} = 2z.
ZCountResult z_count(int n);

} // namespace qcohom::ig

#endif
