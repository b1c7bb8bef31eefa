#ifndef QCOHOM_GRADING_HPP
#define QCOHOM_GRADING_HPP

#include <set>
#include <variant>
#include <vector>

#include "qcohom/multipoly.hpp"

namespace qcohom {

/// Integer weight per ring variable plus the weight carried by q when it
/// appears inside Q(q) coefficients. Weights may be negative.
struct GradingSpec {
    std::vector<long> var_weights;
    long q_weight = 0;
};

struct Homogeneous {
    long degree;
    friend bool operator==(const Homogeneous &, const Homogeneous &) = default;
};
struct Inhomogeneous {
    std::set<long> degrees;
    friend bool operator==(const Inhomogeneous &, const Inhomogeneous &) = default;
};
using WeightedDegree = std::variant<Homogeneous, Inhomogeneous>;

/// Common weighted degree of the terms of p, or the set of degrees present.
/// Coefficients in Q(q) contribute q_weight per power of q. Throws
/// ZeroPolynomial for p = 0 and RingMismatch when the grading does not
/// cover the ring.
template <Field F>
WeightedDegree weighted_degree(const MultiPoly<F> &p, const GradingSpec &g);

template <Field F>
bool is_homogeneous(const MultiPoly<F> &p, const GradingSpec &g) {
    return std::holds_alternative<Homogeneous>(weighted_degree(p, g));
}

} // namespace qcohom

#endif
