#include "qcohom/grading.hpp"

#include "qcohom/errors.hpp"

namespace qcohom {

namespace {

std::set<long> coefficient_weights(const Rational &, long) { return {0}; }

std::set<long> coefficient_weights(const RatFunc &c, long q_weight) {
    std::set<long> out;
    const auto &num = c.num().coeffs();
    const auto &den = c.den().coeffs();
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i].is_zero())
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            if (!den[j].is_zero())
                out.insert((static_cast<long>(i) - static_cast<long>(j)) * q_weight);
    }
    return out;
}

} // namespace

template <Field F>
WeightedDegree weighted_degree(const MultiPoly<F> &p, const GradingSpec &g) {
    if (p.is_zero())
        throw ZeroPolynomial("weighted degree of 0");
    if (g.var_weights.size() != p.ring()->nvars())
        throw RingMismatch("grading has " + std::to_string(g.var_weights.size()) + " weights, ring has " +
                           std::to_string(p.ring()->nvars()) + " variables");
    std::set<long> degrees;
    for (const auto &t : p.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < g.var_weights.size(); ++i)
            w += g.var_weights[i] * t.mono[i];
        for (long cw : coefficient_weights(t.coeff, g.q_weight))
            degrees.insert(w + cw);
    }
    if (degrees.size() == 1)
        return Homogeneous{*degrees.begin()};
    return Inhomogeneous{std::move(degrees)};
}

template WeightedDegree weighted_degree(const MultiPoly<Rational> &, const GradingSpec &);
template WeightedDegree weighted_degree(const MultiPoly<RatFunc> &, const GradingSpec &);

} // namespace qcohom
