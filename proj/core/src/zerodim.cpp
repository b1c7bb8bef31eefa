#include "qcohom/zerodim.hpp"

#include "qcohom/errors.hpp"

namespace qcohom {

template <Field F>
QuotientAlgebra<F>::QuotientAlgebra(const Ideal<F> &ideal, const MonomialOrder &order) : gb_(ideal.gb(order)) {
    auto sm = standard_monomials(*gb_);
    if (!sm)
        throw NotZeroDimensional("quotient algebra of a positive-dimensional ideal");
    basis_ = std::move(*sm);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(basis_[i], i);
    for (std::size_t v = 0; v < ring()->nvars(); ++v)
        var_cache_.push_back(std::make_unique<VarCache>());
}

template <Field F>
MultiPoly<F> QuotientAlgebra<F>::basis_element(std::size_t i) const {
    return MultiPoly<F>::term(ring(), basis_.at(i), F::one());
}

template <Field F>
std::vector<F> QuotientAlgebra<F>::coordinates_of_normal_form(const MultiPoly<F> &nf) const {
    std::vector<F> c(basis_.size(), F::zero());
    for (const auto &t : nf.terms()) {
        auto it = index_.find(t.mono);
        if (it == index_.end())
            throw InconsistentInput("normal form left a non-standard monomial");
        c[it->second] = t.coeff;
    }
    return c;
}

template <Field F>
std::vector<F> QuotientAlgebra<F>::coordinates(const MultiPoly<F> &f) const {
    return coordinates_of_normal_form(normal_form(f, *gb_));
}

template <Field F>
MultiPoly<F> QuotientAlgebra<F>::element(const std::vector<F> &coords) const {
    if (coords.size() != basis_.size())
        throw InconsistentInput("coordinate vector of the wrong length");
    std::vector<typename MultiPoly<F>::Term> t;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            t.push_back({basis_[i], coords[i]});
    return MultiPoly<F>::from_terms(ring(), std::move(t));
}

template <Field F>
const DenseMatrix<F> &QuotientAlgebra<F>::variable_matrix(std::size_t var) const {
    auto &slot = *var_cache_.at(var);
    std::call_once(slot.once, [&] { slot.matrix = mult_matrix(*this, MultiPoly<F>::variable(ring(), var)); });
    return slot.matrix;
}

template <Field F>
DenseMatrix<F> mult_matrix(const QuotientAlgebra<F> &a, const MultiPoly<F> &f) {
    if (!same_variables(f.ring(), a.ring()))
        throw RingMismatch("multiplier from another ring");
    const auto fr = same_ring(f.ring(), a.ring()) ? f : f.with_ring(a.ring());
    const std::size_t n = a.dim();
    DenseMatrix<F> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = a.coordinates(fr.mul_term(a.basis()[j], F::one()));
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = col[i];
    }
    return m;
}

template <Field F>
SemisimplicityReport<F> trace_form(const QuotientAlgebra<F> &a) {
    const std::size_t n = a.dim();
    // products[i][j] = coordinates of basis_i * basis_j, j >= i.
    std::vector<std::vector<std::vector<F>>> products(n, std::vector<std::vector<F>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            products[i][j] = a.coordinates(MultiPoly<F>::term(a.ring(), a.basis()[i] * a.basis()[j], F::one()));
    auto product = [&](std::size_t i, std::size_t j) -> const std::vector<F> & {
        return i <= j ? products[i][j] : products[j][i];
    };
    // trace of multiplication by basis_k
    std::vector<F> tr(n, F::zero());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            tr[k] = tr[k] + product(k, j)[j];

    SemisimplicityReport<F> report;
    report.gram = DenseMatrix<F>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            F s = F::zero();
            const auto &c = product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero())
                    s = s + c[k] * tr[k];
            report.gram(i, j) = s;
            report.gram(j, i) = s;
        }
    report.rank = matrix_rank(report.gram);
    report.radical_dim = n - report.rank;
    report.is_semisimple = report.radical_dim == 0;
    return report;
}

template <Field F>
DenseMatrix<F> jacobian_at(const std::vector<MultiPoly<F>> &gens, const std::vector<F> &point) {
    if (gens.empty())
        return DenseMatrix<F>(0, point.size());
    const std::size_t nvars = gens.front().ring()->nvars();
    if (point.size() != nvars)
        throw RingMismatch("point has " + std::to_string(point.size()) + " coordinates for " +
                           std::to_string(nvars) + " variables");
    DenseMatrix<F> jac(gens.size(), nvars);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t v = 0; v < nvars; ++v)
            jac(r, v) = gens[r].derivative(v).evaluate(point);
    return jac;
}

template <Field F>
std::size_t tangent_dim_at(const Ideal<F> &gens, const std::vector<F> &point) {
    for (const auto &g : gens.generators())
        if (!g.evaluate(point).is_zero())
            throw PointNotOnVariety("generator " + g.to_string() + " does not vanish at the point");
    const std::size_t nvars = gens.ring()->nvars();
    return nvars - matrix_rank(jacobian_at(gens.generators(), point));
}

std::string LocalClassification::to_string() const {
    switch (kind) {
    case Kind::ReducedPoint:
        return "ReducedPoint";
    case Kind::CurvilinearFatPoint:
        return "CurvilinearFatPoint(" + std::to_string(length) + ")";
    case Kind::Other:
        return "Other";
    }
    return "?";
}

LocalClassification classify_local(std::size_t local_dim, std::size_t tangent_dim) {
    using Kind = LocalClassification::Kind;
    if (local_dim <= 1)
        return {Kind::ReducedPoint, local_dim};
    if (tangent_dim == 0)
        throw InconsistentInput("length " + std::to_string(local_dim) + " with zero tangent space");
    if (tangent_dim == 1)
        return {Kind::CurvilinearFatPoint, local_dim};
    return {Kind::Other, 0};
}

#define QCOHOM_INSTANTIATE(F)                                                                        \
    template class QuotientAlgebra<F>;                                                               \
    template DenseMatrix<F> mult_matrix(const QuotientAlgebra<F> &, const MultiPoly<F> &);           \
    template SemisimplicityReport<F> trace_form(const QuotientAlgebra<F> &);                         \
    template DenseMatrix<F> jacobian_at(const std::vector<MultiPoly<F>> &, const std::vector<F> &);  \
    template std::size_t tangent_dim_at(const Ideal<F> &, const std::vector<F> &);

QCOHOM_INSTANTIATE(Rational)
QCOHOM_INSTANTIATE(RatFunc)

#undef QCOHOM_INSTANTIATE

} // namespace qcohom
