#ifndef QCOHOM_ZERODIM_HPP
#define QCOHOM_ZERODIM_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcohom/groebner.hpp"
#include "qcohom/matrix.hpp"

namespace qcohom {

/// Finite-dimensional algebra R/I with the standard-monomial basis.
///
/// Multiplication matrices of the ring variables are filled lazily, once
/// per variable; concurrent readers are safe.
template <Field F>
class QuotientAlgebra {
public:
    /// Throws NotZeroDimensional.
    QuotientAlgebra(const Ideal<F> &ideal, const MonomialOrder &order);
    explicit QuotientAlgebra(const Ideal<F> &ideal) : QuotientAlgebra(ideal, ideal.ring()->order()) {}

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial> &basis() const { return basis_; }
    const ReducedGB<F> &gb() const { return *gb_; }
    const RingPtr &ring() const { return gb_->ring(); }

    MultiPoly<F> basis_element(std::size_t i) const;
    /// Coordinates of the class of f on the basis.
    std::vector<F> coordinates(const MultiPoly<F> &f) const;
    /// Polynomial with the given basis coordinates.
    MultiPoly<F> element(const std::vector<F> &coords) const;

    /// Matrix of multiplication by a ring variable (cached).
    const DenseMatrix<F> &variable_matrix(std::size_t var) const;

private:
    std::vector<F> coordinates_of_normal_form(const MultiPoly<F> &nf) const;

    struct VarCache {
        std::once_flag once;
        DenseMatrix<F> matrix;
    };

    std::shared_ptr<const ReducedGB<F>> gb_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    std::vector<std::unique_ptr<VarCache>> var_cache_;
};

/// Column j holds the coordinates of f * basis_j. Throws RingMismatch.
template <Field F>
DenseMatrix<F> mult_matrix(const QuotientAlgebra<F> &a, const MultiPoly<F> &f);

template <Field F>
struct SemisimplicityReport {
    DenseMatrix<F> gram;
    std::size_t rank = 0;
    std::size_t radical_dim = 0;
    bool is_semisimple = false;
};

/// Gram matrix of (f, g) -> tr(L_{fg}) on the basis, its rank, and the
/// resulting semisimplicity verdict (characteristic zero).
template <Field F>
SemisimplicityReport<F> trace_form(const QuotientAlgebra<F> &a);

/// Jacobian of the generators at a point (rows: generators, columns:
/// variables). Throws RingMismatch for a point of the wrong length.
template <Field F>
DenseMatrix<F> jacobian_at(const std::vector<MultiPoly<F>> &gens, const std::vector<F> &point);

/// nvars - rank(Jacobian at point). Throws PointNotOnVariety when a
/// generator does not vanish at the point.
template <Field F>
std::size_t tangent_dim_at(const Ideal<F> &gens, const std::vector<F> &point);

struct LocalClassification {
    enum class Kind { ReducedPoint, CurvilinearFatPoint, Other };
    Kind kind;
    /// Length d of K[eps]/eps^d for a curvilinear fat point.
    std::size_t length = 0;

    std::string to_string() const;
    friend bool operator==(const LocalClassification &, const LocalClassification &) = default;
};

struct LocalReport {
    std::size_t local_dim = 0;
    std::size_t tangent_dim = 0;
    LocalClassification classification;
};

/// A local Artinian algebra with residue field K and embedding dimension
/// <= 1 is K[eps]/eps^d. Throws InconsistentInput for tangent_dim = 0 with
/// local_dim >= 2.
LocalClassification classify_local(std::size_t local_dim, std::size_t tangent_dim);

} // namespace qcohom

#endif
