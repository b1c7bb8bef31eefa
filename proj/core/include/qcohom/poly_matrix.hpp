#ifndef QCOHOM_POLY_MATRIX_HPP
#define QCOHOM_POLY_MATRIX_HPP

#include <vector>

#include "qcohom/multipoly.hpp"

namespace qcohom {

template <Field F>
using PolyMatrix = std::vector<std::vector<MultiPoly<F>>>;

/// Determinant by cofactor expansion along successive rows, memoized on the
/// set of remaining columns (2^n subproblems). Meant for n <= 16.
/// Throws NotSquare for ragged or non-square input, RingMismatch when
/// entries disagree on the ring.
template <Field F>
MultiPoly<F> det_poly_matrix(const PolyMatrix<F> &m);

} // namespace qcohom

#endif
