#include "qcohom/poly_matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "qcohom/errors.hpp"

namespace qcohom {

namespace {

template <Field F>
class CofactorExpansion {
public:
    explicit CofactorExpansion(const PolyMatrix<F> &m) : m_(m) {}

    MultiPoly<F> det(std::uint32_t columns) {
        const std::size_t row = m_.size() - static_cast<std::size_t>(std::popcount(columns));
        if (columns == 0)
            return MultiPoly<F>::constant(m_[0][0].ring(), F::one());
        if (auto it = memo_.find(columns); it != memo_.end())
            return it->second;
        MultiPoly<F> acc(m_[0][0].ring());
        int sign = 1;
        for (std::size_t c = 0; c < m_.size(); ++c) {
            if (!(columns & (1u << c)))
                continue;
            const auto &entry = m_[row][c];
            if (!entry.is_zero()) {
                auto minor = det(columns & ~(1u << c));
                if (!minor.is_zero()) {
                    auto product = entry * minor;
                    acc = sign > 0 ? acc + product : acc - product;
                }
            }
            sign = -sign;
        }
        memo_.emplace(columns, acc);
        return acc;
    }

private:
    const PolyMatrix<F> &m_;
    std::unordered_map<std::uint32_t, MultiPoly<F>> memo_;
};

} // namespace

template <Field F>
MultiPoly<F> det_poly_matrix(const PolyMatrix<F> &m) {
    if (m.empty())
        throw NotSquare("empty matrix has no ring to carry its determinant");
    if (m.size() > 16)
        throw NotSquare("cofactor expansion limited to 16x16");
    for (const auto &row : m) {
        if (row.size() != m.size())
            throw NotSquare(std::to_string(m.size()) + " rows but a row of length " + std::to_string(row.size()));
        for (const auto &e : row)
            if (!same_ring(e.ring(), m[0][0].ring()))
                throw RingMismatch("matrix entries live in different rings");
    }
    CofactorExpansion<F> expansion(m);
    return expansion.det((1u << m.size()) - 1u);
}

template MultiPoly<Rational> det_poly_matrix(const PolyMatrix<Rational> &);
template MultiPoly<RatFunc> det_poly_matrix(const PolyMatrix<RatFunc> &);

} // namespace qcohom
