#ifndef QCOHOM_MATRIX_HPP
#define QCOHOM_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcohom/errors.hpp"
#include "qcohom/field.hpp"

namespace qcohom {

/// Dense row-major matrix over a field.
template <Field F>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols)
            throw InconsistentInput("matrix entry count " + std::to_string(a_.size()) + " != " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    /// From nested rows; all rows must have equal length.
    static DenseMatrix from_rows(const std::vector<std::vector<F>> &rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        std::vector<F> e;
        e.reserve(rows.size() * c);
        for (const auto &r : rows) {
            if (r.size() != c)
                throw InconsistentInput("ragged matrix rows");
            e.insert(e.end(), r.begin(), r.end());
        }
        return DenseMatrix(rows.size(), c, std::move(e));
    }
    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<F> &entries() const { return a_; }

    std::vector<F> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }
    std::vector<F> column(std::size_t j) const {
        std::vector<F> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c.push_back((*this)(i, j));
        return c;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    F trace() const {
        F s = F::zero();
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
            s = s + (*this)(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto &x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
        if (a.cols_ != b.rows_)
            throw InconsistentInput("matrix product shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F &x = a(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) = c(i, j) + x * b(k, j);
            }
        return c;
    }
    friend DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InconsistentInput("matrix sum shape mismatch");
        DenseMatrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k)
            c.a_[k] = c.a_[k] + b.a_[k];
        return c;
    }
    std::vector<F> apply(const std::vector<F> &v) const {
        if (v.size() != cols_)
            throw InconsistentInput("matrix-vector shape mismatch");
        std::vector<F> out(rows_, F::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero())
                    out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
template <Field F>
std::size_t matrix_rank(DenseMatrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    F prev = F::one();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        const F pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const F lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
            m(i, c) = F::zero();
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
template <Field F>
std::vector<std::size_t> row_reduce(DenseMatrix<F> &m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const F inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right kernel {v : m v = 0}.
template <Field F>
std::vector<std::vector<F>> nullspace(DenseMatrix<F> m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(m.cols(), F::zero());
        v[free] = F::one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qcohom

#endif
