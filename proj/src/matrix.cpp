#include "tableau/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "tableau/errors.hpp"
#include "tableau/rng.hpp"

namespace tableau {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("RatMatrix: entry count does not match shape");
    }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("RatMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("RatMatrix::from_rows: wrong row length");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t rows)
{
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
            throw std::invalid_argument("RatMatrix::from_columns: wrong column length");
        }
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = columns[j][i];
        }
    }
    return m;
}

RatMatrix RatMatrix::column_vector(const RatVector &v) { return RatMatrix(v.size(), 1, v); }

RatVector RatMatrix::row(std::size_t i) const
{
    const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RatMatrix RatMatrix::column_block(std::size_t first, std::size_t count) const
{
    if (first + count > cols_) {
        throw std::out_of_range("RatMatrix::column_block");
    }
    RatMatrix b(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            b(i, j) = (*this)(i, first + j);
        }
    }
    return b;
}

bool RatMatrix::is_zero() const { return tableau::is_zero(entries_); }

RatMatrix &RatMatrix::operator+=(const RatMatrix &rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("RatMatrix: shape mismatch in +");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("RatMatrix: shape mismatch in -");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

RatMatrix &RatMatrix::operator*=(const Rational &scalar)
{
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

RatMatrix operator+(RatMatrix lhs, const RatMatrix &rhs) { return lhs += rhs; }

RatMatrix operator-(RatMatrix lhs, const RatMatrix &rhs) { return lhs -= rhs; }

RatMatrix operator*(const RatMatrix &lhs, const RatMatrix &rhs)
{
    if (lhs.cols() != rhs.rows()) {
        throw std::invalid_argument("RatMatrix: shape mismatch in *");
    }
    RatMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational &a = lhs(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                if (!rhs(k, j).is_zero()) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
    }
    return out;
}

RatMatrix operator*(const Rational &scalar, RatMatrix m) { return m *= scalar; }

RatVector operator*(const RatMatrix &m, const RatVector &v)
{
    if (m.cols() != v.size()) {
        throw std::invalid_argument("RatMatrix: shape mismatch in matrix-vector product");
    }
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!v[j].is_zero() && !m(i, j).is_zero()) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const RatMatrix &m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "" : ", ") << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x.is_zero(); });
}

RowEchelon rref(RatMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t p = pivot_row;
        while (p < rows && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != pivot_row) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(m(p, j), m(pivot_row, j));
            }
        }
        const Rational inv = Rational(1) / m(pivot_row, c);
        for (std::size_t j = c; j < cols; ++j) {
            if (!m(pivot_row, j).is_zero()) {
                m(pivot_row, j) *= inv;
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m(i, c).is_zero()) {
                continue;
            }
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                m(i, j).sub_mul(factor, m(pivot_row, j));
            }
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix &m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix &m)
{
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -reduced(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b)
{
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side has wrong length");
    }
    RatMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            augmented(i, j) = m(i, j);
        }
        augmented(i, m.cols()) = b[i];
    }
    const auto [reduced, pivots] = rref(std::move(augmented));
    if (!pivots.empty() && pivots.back() == m.cols()) {
        return std::nullopt;
    }
    RatVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = reduced(r, m.cols());
    }
    return x;
}

RatMatrix invert(const RatMatrix &m)
{
    if (!m.is_square()) {
        throw SingularMatrix();
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return m;
    }
    RatMatrix augmented(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            augmented(i, j) = m(i, j);
        }
        augmented(i, n + i) = 1;
    }
    const auto [reduced, pivots] = rref(std::move(augmented));
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw SingularMatrix();
    }
    return reduced.column_block(n, n);
}

RatMatrix random_invertible(std::size_t dim, std::uint64_t seed, int bound)
{
    Rng rng(mix_seed(seed, 0x1bu));
    for (;;) {
        RatMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                m(i, j) = rng.uniform(-bound, bound);
            }
        }
        if (rank(m) == dim) {
            return m;
        }
    }
}

RatMatrix random_unit_upper_triangular(std::size_t dim, std::uint64_t seed, int bound)
{
    Rng rng(mix_seed(seed, 0x2bu));
    RatMatrix m = RatMatrix::identity(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = rng.uniform(-bound, bound);
        }
    }
    return m;
}

} // namespace tableau
