#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tableau/rational.hpp"

namespace tableau {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
    static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);
    static RatMatrix column_vector(const RatVector &v);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Rational &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Rational> entries() const { return entries_; }
    [[nodiscard]] RatVector row(std::size_t i) const;
    [[nodiscard]] RatVector column(std::size_t j) const;
    [[nodiscard]] RatMatrix transpose() const;
    /// Columns [first, first + count).
    [[nodiscard]] RatMatrix column_block(std::size_t first, std::size_t count) const;
    [[nodiscard]] bool is_zero() const;

    RatMatrix &operator+=(const RatMatrix &rhs);
    RatMatrix &operator-=(const RatMatrix &rhs);
    RatMatrix &operator*=(const Rational &scalar);

    friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator+(RatMatrix lhs, const RatMatrix &rhs);
RatMatrix operator-(RatMatrix lhs, const RatMatrix &rhs);
RatMatrix operator*(const RatMatrix &lhs, const RatMatrix &rhs);
RatMatrix operator*(const Rational &scalar, RatMatrix m);
RatVector operator*(const RatMatrix &m, const RatVector &v);

inline RatMatrix matmul(const RatMatrix &lhs, const RatMatrix &rhs) { return lhs * rhs; }

std::ostream &operator<<(std::ostream &os, const RatMatrix &m);

bool is_zero(std::span<const Rational> v);

struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot for each
/// column is the first nonzero entry at or below the current pivot row.
RowEchelon rref(RatMatrix m);

std::size_t rank(const RatMatrix &m);

/// Exactly cols - rank independent vectors spanning the right kernel.
std::vector<RatVector> kernel_basis(const RatMatrix &m);

/// A particular solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b);

/// Throws SingularMatrix unless m is square and full rank.
RatMatrix invert(const RatMatrix &m);

/// Invertible dim x dim matrix with integer entries in [-bound, bound].
/// Deterministic per seed.
RatMatrix random_invertible(std::size_t dim, std::uint64_t seed, int bound);

/// Unit upper-triangular dim x dim matrix with off-diagonal integer entries in [-bound, bound].
RatMatrix random_unit_upper_triangular(std::size_t dim, std::uint64_t seed, int bound);

} // namespace tableau
