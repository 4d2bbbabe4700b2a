#include "tableau/subspace.hpp"

#include <stdexcept>

namespace tableau {

Subspace Subspace::span(std::size_t ambient, std::span<const RatVector> vectors)
{
    Subspace s(ambient);
    if (vectors.empty()) {
        return s;
    }
    const auto [reduced, pivots] = rref(RatMatrix::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        s.basis_.push_back(reduced.row(r));
    }
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, std::size_t first, std::size_t last)
{
    Subspace s(ambient);
    for (std::size_t k = first; k < last; ++k) {
        RatVector e(ambient);
        e[k] = 1;
        s.basis_.push_back(std::move(e));
    }
    return s;
}

bool Subspace::contains(const RatVector &v) const
{
    if (v.size() != ambient_) {
        throw std::invalid_argument("Subspace::contains: dimension mismatch");
    }
    if (is_zero(v)) {
        return true;
    }
    std::vector<RatVector> rows = basis_;
    rows.push_back(v);
    return rank(RatMatrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace &other) const { return sum(other).dim() == dim(); }

Subspace Subspace::sum(const Subspace &other) const
{
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("Subspace::sum: dimension mismatch");
    }
    std::vector<RatVector> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace &other) const
{
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("Subspace::intersect: dimension mismatch");
    }
    // Solve sum_k x_k b_k - sum_l y_l c_l = 0 and map the x part back.
    const std::size_t p = basis_.size();
    const std::size_t q = other.basis_.size();
    RatMatrix system(ambient_, p + q);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < ambient_; ++i) {
            system(i, k) = basis_[k][i];
        }
    }
    for (std::size_t l = 0; l < q; ++l) {
        for (std::size_t i = 0; i < ambient_; ++i) {
            system(i, p + l) = -other.basis_[l][i];
        }
    }
    std::vector<RatVector> vectors;
    for (const auto &x : kernel_basis(system)) {
        RatVector v(ambient_);
        for (std::size_t k = 0; k < p; ++k) {
            if (x[k].is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < ambient_; ++i) {
                v[i] += x[k] * basis_[k][i];
            }
        }
        vectors.push_back(std::move(v));
    }
    return span(ambient_, vectors);
}

Subspace Subspace::image_under(const RatMatrix &m) const
{
    if (m.cols() != ambient_) {
        throw std::invalid_argument("Subspace::image_under: dimension mismatch");
    }
    std::vector<RatVector> images;
    images.reserve(basis_.size());
    for (const auto &b : basis_) {
        images.push_back(m * b);
    }
    return span(m.rows(), images);
}

std::vector<RatVector> Subspace::extend_basis(std::vector<RatVector> prefix, const Subspace &larger,
                                              std::span<const RatVector> candidates)
{
    const std::size_t n = larger.ambient_dim();
    auto current_rank = rank(RatMatrix::from_rows(prefix, n));
    if (current_rank != prefix.size()) {
        throw std::invalid_argument("Subspace::extend_basis: prefix is not independent");
    }
    for (const auto &v : prefix) {
        if (!larger.contains(v)) {
            throw std::invalid_argument("Subspace::extend_basis: prefix is not contained in the larger space");
        }
    }
    const auto try_add = [&](const RatVector &v) {
        if (current_rank == larger.dim() || !larger.contains(v)) {
            return;
        }
        prefix.push_back(v);
        const auto r = rank(RatMatrix::from_rows(prefix, n));
        if (r > current_rank) {
            current_rank = r;
        } else {
            prefix.pop_back();
        }
    };
    for (const auto &v : candidates) {
        try_add(v);
    }
    for (const auto &v : larger.basis()) {
        try_add(v);
    }
    if (current_rank != larger.dim()) {
        throw std::invalid_argument("Subspace::extend_basis: prefix is not contained in the larger space");
    }
    return prefix;
}

} // namespace tableau
