#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tableau/matrix.hpp"

namespace tableau {

// Linear subspace of Q^ambient. The basis is kept in reduced row echelon
// form, so membership and equality reduce to rank comparisons.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, std::span<const RatVector> vectors);
    /// span(e_first, ..., e_{last-1}).
    static Subspace coordinate(std::size_t ambient, std::size_t first, std::size_t last);
    static Subspace whole(std::size_t ambient) { return coordinate(ambient, 0, ambient); }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<RatVector> &basis() const { return basis_; }

    [[nodiscard]] bool contains(const RatVector &v) const;
    [[nodiscard]] bool contains(const Subspace &other) const;
    [[nodiscard]] Subspace sum(const Subspace &other) const;
    [[nodiscard]] Subspace intersect(const Subspace &other) const;
    /// Image of this subspace under m (m.cols() == ambient_dim()).
    [[nodiscard]] Subspace image_under(const RatMatrix &m) const;

    /// Basis of `larger` whose leading vectors are `prefix`; extra vectors are
    /// drawn from `candidates` first, then from larger's own basis.
    static std::vector<RatVector> extend_basis(std::vector<RatVector> prefix, const Subspace &larger,
                                               std::span<const RatVector> candidates = {});

    friend bool operator==(const Subspace &lhs, const Subspace &rhs)
    {
        return lhs.ambient_ == rhs.ambient_ && lhs.basis_ == rhs.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<RatVector> basis_;
};

} // namespace tableau
