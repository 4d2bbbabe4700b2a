#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tableau/involutivity.hpp"
#include "tableau/subspace.hpp"

// Structures attached to an endovolutive B-array: the coordinate flags
// W^-_i, W^+_i, the maps B(phi)(v) and the rank-one spaces W^1(phi).
// A covector phi is given by its n coordinates; only phi_1..phi_ell matter.

namespace tableau {

using Covector = RatVector;

/// W^-_i = <w_1, ..., w_{s_i}>; zero for i >= ell.
Subspace w_minus(const CartanCharacters &characters, std::size_t r, std::size_t i);
/// W^+_i = <w_{s_i + 1}, ..., w_r>.
Subspace w_plus(const CartanCharacters &characters, std::size_t r, std::size_t i);

/// W^-_k for k the first index with phi_k != 0. Throws ZeroCovector if phi vanishes on U.
Subspace w_minus_of_phi(const BArray &b, const Covector &phi);

/// sum over lambda < ell and i of phi_lambda v^i B^lambda_i.
RatMatrix b_of_phi(const BArray &b, const Covector &phi, const RatVector &v);

/// { z in W^-(phi) : (sum_lambda phi_lambda B^lambda_mu - phi_mu I) z = 0 for mu < ell }.
/// Throws ZeroCovector if phi vanishes on U, NotEndovolutive for a non-endovolutive array.
Subspace w1_of_phi(const BArray &b, const Covector &phi);

/// Modal dim W^1(phi) over `trials` seeded random phi in U* with entries in [-9, 9].
std::size_t dim_w1_generic(const BArray &b, std::uint64_t seed = 0, std::size_t trials = 16);

/// Histogram of the sampled dimensions behind dim_w1_generic.
std::map<std::size_t, std::size_t> dim_w1_histogram(const BArray &b, std::uint64_t seed = 0, std::size_t trials = 16);

/// An element of A^1(phi): pi in A whose columns 1..ell are phi_mu z, with
/// J = pi - z (x) phi supported on the Y* columns.
struct A1Lift {
    RatMatrix pi;
    RatMatrix J;
};

/// Lift of z in W^1(phi) to A^1(phi), found by solving the membership system
/// in the coordinates of the presentation. nullopt when z is not in W^1(phi).
std::optional<A1Lift> lift_to_a1(const SymbolPresentation &p, const Covector &phi, const RatVector &z);

struct GnfWitness {
    enum class Kind { not_invariant, not_commuting };
    Kind kind;
    RatVector v;
    RatVector v_tilde; ///< empty for not_invariant
    RatVector z;       ///< basis vector of W^1(phi) where the check fails
};

struct GnfCheck {
    bool passed = true;
    Subspace w1;
    std::optional<GnfWitness> witness;
};

/// For every v in the samples plus the coordinate basis of V: B(phi)(v) maps
/// W^1(phi) into itself, and every pair of such maps commutes on W^1(phi).
/// Passes vacuously when ell = 0. Throws ZeroCovector otherwise for phi = 0 on U.
GnfCheck check_gnf_commutativity(const BArray &b, const Covector &phi, const std::vector<RatVector> &samples = {});

struct TheoremACheck {
    std::size_t ell = 0;
    std::size_t dim_A1 = 0;
    std::size_t dim_restricted_A1 = 0;
    bool restricted_involutive = false;
    /// dim A^(1) == dim (A|_U)^(1) and A|_U passes Cartan's test.
    bool holds = false;
};

/// Compares the prolongations of A and of its restriction to U = <u_1..u_ell>
/// in a generic basis.
TheoremACheck check_theorem_a(const Tableau &tableau, const CartanTestOptions &options = {});

} // namespace tableau
