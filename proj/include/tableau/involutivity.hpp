#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tableau/tableau.hpp"

namespace tableau {

/// The ell x n array of r x r symbol endomorphisms B^lambda_i, with
///   (B^lambda_i)^a_b = delta^a_b           if lambda == i and a < s_lambda,
///   (B^lambda_i)^a_b = B^{a,lambda}_{i,b}  if a >= s_i,
/// and zero otherwise (in particular B^lambda_i = 0 for i < lambda).
class BArray {
public:
    explicit BArray(const SymbolPresentation &p);

    [[nodiscard]] std::size_t r() const { return r_; }
    [[nodiscard]] std::size_t n() const { return characters_.n(); }
    [[nodiscard]] std::size_t ell() const { return ell_; }
    [[nodiscard]] const CartanCharacters &characters() const { return characters_; }

    /// B^lambda_i for lambda < ell.
    [[nodiscard]] const RatMatrix &block(std::size_t lambda, std::size_t i) const { return blocks_[lambda * n() + i]; }

    /// Every block in row lambda vanishes outside its upper-left s_lambda square.
    [[nodiscard]] bool is_endovolutive() const;

    /// Inverse of construction.
    [[nodiscard]] SymbolPresentation presentation() const;

private:
    std::size_t r_;
    std::size_t ell_;
    CartanCharacters characters_;
    std::vector<RatMatrix> blocks_;
};

inline BArray build_b_array(const SymbolPresentation &p) { return BArray(p); }

struct EndovolutivityCheck {
    bool endovolutive = true;
    std::optional<SymbolIndex> offending; ///< first coefficient with a >= s_lambda
};

/// Endovolutive iff every stored coefficient B^{a,lambda}_{i,b} has a < s_lambda.
EndovolutivityCheck check_endovolutive(const SymbolPresentation &p);
inline bool is_endovolutive(const SymbolPresentation &p) { return check_endovolutive(p).endovolutive; }

struct EndovolutiveBasis {
    BasisPair basis;
    SymbolPresentation symbol;
};

/// Looks for a W basis in which the tableau is endovolutive. For a fixed V*
/// basis this happens exactly when, for each lambda, every column of every
/// element of A vanishing on u_1, ..., u_{lambda-1} lies in the span W'_lambda
/// of their lambda-th columns; any W basis adapted to the flag W'_1 > W'_2 > ...
/// then works. Attempt 0 uses the given V* basis; later attempts draw fresh
/// generic V* bases. nullopt means inconclusive, not a proof of non-existence.
std::optional<EndovolutiveBasis> search_endovolutive_basis(const Tableau &tableau, const BasisPair &basis,
                                                           std::size_t retries = 8, std::uint64_t seed = 0);

/// Index range for mu in the quadratic conditions: mu < j ("theorem") or mu <= j ("proof").
enum class CriterionVariant { theorem, proof };

std::string_view to_string(CriterionVariant variant);
/// Throws ParseError on anything but "theorem" or "proof".
CriterionVariant parse_variant(std::string_view text);

/// Nonzero entry (a, b) of B^lambda_i B^mu_j - B^lambda_j B^mu_i with
/// lambda < i < j, lambda <= mu and a >= s_i.
struct QuadraticViolation {
    std::size_t lambda;
    std::size_t mu;
    std::size_t i;
    std::size_t j;
    std::size_t a;
    std::size_t b;
    Rational value;

    friend bool operator==(const QuadraticViolation &, const QuadraticViolation &) = default;
};

/// Every nonzero commutator entry in the variant's index range, in the order
/// (lambda, i, j, mu, a, b). Throws NotEndovolutive.
std::vector<QuadraticViolation> quadratic_criterion(const BArray &b, CriterionVariant variant = CriterionVariant::theorem);

struct ProlongationDimensions {
    std::size_t dim_A1; ///< kernel of A (x) V* -> W (x) wedge^2 V*
    std::size_t dim_H2; ///< cokernel of the same map
};

/// Ground truth: exact kernel and cokernel dimensions of the prolonged symbol.
ProlongationDimensions prolongation_dimension(const Tableau &tableau);

struct CartanTestOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 32;
    CriterionVariant variant = CriterionVariant::theorem;
    std::size_t retries = 8;
};

struct InvolutivityReport {
    std::size_t r = 0;
    std::size_t n = 0;
    CartanCharacters characters;
    std::size_t dim_A = 0;
    std::size_t dim_A1 = 0;
    std::size_t cartan_bound = 0;
    bool involutive = false; ///< oracle verdict: dim_A1 == cartan_bound
    bool endovolutive = false;
    std::vector<QuadraticViolation> violations;
    std::size_t dim_H1 = 0;
    std::size_t dim_H2 = 0;
    CriterionVariant variant = CriterionVariant::theorem;
    BasisPair generic_basis;
    std::optional<BasisPair> endovolutive_basis;
    /// Criterion verdict; empty when no endovolutive basis was found.
    std::optional<bool> criterion_involutive;

    /// Checks the relations between the fields; returns a description of the
    /// first broken one, or nullopt.
    [[nodiscard]] std::optional<std::string> inconsistency() const;
};

InvolutivityReport cartan_test(const Tableau &tableau, const CartanTestOptions &options = {});

} // namespace tableau
