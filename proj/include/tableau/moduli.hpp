#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tableau/involutivity.hpp"

// Endovolutive coefficient assignments for fixed characters, seen as points
// of an affine space whose coordinates are the free slots s_i < a <= s_lambda
// (1-based) of the B-array.

namespace tableau {

/// Free endovolutive slots (a, lambda, i, b) with lambda < i, b < s_lambda and
/// s_i <= a < s_lambda (0-based), in increasing order.
std::vector<SymbolIndex> free_variables(const CartanCharacters &characters);

/// 1-based name B[a,l,i,b].
std::string variable_name(const SymbolIndex &index);

/// Monomials of degree <= 2, keys are sorted variable lists.
using Monomial = std::vector<SymbolIndex>;

/// Graded order: higher degree first, then lexicographic in the variables.
struct MonomialOrder {
    bool operator()(const Monomial &x, const Monomial &y) const;
};

class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(const Rational &c);
    static Polynomial variable(const SymbolIndex &index);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t degree() const;
    [[nodiscard]] const std::map<Monomial, Rational, MonomialOrder> &terms() const { return terms_; }

    /// Missing variables count as zero.
    [[nodiscard]] Rational evaluate(const std::map<SymbolIndex, Rational> &point) const;
    /// Replaces the variables present in `values` by constants.
    [[nodiscard]] Polynomial substitute(const std::map<SymbolIndex, Rational> &values) const;
    /// Terms in MonomialOrder, e.g. "B[1,1,2,3]*B[2,1,3,1] - 2*B[3,1,3,3] + 1/2".
    [[nodiscard]] std::string str() const;

    Polynomial &operator+=(const Polynomial &rhs);
    Polynomial &operator-=(const Polynomial &rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial &rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial &rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void add_term(Monomial m, const Rational &c);

    std::map<Monomial, Rational, MonomialOrder> terms_;
};

/// One commutator entry (B^lambda_i B^mu_j - B^lambda_j B^mu_i)^a_b as a polynomial in the free slots.
struct IdealGenerator {
    std::size_t lambda;
    std::size_t mu;
    std::size_t i;
    std::size_t j;
    std::size_t a;
    std::size_t b;
    Polynomial polynomial;
};

/// Every nonzero commutator entry in the variant's index range, in the order
/// of quadratic_criterion, with no deduplication. r defaults to s_1.
std::vector<IdealGenerator> export_ideal(const CartanCharacters &characters, CriterionVariant variant = CriterionVariant::theorem,
                                         std::size_t r = 0);

/// Presentation with the free variables set to `values` (same order as free_variables).
SymbolPresentation presentation_from_assignment(std::size_t r, const CartanCharacters &characters,
                                                const std::vector<Rational> &values);

/// True when the characters of the presentation are the generic characters of
/// the tableau it defines, i.e. the bases it is written in are generic.
bool presentation_is_generic(const SymbolPresentation &p, std::uint64_t seed = 0, std::size_t trials = 32);

struct SamplingOptions {
    std::uint64_t seed = 0;
    std::size_t count = 10;
    std::vector<Rational> values{-1, 0, 1};
    CriterionVariant variant = CriterionVariant::theorem;
    std::size_t trials = 32;   ///< genericity certificate
    std::size_t attempts = 0;  ///< 0 means 200 * count + 1000
    std::size_t r = 0;         ///< 0 means s_1
};

struct SampleResult {
    std::vector<SymbolPresentation> presentations;
    std::size_t attempts = 0;
    std::size_t non_generic = 0;
    std::size_t rejected = 0;      ///< failed the quadratic criterion
    std::size_t disagreements = 0; ///< criterion passed but the oracle said otherwise; never kept
};

/// Seeded random assignments from `values`, kept when generic, passing the
/// quadratic criterion and confirmed involutive by the prolongation oracle.
SampleResult sample_involutive(const CartanCharacters &characters, const SamplingOptions &options = {});

struct CensusOptions {
    std::vector<Rational> values{-1, 0, 1};
    std::size_t cap = 100000;
    CriterionVariant variant = CriterionVariant::theorem;
    std::uint64_t seed = 0;
    std::size_t trials = 32;
    std::size_t r = 0;
};

struct CensusRecord {
    std::size_t variables = 0;
    std::size_t total = 0;
    std::size_t non_generic = 0;
    std::size_t involutive = 0;           ///< oracle verdict, generic assignments only
    std::size_t criterion_involutive = 0; ///< criterion verdict, generic assignments only
    std::size_t disagreements = 0;
    /// number of violated commutator entries -> number of generic assignments
    std::map<std::size_t, std::size_t> violation_histogram;
};

/// Exhaustive loop over values^variables assignments. Counts presentations,
/// not isomorphism classes. Throws CensusTooLarge if the total exceeds cap.
CensusRecord enumerate_census(const CartanCharacters &characters, const CensusOptions &options = {});

} // namespace tableau
