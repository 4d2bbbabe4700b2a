#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tableau/matrix.hpp"

// All indices in this library are 0-based. Documents, exported variable
// names and human-readable reports shift them to the 1-based convention
// used when writing tableaux by hand.

namespace tableau {

/// Cartan characters s_1, ..., s_n of a tableau.
class CartanCharacters {
public:
    CartanCharacters() = default;
    explicit CartanCharacters(std::vector<std::size_t> s) : s_(std::move(s)) {}

    [[nodiscard]] std::size_t n() const { return s_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t k) const { return s_[k]; }
    [[nodiscard]] const std::vector<std::size_t> &values() const { return s_; }

    /// Number of nonzero leading characters; 0 for the zero tableau.
    [[nodiscard]] std::size_t ell() const;
    /// s_1 + ... + s_n.
    [[nodiscard]] std::size_t sum() const;
    /// s_1 + 2 s_2 + ... + n s_n, the upper bound for dim A^(1).
    [[nodiscard]] std::size_t cartan_bound() const;
    [[nodiscard]] bool is_decreasing() const;

    /// Throws InvalidCharacters unless r >= s_1 >= ... >= s_n.
    void validate(std::size_t r) const;

    friend bool operator==(const CartanCharacters &, const CartanCharacters &) = default;
    friend auto operator<=>(const CartanCharacters &, const CartanCharacters &) = default;

private:
    std::vector<std::size_t> s_;
};

/// Position of a symbol coefficient B^{a,lambda}_{i,b}: the dependent entry
/// (a, i) of a tableau element as a multiple of the generator (b, lambda).
struct SymbolIndex {
    std::size_t a = 0;
    std::size_t lambda = 0;
    std::size_t i = 0;
    std::size_t b = 0;

    friend auto operator<=>(const SymbolIndex &, const SymbolIndex &) = default;
};

/// A tableau written through its symbol relations
///   pi^a_i = sum B^{a,lambda}_{i,b} pi^b_lambda   for a >= s_i,
/// with coefficients allowed only where lambda <= i, b < s_lambda, a >= s_i.
/// Only nonzero coefficients are stored.
class SymbolPresentation {
public:
    SymbolPresentation(std::size_t r, CartanCharacters characters, std::map<SymbolIndex, Rational> coefficients = {});

    [[nodiscard]] std::size_t r() const { return r_; }
    [[nodiscard]] std::size_t n() const { return characters_.n(); }
    [[nodiscard]] const CartanCharacters &characters() const { return characters_; }
    [[nodiscard]] const std::map<SymbolIndex, Rational> &coefficients() const { return coefficients_; }
    [[nodiscard]] Rational coefficient(const SymbolIndex &index) const;

    [[nodiscard]] static bool is_slot(const CartanCharacters &characters, std::size_t r, const SymbolIndex &index);

    friend bool operator==(const SymbolPresentation &, const SymbolPresentation &) = default;

private:
    std::size_t r_;
    CartanCharacters characters_;
    std::map<SymbolIndex, Rational> coefficients_;
};

/// Change of bases. An element pi of W (x) V* (an r x n matrix) is written as
/// h * pi * g in the new bases, so column j of the new matrix is sum_i g_ij pi_i.
/// Upper-triangular g preserves the flag <u_1> c <u_1, u_2> c ... of V.
struct BasisPair {
    RatMatrix g;
    RatMatrix h;

    static BasisPair identity(std::size_t r, std::size_t n);
    /// Throws InvalidBasis on wrong shapes or singular matrices.
    void validate(std::size_t r, std::size_t n) const;
    [[nodiscard]] RatMatrix apply(const RatMatrix &pi) const { return h * pi * g; }
    /// Inverse change: undo(apply(pi)) == pi.
    [[nodiscard]] BasisPair inverse() const;

    friend bool operator==(const BasisPair &, const BasisPair &) = default;
};

/// A linear subspace A of W (x) V*, stored as a canonical basis of r x n matrices.
class Tableau {
public:
    Tableau(std::size_t r, std::size_t n, const std::vector<RatMatrix> &spanning_set);

    static Tableau full(std::size_t r, std::size_t n);
    static Tableau zero(std::size_t r, std::size_t n);

    [[nodiscard]] std::size_t r() const { return r_; }
    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    /// Independent elements in reduced echelon form (entries flattened row-major).
    [[nodiscard]] const std::vector<RatMatrix> &basis() const { return basis_; }

    [[nodiscard]] bool contains(const RatMatrix &pi) const;
    [[nodiscard]] Tableau transformed(const BasisPair &basis) const;
    /// Image under truncation to the first `columns` columns.
    [[nodiscard]] Tableau truncated(std::size_t columns) const;

    friend bool operator==(const Tableau &, const Tableau &) = default;

private:
    std::size_t r_;
    std::size_t n_;
    std::vector<RatMatrix> basis_;
};

/// s_k = dim pi_{<=k}(A) - dim pi_{<=k-1}(A) for the projections onto leading
/// columns in the given bases. Not necessarily decreasing for a non-generic basis.
CartanCharacters characters_in_basis(const Tableau &tableau, const BasisPair &basis);

struct GenericBasis {
    BasisPair basis;
    CartanCharacters characters;
};

/// Lexicographically maximal characters among the identity V* basis and
/// `trials` seeded random bases (ties keep the earlier candidate), paired with
/// a W basis in which the generators sit in the leading rows of each column.
GenericBasis find_generic_basis(const Tableau &tableau, std::uint64_t seed = 0, std::size_t trials = 32);

/// True when, in the given bases, the staircase entries (a < s_i of column i)
/// restrict to coordinates on A.
bool has_staircase_generators(const Tableau &tableau, const BasisPair &basis);

/// Solves for the symbol coefficients in the given bases. Throws
/// NonGenericBasis if the characters in this basis are not decreasing or the
/// staircase entries do not determine the whole tableau.
SymbolPresentation extract_symbol_coefficients(const Tableau &tableau, const BasisPair &basis);

/// Element with generator coordinate z^b_lambda = 1 and all other generator coordinates 0.
RatMatrix generator_element(const SymbolPresentation &p, std::size_t lambda, std::size_t b);

/// Spanning set of one generator element per (lambda, b < s_lambda), in the
/// coordinates of the presentation.
Tableau tableau_from_coefficients(const SymbolPresentation &p);

struct Component {
    std::size_t lambda;
    RatVector z; ///< element of W^-_lambda: entries a >= s_lambda vanish
};

/// pi = sum_lambda B(u^lambda)(.) z_lambda with z^a_lambda = pi^a_lambda for
/// a < s_lambda. One component per lambda < ell. Throws NotInTableau.
std::vector<Component> decompose_element(const SymbolPresentation &p, const RatMatrix &pi);

/// Same as above for pi given in the original coordinates of `tableau`.
std::vector<Component> decompose_element(const Tableau &tableau, const BasisPair &basis, const RatMatrix &pi);

/// B(u^lambda)(.) z, the element of A^-_lambda determined by z in W^-_lambda.
RatMatrix compose_component(const SymbolPresentation &p, const Component &component);

/// A|_U: the image of A (in the given bases) under truncation to columns 1..ell.
Tableau restrict_to_U(const Tableau &tableau, const BasisPair &basis, std::size_t ell);

} // namespace tableau
