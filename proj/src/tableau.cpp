#include "tableau/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tableau/errors.hpp"
#include "tableau/rng.hpp"

namespace tableau {

namespace {

constexpr int kBasisEntryBound = 9;

struct Position {
    std::size_t row;
    std::size_t column;
};

// Staircase entries (a < s_i in column i), ordered column by column.
std::vector<Position> generator_positions(const CartanCharacters &characters)
{
    std::vector<Position> out;
    for (std::size_t i = 0; i < characters.n(); ++i) {
        for (std::size_t a = 0; a < characters[i]; ++a) {
            out.push_back({a, i});
        }
    }
    return out;
}

RatMatrix generator_coordinates(const std::vector<RatMatrix> &elements, const std::vector<Position> &positions)
{
    RatMatrix m(elements.size(), positions.size());
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (std::size_t p = 0; p < positions.size(); ++p) {
            m(k, p) = elements[k](positions[p].row, positions[p].column);
        }
    }
    return m;
}

CartanCharacters identity_characters(const Tableau &tableau)
{
    const std::size_t r = tableau.r();
    const std::size_t n = tableau.n();
    // Column-major flattening: ranks of leading column blocks are pivot counts.
    RatMatrix flat(tableau.dim(), r * n);
    for (std::size_t k = 0; k < tableau.dim(); ++k) {
        const auto &pi = tableau.basis()[k];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t a = 0; a < r; ++a) {
                flat(k, i * r + a) = pi(a, i);
            }
        }
    }
    std::vector<std::size_t> s(n, 0);
    for (const auto p : rref(std::move(flat)).pivots) {
        ++s[p / r];
    }
    return CartanCharacters(std::move(s));
}

} // namespace

std::size_t CartanCharacters::ell() const
{
    std::size_t last = 0;
    for (std::size_t k = 0; k < s_.size(); ++k) {
        if (s_[k] > 0) {
            last = k + 1;
        }
    }
    return last;
}

std::size_t CartanCharacters::sum() const { return std::accumulate(s_.begin(), s_.end(), std::size_t{0}); }

std::size_t CartanCharacters::cartan_bound() const
{
    std::size_t bound = 0;
    for (std::size_t k = 0; k < s_.size(); ++k) {
        bound += (k + 1) * s_[k];
    }
    return bound;
}

bool CartanCharacters::is_decreasing() const { return std::is_sorted(s_.rbegin(), s_.rend()); }

void CartanCharacters::validate(std::size_t r) const
{
    if (!is_decreasing()) {
        throw InvalidCharacters("characters must be weakly decreasing");
    }
    if (!s_.empty() && s_.front() > r) {
        throw InvalidCharacters("s_1 = " + std::to_string(s_.front()) + " exceeds r = " + std::to_string(r));
    }
}

SymbolPresentation::SymbolPresentation(std::size_t r, CartanCharacters characters,
                                       std::map<SymbolIndex, Rational> coefficients)
    : r_(r), characters_(std::move(characters))
{
    characters_.validate(r_);
    for (auto &[index, value] : coefficients) {
        if (!is_slot(characters_, r_, index)) {
            throw InvalidPresentation("coefficient B[" + std::to_string(index.a + 1) + "," +
                                      std::to_string(index.lambda + 1) + "," + std::to_string(index.i + 1) + "," +
                                      std::to_string(index.b + 1) + "] is outside the staircase");
        }
        if (!value.is_zero()) {
            coefficients_.emplace(index, std::move(value));
        }
    }
}

Rational SymbolPresentation::coefficient(const SymbolIndex &index) const
{
    const auto it = coefficients_.find(index);
    return it == coefficients_.end() ? Rational{} : it->second;
}

bool SymbolPresentation::is_slot(const CartanCharacters &characters, std::size_t r, const SymbolIndex &index)
{
    const std::size_t n = characters.n();
    return index.i < n && index.lambda <= index.i && index.b < characters[index.lambda] && index.a < r &&
           index.a >= characters[index.i];
}

BasisPair BasisPair::identity(std::size_t r, std::size_t n) { return {RatMatrix::identity(n), RatMatrix::identity(r)}; }

void BasisPair::validate(std::size_t r, std::size_t n) const
{
    if (g.rows() != n || g.cols() != n || h.rows() != r || h.cols() != r) {
        throw InvalidBasis("basis pair has the wrong shape");
    }
    if (rank(g) != n) {
        throw InvalidBasis("V* change of basis is singular");
    }
    if (rank(h) != r) {
        throw InvalidBasis("W change of basis is singular");
    }
}

BasisPair BasisPair::inverse() const { return {invert(g), invert(h)}; }

Tableau::Tableau(std::size_t r, std::size_t n, const std::vector<RatMatrix> &spanning_set) : r_(r), n_(n)
{
    RatMatrix flat(spanning_set.size(), r * n);
    for (std::size_t k = 0; k < spanning_set.size(); ++k) {
        const auto &pi = spanning_set[k];
        if (pi.rows() != r || pi.cols() != n) {
            throw InvalidPresentation("spanning matrix " + std::to_string(k) + " is not " + std::to_string(r) + "x" +
                                      std::to_string(n));
        }
        for (std::size_t e = 0; e < r * n; ++e) {
            flat(k, e) = pi.entries()[e];
        }
    }
    const auto [reduced, pivots] = rref(std::move(flat));
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        basis_.emplace_back(r, n, reduced.row(row));
    }
}

Tableau Tableau::full(std::size_t r, std::size_t n)
{
    std::vector<RatMatrix> units;
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            RatMatrix e(r, n);
            e(a, i) = 1;
            units.push_back(std::move(e));
        }
    }
    return {r, n, units};
}

Tableau Tableau::zero(std::size_t r, std::size_t n) { return {r, n, {}}; }

bool Tableau::contains(const RatMatrix &pi) const
{
    if (pi.rows() != r_ || pi.cols() != n_) {
        return false;
    }
    std::vector<RatMatrix> extended = basis_;
    extended.push_back(pi);
    return Tableau(r_, n_, extended).dim() == dim();
}

Tableau Tableau::transformed(const BasisPair &basis) const
{
    std::vector<RatMatrix> images;
    images.reserve(basis_.size());
    for (const auto &pi : basis_) {
        images.push_back(basis.apply(pi));
    }
    return {r_, n_, images};
}

Tableau Tableau::truncated(std::size_t columns) const
{
    std::vector<RatMatrix> images;
    images.reserve(basis_.size());
    for (const auto &pi : basis_) {
        images.push_back(pi.column_block(0, columns));
    }
    return {r_, columns, images};
}

CartanCharacters characters_in_basis(const Tableau &tableau, const BasisPair &basis)
{
    basis.validate(tableau.r(), tableau.n());
    return identity_characters(tableau.transformed(basis));
}

bool has_staircase_generators(const Tableau &tableau, const BasisPair &basis)
{
    const Tableau moved = tableau.transformed(basis);
    const auto positions = generator_positions(identity_characters(moved));
    if (positions.size() != moved.dim()) {
        return false;
    }
    return rank(generator_coordinates(moved.basis(), positions)) == moved.dim();
}

GenericBasis find_generic_basis(const Tableau &tableau, std::uint64_t seed, std::size_t trials)
{
    const std::size_t r = tableau.r();
    const std::size_t n = tableau.n();
    BasisPair best = BasisPair::identity(r, n);
    CartanCharacters best_characters = identity_characters(tableau);
    for (std::size_t t = 0; t < trials; ++t) {
        BasisPair candidate{random_invertible(n, mix_seed(seed, 2 * t), kBasisEntryBound), RatMatrix::identity(r)};
        auto characters = identity_characters(tableau.transformed(candidate));
        if (characters > best_characters) {
            best = std::move(candidate);
            best_characters = std::move(characters);
        }
    }
    // Generic g admits a W basis packing generators to the top; a random h
    // achieves it with probability one, so the loop terminates in practice.
    constexpr std::size_t kMaxWTrials = 1000;
    for (std::size_t t = 0; !has_staircase_generators(tableau, best); ++t) {
        if (t == kMaxWTrials) {
            throw NonGenericBasis("no W basis with staircase generators found");
        }
        best.h = random_invertible(r, mix_seed(seed, 2 * t + 1), kBasisEntryBound);
    }
    return {std::move(best), std::move(best_characters)};
}

SymbolPresentation extract_symbol_coefficients(const Tableau &tableau, const BasisPair &basis)
{
    basis.validate(tableau.r(), tableau.n());
    const std::size_t r = tableau.r();
    const std::size_t n = tableau.n();
    const Tableau moved = tableau.transformed(basis);
    const CartanCharacters characters = identity_characters(moved);
    if (!characters.is_decreasing()) {
        throw NonGenericBasis("characters in this basis are not weakly decreasing");
    }
    const auto positions = generator_positions(characters);
    const std::size_t d = moved.dim();
    if (positions.size() != d) {
        throw NonGenericBasis("staircase size differs from dim A");
    }
    RatMatrix coordinates = generator_coordinates(moved.basis(), positions);
    RatMatrix combination;
    try {
        combination = invert(coordinates);
    } catch (const SingularMatrix &) {
        throw NonGenericBasis("staircase entries are not independent on A");
    }
    std::map<SymbolIndex, Rational> coefficients;
    for (std::size_t p = 0; p < d; ++p) {
        RatMatrix element(r, n);
        for (std::size_t k = 0; k < d; ++k) {
            if (!combination(p, k).is_zero()) {
                element += combination(p, k) * moved.basis()[k];
            }
        }
        const std::size_t lambda = positions[p].column;
        const std::size_t b = positions[p].row;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t a = characters[i]; a < r; ++a) {
                const Rational &value = element(a, i);
                if (value.is_zero()) {
                    continue;
                }
                if (i < lambda) {
                    throw NonGenericBasis("dependent entry of column " + std::to_string(i + 1) +
                                          " depends on a later generator");
                }
                coefficients.emplace(SymbolIndex{a, lambda, i, b}, value);
            }
        }
    }
    return {r, characters, std::move(coefficients)};
}

RatMatrix generator_element(const SymbolPresentation &p, std::size_t lambda, std::size_t b)
{
    RatMatrix e(p.r(), p.n());
    e(b, lambda) = 1;
    for (const auto &[index, value] : p.coefficients()) {
        if (index.lambda == lambda && index.b == b) {
            e(index.a, index.i) = value;
        }
    }
    return e;
}

Tableau tableau_from_coefficients(const SymbolPresentation &p)
{
    std::vector<RatMatrix> elements;
    for (std::size_t lambda = 0; lambda < p.n(); ++lambda) {
        for (std::size_t b = 0; b < p.characters()[lambda]; ++b) {
            elements.push_back(generator_element(p, lambda, b));
        }
    }
    return {p.r(), p.n(), elements};
}

RatMatrix compose_component(const SymbolPresentation &p, const Component &component)
{
    RatMatrix pi(p.r(), p.n());
    for (std::size_t b = 0; b < p.characters()[component.lambda]; ++b) {
        if (!component.z[b].is_zero()) {
            pi += component.z[b] * generator_element(p, component.lambda, b);
        }
    }
    return pi;
}

std::vector<Component> decompose_element(const SymbolPresentation &p, const RatMatrix &pi)
{
    if (pi.rows() != p.r() || pi.cols() != p.n()) {
        throw NotInTableau();
    }
    std::vector<Component> components;
    RatMatrix rebuilt(p.r(), p.n());
    for (std::size_t lambda = 0; lambda < p.characters().ell(); ++lambda) {
        Component c{lambda, RatVector(p.r())};
        for (std::size_t a = 0; a < p.characters()[lambda]; ++a) {
            c.z[a] = pi(a, lambda);
        }
        rebuilt += compose_component(p, c);
        components.push_back(std::move(c));
    }
    if (rebuilt != pi) {
        throw NotInTableau();
    }
    return components;
}

std::vector<Component> decompose_element(const Tableau &tableau, const BasisPair &basis, const RatMatrix &pi)
{
    const auto p = extract_symbol_coefficients(tableau, basis);
    return decompose_element(p, basis.apply(pi));
}

Tableau restrict_to_U(const Tableau &tableau, const BasisPair &basis, std::size_t ell)
{
    return tableau.transformed(basis).truncated(ell);
}

} // namespace tableau
