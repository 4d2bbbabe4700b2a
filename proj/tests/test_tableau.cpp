#include "doctest.h"

#include "support.hpp"
#include "tableau/errors.hpp"
#include "tableau/tableau.hpp"

using namespace tableau;
using fixtures::B;

namespace {

CartanCharacters chars(std::vector<std::size_t> s) { return CartanCharacters(std::move(s)); }

} // namespace

TEST_CASE("character bookkeeping")
{
    const auto s = chars({3, 1, 0});
    CHECK(s.ell() == 2);
    CHECK(s.sum() == 4);
    CHECK(s.cartan_bound() == 5);
    CHECK(s.is_decreasing());
    CHECK(chars({0, 0}).ell() == 0);
    CHECK_FALSE(chars({1, 2}).is_decreasing());
    CHECK_THROWS_AS(chars({1, 2}).validate(3), InvalidCharacters);
    CHECK_THROWS_AS(chars({4, 1}).validate(3), InvalidCharacters);
    CHECK(chars({2, 1}) > chars({1, 2}));
}

TEST_CASE("presentation slots are validated")
{
    CHECK_NOTHROW(SymbolPresentation(3, chars({3, 1, 0}), {{B(2, 1, 2, 3), 1}}));
    // a must exceed s_i
    CHECK_THROWS_AS(SymbolPresentation(3, chars({3, 1, 0}), {{B(1, 1, 2, 1), 1}}), InvalidPresentation);
    // b must not exceed s_lambda
    CHECK_THROWS_AS(SymbolPresentation(3, chars({3, 1, 0}), {{B(2, 2, 3, 2), 1}}), InvalidPresentation);
    // lambda <= i
    CHECK_THROWS_AS(SymbolPresentation(3, chars({3, 1, 0}), {{B(3, 2, 1, 1), 1}}), InvalidPresentation);
    // zero values are dropped
    CHECK(SymbolPresentation(3, chars({3, 1, 0}), {{B(2, 1, 2, 3), 0}}).coefficients().empty());
}

TEST_CASE("characters of simple tableaux")
{
    const auto full = Tableau::full(2, 3);
    CHECK(full.dim() == 6);
    CHECK(characters_in_basis(full, BasisPair::identity(2, 3)) == chars({2, 2, 2}));
    const BasisPair random{random_invertible(3, 4, 9), random_invertible(2, 5, 9)};
    CHECK(characters_in_basis(full, random) == chars({2, 2, 2}));
    CHECK(characters_in_basis(Tableau::zero(2, 3), BasisPair::identity(2, 3)) == chars({0, 0, 0}));
    CHECK_THROWS_AS(characters_in_basis(full, {RatMatrix(3, 3), RatMatrix::identity(2)}), InvalidBasis);
    CHECK_THROWS_AS(characters_in_basis(full, {RatMatrix::identity(2), RatMatrix::identity(2)}), InvalidBasis);
}

TEST_CASE("characters of the (3,2,1) example in its own basis")
{
    const auto A = tableau_from_coefficients(fixtures::example_321());
    CHECK(A.dim() == 6);
    CHECK(characters_in_basis(A, BasisPair::identity(3, 3)) == chars({3, 2, 1}));
}

TEST_CASE("generic basis search")
{
    SUBCASE("full tableau")
    {
        const auto g = find_generic_basis(Tableau::full(3, 4));
        CHECK(g.characters == chars({3, 3, 3, 3}));
    }
    SUBCASE("(3,1,0) example is already generic in its own basis")
    {
        fixtures::Values310 v;
        v.P1 = 1;
        v.T2 = 1;
        v.R3 = 1;
        const auto A = tableau_from_coefficients(fixtures::example_310(v));
        const auto g = find_generic_basis(A);
        CHECK(g.characters == chars({3, 1, 0}));
        CHECK(g.basis == BasisPair::identity(3, 3));
    }
    SUBCASE("a lone entry in the last column")
    {
        RatMatrix pi(2, 3);
        pi(1, 2) = 1;
        const Tableau A(2, 3, {pi});
        CHECK(characters_in_basis(A, BasisPair::identity(2, 3)) == chars({0, 0, 1}));
        const auto g = find_generic_basis(A);
        CHECK(g.characters == chars({1, 0, 0}));
        CHECK(has_staircase_generators(A, g.basis));
    }
    SUBCASE("zero tableau")
    {
        const auto g = find_generic_basis(Tableau::zero(2, 2));
        CHECK(g.characters == chars({0, 0}));
    }
}

TEST_CASE("generic characters are decreasing, sum to dim A and are stable under more trials")
{
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<RatMatrix> spanning;
        for (long k = rng.uniform(0, static_cast<long>(r * n)); k > 0; --k) {
            // sparse random elements so that the given basis is rarely generic
            RatMatrix m = fixtures::random_matrix(rng, r, n, -1, 1);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                if (rng.uniform(0, 1) == 0) {
                    for (std::size_t a = 0; a < r; ++a) {
                        m(a, j) = 0;
                    }
                }
            }
            spanning.push_back(std::move(m));
        }
        const Tableau A(r, n, spanning);
        const auto g = find_generic_basis(A, static_cast<std::uint64_t>(trial));
        CAPTURE(trial);
        CHECK(g.characters.is_decreasing());
        CHECK(g.characters.sum() == A.dim());
        CHECK(characters_in_basis(A, g.basis) == g.characters);
        CHECK(has_staircase_generators(A, g.basis));
        CHECK(find_generic_basis(A, static_cast<std::uint64_t>(trial), 96).characters == g.characters);
    }
}

TEST_CASE("unit upper-triangular V* changes never lower generic characters")
{
    Rng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = fixtures::random_characters(rng, 3, 3);
        const auto p = fixtures::random_endovolutive(rng, 3, s, -2, 2);
        const auto A = tableau_from_coefficients(p);
        const auto g = find_generic_basis(A);
        for (std::uint64_t k = 0; k < 3; ++k) {
            const BasisPair tweaked{g.basis.g * random_unit_upper_triangular(3, k, 4), g.basis.h};
            CHECK(characters_in_basis(A, tweaked) >= g.characters);
        }
    }
}

TEST_CASE("extraction recovers the original coefficients")
{
    SUBCASE("full tableau has no relations")
    {
        const auto p = extract_symbol_coefficients(Tableau::full(2, 3), BasisPair::identity(2, 3));
        CHECK(p.coefficients().empty());
        CHECK(p.characters() == chars({2, 2, 2}));
    }
    SUBCASE("(3,2,1)")
    {
        const auto p = fixtures::example_321();
        const auto q = extract_symbol_coefficients(tableau_from_coefficients(p), BasisPair::identity(3, 3));
        CHECK(q == p);
        CHECK(q.coefficient(B(3, 1, 2, 2)) == Rational(1));
        CHECK(q.coefficient(B(2, 2, 3, 2)) == Rational(3));
    }
    SUBCASE("non-decreasing characters are not generic")
    {
        RatMatrix pi(2, 3);
        pi(1, 2) = 1;
        CHECK_THROWS_AS(extract_symbol_coefficients(Tableau(2, 3, {pi}), BasisPair::identity(2, 3)), NonGenericBasis);
    }
}

TEST_CASE("coefficient round trip on random presentations")
{
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto s = fixtures::random_characters(rng, r, n);
        std::map<SymbolIndex, Rational> c;
        for (std::size_t lambda = 0; lambda < n; ++lambda) {
            for (std::size_t i = lambda; i < n; ++i) {
                for (std::size_t a = s[i]; a < r; ++a) {
                    for (std::size_t b = 0; b < s[lambda]; ++b) {
                        c[{a, lambda, i, b}] = Rational(rng.uniform(-3, 3), rng.uniform(1, 2));
                    }
                }
            }
        }
        const SymbolPresentation p(r, s, c);
        const auto A = tableau_from_coefficients(p);
        CHECK(A.dim() == s.sum());
        const auto q = extract_symbol_coefficients(A, BasisPair::identity(r, n));
        CHECK(q == p);
        CHECK(tableau_from_coefficients(q) == A);
    }
}

TEST_CASE("extraction in a transformed basis reproduces the subspace")
{
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = fixtures::random_characters(rng, 3, 3);
        const auto A = tableau_from_coefficients(fixtures::random_endovolutive(rng, 3, s, -2, 2));
        const auto g = find_generic_basis(A, static_cast<std::uint64_t>(trial));
        const auto p = extract_symbol_coefficients(A, g.basis);
        CHECK(tableau_from_coefficients(p) == A.transformed(g.basis));
        CHECK(A.transformed(g.basis).transformed(g.basis.inverse()) == A);
    }
}

TEST_CASE("tableau from coefficients")
{
    const auto A = tableau_from_coefficients(SymbolPresentation(1, chars({1, 0})));
    CHECK(A == Tableau(1, 2, {RatMatrix{{1, 0}}}));

    fixtures::Values310 v;
    v.P1 = 1;
    v.T2 = 1;
    v.R3 = 1;
    const auto B310 = tableau_from_coefficients(fixtures::example_310(v));
    CHECK(B310.dim() == 4);
    CHECK(B310.basis().size() == 4);
}

TEST_CASE("decomposition into generator components")
{
    const auto p = fixtures::example_321();
    const auto A = tableau_from_coefficients(p);

    const auto zero = decompose_element(p, RatMatrix(3, 3));
    REQUIRE(zero.size() == 3);
    for (const auto &c : zero) {
        CHECK(is_zero(c.z));
    }

    const auto first = decompose_element(p, generator_element(p, 0, 0));
    CHECK(first[0].z == RatVector{1, 0, 0});
    CHECK(is_zero(first[1].z));
    CHECK(is_zero(first[2].z));

    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix pi(3, 3);
        for (const auto &e : A.basis()) {
            pi += Rational(rng.uniform(-4, 4)) * e;
        }
        const auto parts = decompose_element(p, pi);
        RatMatrix rebuilt(3, 3);
        for (const auto &c : parts) {
            for (std::size_t a = p.characters()[c.lambda]; a < 3; ++a) {
                CHECK(c.z[a].is_zero());
            }
            rebuilt += compose_component(p, c);
        }
        CHECK(rebuilt == pi);
    }

    RatMatrix outside(3, 3);
    outside(2, 2) = 1;
    CHECK_FALSE(A.contains(outside));
    CHECK_THROWS_AS(decompose_element(p, outside), NotInTableau);
    CHECK_THROWS_AS(decompose_element(A, BasisPair::identity(3, 3), outside), NotInTableau);
}

TEST_CASE("restriction to U")
{
    const auto full = Tableau::full(3, 4);
    CHECK(restrict_to_U(full, BasisPair::identity(3, 4), 4) == full);
    CHECK(restrict_to_U(full, BasisPair::identity(3, 4), 2) == Tableau::full(3, 2));

    fixtures::Values310 v;
    v.P1 = 1;
    v.T2 = 1;
    v.R3 = 1;
    const auto A = tableau_from_coefficients(fixtures::example_310(v));
    const auto U = restrict_to_U(A, BasisPair::identity(3, 3), 2);
    CHECK(U.n() == 2);
    CHECK(U.r() == 3);
    CHECK(U.dim() == 4);
}

TEST_CASE("basis pair inverse")
{
    const BasisPair b{random_invertible(3, 1, 9), random_invertible(2, 2, 9)};
    CHECK_NOTHROW(b.validate(2, 3));
    const RatMatrix pi{{1, 2, 3}, {4, 5, 6}};
    CHECK(b.inverse().apply(b.apply(pi)) == pi);
}
