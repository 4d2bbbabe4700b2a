#pragma once

#include <map>
#include <vector>

#include "tableau/rng.hpp"
#include "tableau/tableau.hpp"

namespace fixtures {

using tableau::CartanCharacters;
using tableau::Rational;
using tableau::SymbolIndex;
using tableau::SymbolPresentation;

// 1-based index helper, matching the way the examples are written by hand.
inline SymbolIndex B(std::size_t a, std::size_t lambda, std::size_t i, std::size_t b)
{
    return {a - 1, lambda - 1, i - 1, b - 1};
}

struct Values310 {
    Rational P1, P2, P3;
    Rational T2, T3, R3;
    Rational Q;
};

// r = 3, characters (3,1,0):
//   B^1_2 = E_23, B^1_3 = [[P1,P2,P3],[0,T2,T3],[0,0,R3]], B^2_3 = Q E_11.
inline SymbolPresentation example_310(const Values310 &v)
{
    std::map<SymbolIndex, Rational> c{
        {B(2, 1, 2, 3), 1},   {B(1, 1, 3, 1), v.P1}, {B(1, 1, 3, 2), v.P2}, {B(1, 1, 3, 3), v.P3},
        {B(2, 1, 3, 2), v.T2}, {B(2, 1, 3, 3), v.T3}, {B(3, 1, 3, 3), v.R3}, {B(1, 2, 3, 1), v.Q},
    };
    return {3, CartanCharacters({3, 1, 0}), c};
}

inline SymbolPresentation example_310(Rational T2, Rational R3)
{
    Values310 v;
    v.T2 = T2;
    v.R3 = R3;
    return example_310(v);
}

// Defaults satisfy the quadratic conditions (R1 = P2 Q4, R2 = P2 Q5,
// P2 T + P3 R = R3 P), so the tableau is involutive and its own basis is
// generic. Arbitrary values may give generic characters (3,3,0) instead.
struct Values321 {
    Rational P1 = 0, P2 = 1, P3 = 0;
    Rational T1 = 0, T2 = 4, T3 = 0;
    Rational R1 = 2, R2 = 3, R3 = 4;
    Rational Q4 = 2, Q5 = 3;
};

// r = 3, characters (3,2,1):
//   B^1_2 row 3 = (P1,P2,P3); B^1_3 rows 2,3 = (T), (R); B^2_3 row 2 = (Q4,Q5,0).
inline SymbolPresentation example_321(const Values321 &v = {})
{
    std::map<SymbolIndex, Rational> c{
        {B(3, 1, 2, 1), v.P1}, {B(3, 1, 2, 2), v.P2}, {B(3, 1, 2, 3), v.P3}, {B(2, 1, 3, 1), v.T1},
        {B(2, 1, 3, 2), v.T2}, {B(2, 1, 3, 3), v.T3}, {B(3, 1, 3, 1), v.R1}, {B(3, 1, 3, 2), v.R2},
        {B(3, 1, 3, 3), v.R3}, {B(2, 2, 3, 1), v.Q4}, {B(2, 2, 3, 2), v.Q5},
    };
    return {3, CartanCharacters({3, 2, 1}), c};
}

// Random weakly decreasing characters bounded by r, of length n.
inline CartanCharacters random_characters(tableau::Rng &rng, std::size_t r, std::size_t n)
{
    std::vector<std::size_t> s(n);
    long top = static_cast<long>(r);
    for (auto &x : s) {
        x = static_cast<std::size_t>(rng.uniform(0, top));
        top = static_cast<long>(x);
    }
    return CartanCharacters(std::move(s));
}

// Random endovolutive presentation: every free slot s_i <= a < s_lambda filled from [lo, hi].
inline SymbolPresentation random_endovolutive(tableau::Rng &rng, std::size_t r, const CartanCharacters &s, long lo,
                                              long hi)
{
    std::map<SymbolIndex, Rational> c;
    for (std::size_t lambda = 0; lambda < s.n(); ++lambda) {
        for (std::size_t i = lambda + 1; i < s.n(); ++i) {
            for (std::size_t a = s[i]; a < s[lambda]; ++a) {
                for (std::size_t b = 0; b < s[lambda]; ++b) {
                    c[{a, lambda, i, b}] = Rational(rng.uniform(lo, hi));
                }
            }
        }
    }
    return {r, s, c};
}

// Random matrix with entries in [lo, hi].
inline tableau::RatMatrix random_matrix(tableau::Rng &rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    tableau::RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Rational(rng.uniform(lo, hi));
        }
    }
    return m;
}

} // namespace fixtures
