#include "tableau/guillemin.hpp"

#include <algorithm>
#include <stdexcept>

#include "tableau/errors.hpp"
#include "tableau/rng.hpp"

namespace tableau {

namespace {

constexpr long kPhiBound = 9;

void check_length(const BArray &b, const RatVector &x, const char *what)
{
    if (x.size() != b.n()) {
        throw std::invalid_argument(std::string(what) + " must have " + std::to_string(b.n()) + " entries");
    }
}

std::size_t first_nonzero_on_u(const BArray &b, const Covector &phi)
{
    check_length(b, phi, "covector");
    for (std::size_t k = 0; k < b.ell(); ++k) {
        if (!phi[k].is_zero()) {
            return k;
        }
    }
    throw ZeroCovector();
}

RatVector unit(std::size_t dim, std::size_t k)
{
    RatVector e(dim);
    e[k] = 1;
    return e;
}

} // namespace

Subspace w_minus(const CartanCharacters &characters, std::size_t r, std::size_t i)
{
    return Subspace::coordinate(r, 0, i < characters.n() ? characters[i] : 0);
}

Subspace w_plus(const CartanCharacters &characters, std::size_t r, std::size_t i)
{
    return Subspace::coordinate(r, i < characters.n() ? characters[i] : 0, r);
}

Subspace w_minus_of_phi(const BArray &b, const Covector &phi)
{
    return w_minus(b.characters(), b.r(), first_nonzero_on_u(b, phi));
}

RatMatrix b_of_phi(const BArray &b, const Covector &phi, const RatVector &v)
{
    check_length(b, phi, "covector");
    check_length(b, v, "vector");
    RatMatrix out(b.r(), b.r());
    for (std::size_t lambda = 0; lambda < b.ell(); ++lambda) {
        if (phi[lambda].is_zero()) {
            continue;
        }
        for (std::size_t i = lambda; i < b.n(); ++i) {
            if (!v[i].is_zero()) {
                out += (phi[lambda] * v[i]) * b.block(lambda, i);
            }
        }
    }
    return out;
}

Subspace w1_of_phi(const BArray &b, const Covector &phi)
{
    if (!b.is_endovolutive()) {
        throw NotEndovolutive("W^1(phi) requires an endovolutive presentation");
    }
    const std::size_t r = b.r();
    const std::size_t ell = b.ell();
    const std::size_t width = b.characters()[first_nonzero_on_u(b, phi)];
    // Rows mu*r .. mu*r+r-1 hold sum_lambda phi_lambda B^lambda_mu - phi_mu I,
    // restricted to the first `width` coordinates of z.
    RatMatrix system(ell * r, width);
    for (std::size_t mu = 0; mu < ell; ++mu) {
        RatMatrix m = Rational(-1) * (phi[mu] * RatMatrix::identity(r));
        for (std::size_t lambda = 0; lambda <= mu; ++lambda) {
            if (!phi[lambda].is_zero()) {
                m += phi[lambda] * b.block(lambda, mu);
            }
        }
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t c = 0; c < width; ++c) {
                system(mu * r + a, c) = m(a, c);
            }
        }
    }
    std::vector<RatVector> vectors;
    for (auto &y : kernel_basis(system)) {
        y.resize(r);
        vectors.push_back(std::move(y));
    }
    return Subspace::span(r, vectors);
}

std::map<std::size_t, std::size_t> dim_w1_histogram(const BArray &b, std::uint64_t seed, std::size_t trials)
{
    std::map<std::size_t, std::size_t> histogram;
    if (b.ell() == 0) {
        histogram[0] = trials;
        return histogram;
    }
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, t));
        Covector phi(b.n());
        bool zero = true;
        while (zero) {
            for (std::size_t k = 0; k < b.ell(); ++k) {
                phi[k] = Rational(rng.uniform(-kPhiBound, kPhiBound));
                zero = zero && phi[k].is_zero();
            }
        }
        ++histogram[w1_of_phi(b, phi).dim()];
    }
    return histogram;
}

std::size_t dim_w1_generic(const BArray &b, std::uint64_t seed, std::size_t trials)
{
    const auto histogram = dim_w1_histogram(b, seed, trials);
    // ties go to the smaller dimension
    const auto best = std::max_element(histogram.begin(), histogram.end(),
                                       [](const auto &x, const auto &y) { return x.second < y.second; });
    return best == histogram.end() ? 0 : best->first;
}

std::optional<A1Lift> lift_to_a1(const SymbolPresentation &p, const Covector &phi, const RatVector &z)
{
    const std::size_t r = p.r();
    const std::size_t n = p.n();
    const std::size_t ell = p.characters().ell();
    if (phi.size() != n || z.size() != r) {
        throw std::invalid_argument("lift_to_a1: covector or vector has the wrong length");
    }
    const Tableau A = tableau_from_coefficients(p);
    const auto &basis = A.basis();
    RatMatrix system(r * ell, basis.size());
    RatVector rhs(r * ell);
    for (std::size_t mu = 0; mu < ell; ++mu) {
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                system(mu * r + a, k) = basis[k](a, mu);
            }
            rhs[mu * r + a] = phi[mu] * z[a];
        }
    }
    const auto c = solve(system, rhs);
    if (!c) {
        return std::nullopt;
    }
    A1Lift lift{RatMatrix(r, n), RatMatrix(r, n)};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!(*c)[k].is_zero()) {
            lift.pi += (*c)[k] * basis[k];
        }
    }
    lift.J = lift.pi;
    for (std::size_t mu = 0; mu < ell; ++mu) {
        for (std::size_t a = 0; a < r; ++a) {
            lift.J(a, mu) -= phi[mu] * z[a];
        }
    }
    return lift;
}

GnfCheck check_gnf_commutativity(const BArray &b, const Covector &phi, const std::vector<RatVector> &samples)
{
    GnfCheck result;
    result.w1 = Subspace(b.r());
    if (b.ell() == 0) {
        return result;
    }
    result.w1 = w1_of_phi(b, phi);
    std::vector<RatVector> vectors = samples;
    for (std::size_t i = 0; i < b.n(); ++i) {
        vectors.push_back(unit(b.n(), i));
    }
    std::vector<RatMatrix> maps;
    maps.reserve(vectors.size());
    for (const auto &v : vectors) {
        maps.push_back(b_of_phi(b, phi, v));
    }
    const auto &w1 = result.w1.basis();
    for (std::size_t k = 0; k < maps.size(); ++k) {
        for (const auto &z : w1) {
            if (!result.w1.contains(maps[k] * z)) {
                result.passed = false;
                result.witness = GnfWitness{GnfWitness::Kind::not_invariant, vectors[k], {}, z};
                return result;
            }
        }
    }
    for (std::size_t k = 0; k < maps.size(); ++k) {
        for (std::size_t l = k + 1; l < maps.size(); ++l) {
            const RatMatrix commutator = maps[k] * maps[l] - maps[l] * maps[k];
            for (const auto &z : w1) {
                if (!is_zero(commutator * z)) {
                    result.passed = false;
                    result.witness = GnfWitness{GnfWitness::Kind::not_commuting, vectors[k], vectors[l], z};
                    return result;
                }
            }
        }
    }
    return result;
}

TheoremACheck check_theorem_a(const Tableau &tableau, const CartanTestOptions &options)
{
    TheoremACheck check;
    const auto generic = find_generic_basis(tableau, options.seed, options.trials);
    check.ell = generic.characters.ell();
    check.dim_A1 = prolongation_dimension(tableau).dim_A1;
    if (check.ell == 0) {
        // A = 0 and so is its restriction.
        check.restricted_involutive = true;
        check.holds = check.dim_A1 == 0;
        return check;
    }
    const Tableau restricted = restrict_to_U(tableau, generic.basis, check.ell);
    const auto report = cartan_test(restricted, options);
    check.dim_restricted_A1 = report.dim_A1;
    check.restricted_involutive = report.involutive;
    check.holds = check.dim_A1 == check.dim_restricted_A1 && check.restricted_involutive;
    return check;
}

} // namespace tableau
