#include "tableau/involutivity.hpp"

#include <string>

#include "tableau/errors.hpp"
#include "tableau/rng.hpp"
#include "tableau/subspace.hpp"

namespace tableau {

namespace {

constexpr int kBasisEntryBound = 9;

// Elements of A whose first `lambda` columns vanish.
std::vector<RatMatrix> vanishing_on_leading_columns(const Tableau &tableau, std::size_t lambda)
{
    const auto &basis = tableau.basis();
    if (lambda == 0) {
        return basis;
    }
    const std::size_t r = tableau.r();
    RatMatrix system(r * lambda, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t i = 0; i < lambda; ++i) {
            for (std::size_t a = 0; a < r; ++a) {
                system(i * r + a, k) = basis[k](a, i);
            }
        }
    }
    std::vector<RatMatrix> out;
    for (const auto &c : kernel_basis(system)) {
        RatMatrix pi(r, tableau.n());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!c[k].is_zero()) {
                pi += c[k] * basis[k];
            }
        }
        out.push_back(std::move(pi));
    }
    return out;
}

std::optional<EndovolutiveBasis> accept_if_endovolutive(const Tableau &tableau, const BasisPair &basis,
                                                        const CartanCharacters &target)
{
    try {
        auto symbol = extract_symbol_coefficients(tableau, basis);
        if (symbol.characters() == target && is_endovolutive(symbol)) {
            return EndovolutiveBasis{basis, std::move(symbol)};
        }
    } catch (const NonGenericBasis &) {
    }
    return std::nullopt;
}

// W basis adapted to the flag W'_1 > ... > W'_ell for a fixed V* basis, or
// nullopt when some element of A_{>=lambda} has a column outside W'_lambda.
std::optional<RatMatrix> adapted_w_basis(const Tableau &tableau, const RatMatrix &g, const RatMatrix &current_h,
                                         const CartanCharacters &target)
{
    const std::size_t r = tableau.r();
    const std::size_t n = tableau.n();
    const Tableau moved = tableau.transformed({g, RatMatrix::identity(r)});
    std::vector<Subspace> flag;
    for (std::size_t lambda = 0; lambda < target.ell(); ++lambda) {
        const auto elements = vanishing_on_leading_columns(moved, lambda);
        std::vector<RatVector> leading;
        std::vector<RatVector> all_columns;
        for (const auto &pi : elements) {
            leading.push_back(pi.column(lambda));
            for (std::size_t i = lambda; i < n; ++i) {
                all_columns.push_back(pi.column(i));
            }
        }
        Subspace w_lambda = Subspace::span(r, leading);
        if (w_lambda.dim() != target[lambda] || Subspace::span(r, all_columns).dim() != w_lambda.dim()) {
            return std::nullopt;
        }
        flag.push_back(std::move(w_lambda));
    }
    // Prefer the current W basis vectors when they fit the flag.
    const RatMatrix current = invert(current_h);
    std::vector<RatVector> candidates;
    for (std::size_t a = 0; a < r; ++a) {
        candidates.push_back(current.column(a));
    }
    std::vector<RatVector> adapted;
    for (auto it = flag.rbegin(); it != flag.rend(); ++it) {
        adapted = Subspace::extend_basis(std::move(adapted), *it, candidates);
    }
    adapted = Subspace::extend_basis(std::move(adapted), Subspace::whole(r), candidates);
    return invert(RatMatrix::from_columns(adapted, r));
}

} // namespace

BArray::BArray(const SymbolPresentation &p)
    : r_(p.r()), ell_(p.characters().ell()), characters_(p.characters()),
      blocks_(ell_ * p.n(), RatMatrix(p.r(), p.r()))
{
    for (std::size_t lambda = 0; lambda < ell_; ++lambda) {
        for (std::size_t a = 0; a < characters_[lambda]; ++a) {
            blocks_[lambda * n() + lambda](a, a) = 1;
        }
    }
    for (const auto &[index, value] : p.coefficients()) {
        blocks_[index.lambda * n() + index.i](index.a, index.b) = value;
    }
}

bool BArray::is_endovolutive() const
{
    for (std::size_t lambda = 0; lambda < ell_; ++lambda) {
        for (std::size_t i = 0; i < n(); ++i) {
            const auto &m = block(lambda, i);
            for (std::size_t a = 0; a < r_; ++a) {
                for (std::size_t b = 0; b < r_; ++b) {
                    const bool inside = a < characters_[lambda] && b < characters_[lambda];
                    if (!inside && !m(a, b).is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SymbolPresentation BArray::presentation() const
{
    std::map<SymbolIndex, Rational> coefficients;
    for (std::size_t lambda = 0; lambda < ell_; ++lambda) {
        for (std::size_t i = 0; i < n(); ++i) {
            const auto &m = block(lambda, i);
            for (std::size_t a = characters_[i]; a < r_; ++a) {
                for (std::size_t b = 0; b < r_; ++b) {
                    if (!m(a, b).is_zero()) {
                        coefficients.emplace(SymbolIndex{a, lambda, i, b}, m(a, b));
                    }
                }
            }
        }
    }
    return {r_, characters_, std::move(coefficients)};
}

EndovolutivityCheck check_endovolutive(const SymbolPresentation &p)
{
    for (const auto &[index, value] : p.coefficients()) {
        if (index.a >= p.characters()[index.lambda]) {
            return {false, index};
        }
    }
    return {};
}

std::optional<EndovolutiveBasis> search_endovolutive_basis(const Tableau &tableau, const BasisPair &basis,
                                                           std::size_t retries, std::uint64_t seed)
{
    basis.validate(tableau.r(), tableau.n());
    const CartanCharacters target = characters_in_basis(tableau, basis);
    if (auto found = accept_if_endovolutive(tableau, basis, target)) {
        return found;
    }
    for (std::size_t attempt = 0; attempt <= retries; ++attempt) {
        RatMatrix g = basis.g;
        if (attempt > 0) {
            g = basis.g * random_invertible(tableau.n(), mix_seed(seed, 0x5eed0000u + attempt), kBasisEntryBound);
            if (characters_in_basis(tableau, {g, RatMatrix::identity(tableau.r())}) != target) {
                continue;
            }
        }
        const auto h = adapted_w_basis(tableau, g, basis.h, target);
        if (!h) {
            continue;
        }
        if (auto found = accept_if_endovolutive(tableau, {std::move(g), *h}, target)) {
            return found;
        }
    }
    return std::nullopt;
}

std::string_view to_string(CriterionVariant variant)
{
    return variant == CriterionVariant::theorem ? "theorem" : "proof";
}

CriterionVariant parse_variant(std::string_view text)
{
    if (text == "theorem") {
        return CriterionVariant::theorem;
    }
    if (text == "proof") {
        return CriterionVariant::proof;
    }
    throw ParseError("variant must be 'theorem' or 'proof', got '" + std::string(text) + "'");
}

std::vector<QuadraticViolation> quadratic_criterion(const BArray &b, CriterionVariant variant)
{
    if (!b.is_endovolutive()) {
        throw NotEndovolutive("quadratic criterion requires an endovolutive presentation");
    }
    const std::size_t r = b.r();
    const std::size_t n = b.n();
    const std::size_t ell = b.ell();
    const auto &s = b.characters();
    std::vector<QuadraticViolation> out;
    for (std::size_t lambda = 0; lambda < ell; ++lambda) {
        for (std::size_t i = lambda + 1; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::size_t mu_end = variant == CriterionVariant::theorem ? j : j + 1;
                for (std::size_t mu = lambda; mu < mu_end && mu < ell; ++mu) {
                    const RatMatrix commutator = b.block(lambda, i) * b.block(mu, j) - b.block(lambda, j) * b.block(mu, i);
                    for (std::size_t a = s[i]; a < r; ++a) {
                        for (std::size_t col = 0; col < r; ++col) {
                            if (!commutator(a, col).is_zero()) {
                                out.push_back({lambda, mu, i, j, a, col, commutator(a, col)});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

ProlongationDimensions prolongation_dimension(const Tableau &tableau)
{
    const std::size_t r = tableau.r();
    const std::size_t n = tableau.n();
    const std::size_t d = tableau.dim();
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    // pair index of u^p ^ u^q, p < q
    std::vector<std::size_t> pair_index(n * n, 0);
    for (std::size_t p = 0, k = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q, ++k) {
            pair_index[p * n + q] = k;
        }
    }
    // Column (k, j) is the image of basis element pi_k (x) u^j:
    // sum_{a,i} pi^a_i w_a (x) u^i ^ u^j.
    RatMatrix delta(r * pairs, d * n);
    for (std::size_t k = 0; k < d; ++k) {
        const auto &pi = tableau.basis()[k];
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t column = k * n + j;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) {
                    continue;
                }
                for (std::size_t a = 0; a < r; ++a) {
                    if (pi(a, i).is_zero()) {
                        continue;
                    }
                    if (i < j) {
                        delta(a * pairs + pair_index[i * n + j], column) += pi(a, i);
                    } else {
                        delta(a * pairs + pair_index[j * n + i], column) -= pi(a, i);
                    }
                }
            }
        }
    }
    const std::size_t image = rank(delta);
    return {d * n - image, r * pairs - image};
}

std::optional<std::string> InvolutivityReport::inconsistency() const
{
    if (characters.n() != n) {
        return "characters length differs from n";
    }
    if (!characters.is_decreasing()) {
        return "characters are not weakly decreasing";
    }
    if (characters.sum() != dim_A) {
        return "sum of characters differs from dim A";
    }
    if (cartan_bound != characters.cartan_bound()) {
        return "cartan_bound differs from s_1 + 2 s_2 + ... + n s_n";
    }
    if (dim_A1 > cartan_bound) {
        return "dim A^(1) exceeds the Cartan bound";
    }
    if (involutive != (dim_A1 == cartan_bound)) {
        return "involutive flag disagrees with dim A^(1) == cartan_bound";
    }
    if (dim_H1 + dim_A != r * n) {
        return "dim H^1 differs from r n - dim A";
    }
    if (dim_A * n - dim_A1 + dim_H2 != r * n * (n > 0 ? n - 1 : 0) / 2) {
        return "rank-nullity fails for the prolonged symbol";
    }
    if (endovolutive != endovolutive_basis.has_value() || endovolutive != criterion_involutive.has_value()) {
        return "endovolutive flag disagrees with the recorded basis";
    }
    if (criterion_involutive && *criterion_involutive != violations.empty()) {
        return "criterion verdict disagrees with the violation list";
    }
    if (!endovolutive && !violations.empty()) {
        return "violations listed without an endovolutive presentation";
    }
    for (const auto &v : violations) {
        if (v.value.is_zero() || !(v.lambda < v.i && v.i < v.j && v.lambda <= v.mu && v.mu <= v.j) ||
            v.a < characters[v.i] || v.a >= r || v.b >= r) {
            return "violation entry out of range";
        }
        if (variant == CriterionVariant::theorem && v.mu == v.j) {
            return "violation with mu == j under the theorem variant";
        }
    }
    return std::nullopt;
}

InvolutivityReport cartan_test(const Tableau &tableau, const CartanTestOptions &options)
{
    InvolutivityReport report;
    report.r = tableau.r();
    report.n = tableau.n();
    report.variant = options.variant;
    auto generic = find_generic_basis(tableau, options.seed, options.trials);
    report.characters = generic.characters;
    report.generic_basis = generic.basis;
    report.dim_A = tableau.dim();
    report.cartan_bound = report.characters.cartan_bound();
    report.dim_H1 = report.r * report.n - report.dim_A;
    const auto dims = prolongation_dimension(tableau);
    report.dim_A1 = dims.dim_A1;
    report.dim_H2 = dims.dim_H2;
    report.involutive = report.dim_A1 == report.cartan_bound;

    if (auto found = search_endovolutive_basis(tableau, generic.basis, options.retries, options.seed)) {
        report.endovolutive = true;
        report.violations = quadratic_criterion(BArray(found->symbol), options.variant);
        report.criterion_involutive = report.violations.empty();
        report.endovolutive_basis = std::move(found->basis);
    }
    return report;
}

} // namespace tableau
