#include "tableau/moduli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tableau/errors.hpp"
#include "tableau/rng.hpp"

namespace tableau {

namespace {

std::size_t resolve_r(const CartanCharacters &characters, std::size_t r)
{
    if (r == 0) {
        r = characters.n() == 0 ? 0 : characters[0];
    }
    characters.validate(r);
    return r;
}

// Symbolic B-array entry (B^lambda_i)^a_b in endovolutive form.
Polynomial symbolic_entry(const CartanCharacters &s, std::size_t lambda, std::size_t i, std::size_t a, std::size_t b)
{
    if (lambda == i) {
        return a == b && a < s[lambda] ? Polynomial::constant(1) : Polynomial{};
    }
    if (lambda < i && s[i] <= a && a < s[lambda] && b < s[lambda]) {
        return Polynomial::variable({a, lambda, i, b});
    }
    return {};
}

struct Verdict {
    bool generic;
    bool criterion;
    bool oracle;
    std::size_t violations;
};

Verdict judge(const SymbolPresentation &p, CriterionVariant variant, std::uint64_t seed, std::size_t trials)
{
    Verdict v{presentation_is_generic(p, seed, trials), false, false, 0};
    if (!v.generic) {
        return v;
    }
    v.violations = quadratic_criterion(BArray(p), variant).size();
    v.criterion = v.violations == 0;
    v.oracle = prolongation_dimension(tableau_from_coefficients(p)).dim_A1 == p.characters().cartan_bound();
    return v;
}

} // namespace

std::vector<SymbolIndex> free_variables(const CartanCharacters &characters)
{
    std::vector<SymbolIndex> out;
    const std::size_t n = characters.n();
    for (std::size_t lambda = 0; lambda < n; ++lambda) {
        for (std::size_t i = lambda + 1; i < n; ++i) {
            for (std::size_t a = characters[i]; a < characters[lambda]; ++a) {
                for (std::size_t b = 0; b < characters[lambda]; ++b) {
                    out.push_back({a, lambda, i, b});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string variable_name(const SymbolIndex &index)
{
    return "B[" + std::to_string(index.a + 1) + "," + std::to_string(index.lambda + 1) + "," +
           std::to_string(index.i + 1) + "," + std::to_string(index.b + 1) + "]";
}

bool MonomialOrder::operator()(const Monomial &x, const Monomial &y) const
{
    if (x.size() != y.size()) {
        return x.size() > y.size();
    }
    return x < y;
}

Polynomial Polynomial::constant(const Rational &c)
{
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(const SymbolIndex &index)
{
    Polynomial p;
    p.add_term({index}, 1);
    return p;
}

std::size_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

void Polynomial::add_term(Monomial m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs)
{
    Polynomial out;
    for (const auto &[m1, c1] : lhs.terms_) {
        for (const auto &[m2, c2] : rhs.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            if (m.size() > 2) {
                throw std::logic_error("polynomial degree exceeds 2");
            }
            out.add_term(std::move(m), c1 * c2);
        }
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<SymbolIndex, Rational> &point) const
{
    Rational total;
    for (const auto &[m, c] : terms_) {
        Rational term = c;
        for (const auto &x : m) {
            const auto it = point.find(x);
            if (it == point.end()) {
                term = 0;
                break;
            }
            term *= it->second;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<SymbolIndex, Rational> &values) const
{
    Polynomial out;
    for (const auto &[m, c] : terms_) {
        Rational coefficient = c;
        Monomial rest;
        for (const auto &x : m) {
            const auto it = values.find(x);
            if (it == values.end()) {
                rest.push_back(x);
            } else {
                coefficient *= it->second;
            }
        }
        out.add_term(std::move(rest), coefficient);
    }
    return out;
}

std::string Polynomial::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string factors;
        for (const auto &x : m) {
            factors += (factors.empty() ? "" : "*") + variable_name(x);
        }
        if (factors.empty()) {
            os << magnitude.str();
        } else if (magnitude == Rational(1)) {
            os << factors;
        } else {
            os << magnitude.str() << "*" << factors;
        }
    }
    return os.str();
}

std::vector<IdealGenerator> export_ideal(const CartanCharacters &characters, CriterionVariant variant, std::size_t r)
{
    r = resolve_r(characters, r);
    const std::size_t n = characters.n();
    const std::size_t ell = characters.ell();
    const auto entry = [&](std::size_t lambda, std::size_t i, std::size_t a, std::size_t b) {
        return symbolic_entry(characters, lambda, i, a, b);
    };
    std::vector<IdealGenerator> out;
    for (std::size_t lambda = 0; lambda < ell; ++lambda) {
        for (std::size_t i = lambda + 1; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::size_t mu_end = variant == CriterionVariant::theorem ? j : j + 1;
                for (std::size_t mu = lambda; mu < mu_end && mu < ell; ++mu) {
                    for (std::size_t a = characters[i]; a < r; ++a) {
                        for (std::size_t b = 0; b < r; ++b) {
                            Polynomial value;
                            for (std::size_t k = 0; k < r; ++k) {
                                value += entry(lambda, i, a, k) * entry(mu, j, k, b);
                                value -= entry(lambda, j, a, k) * entry(mu, i, k, b);
                            }
                            if (!value.is_zero()) {
                                out.push_back({lambda, mu, i, j, a, b, std::move(value)});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

SymbolPresentation presentation_from_assignment(std::size_t r, const CartanCharacters &characters,
                                                const std::vector<Rational> &values)
{
    const auto variables = free_variables(characters);
    if (values.size() != variables.size()) {
        throw InvalidPresentation("expected " + std::to_string(variables.size()) + " values, got " +
                                  std::to_string(values.size()));
    }
    std::map<SymbolIndex, Rational> coefficients;
    for (std::size_t k = 0; k < variables.size(); ++k) {
        coefficients.emplace(variables[k], values[k]);
    }
    return {resolve_r(characters, r), characters, std::move(coefficients)};
}

bool presentation_is_generic(const SymbolPresentation &p, std::uint64_t seed, std::size_t trials)
{
    return find_generic_basis(tableau_from_coefficients(p), seed, trials).characters == p.characters();
}

SampleResult sample_involutive(const CartanCharacters &characters, const SamplingOptions &options)
{
    if (options.values.empty()) {
        throw std::invalid_argument("sampling needs at least one value");
    }
    const std::size_t r = resolve_r(characters, options.r);
    const std::size_t limit = options.attempts == 0 ? 200 * options.count + 1000 : options.attempts;
    const std::size_t variables = free_variables(characters).size();
    Rng rng(mix_seed(options.seed, 0x5a));
    SampleResult result;
    while (result.presentations.size() < options.count && result.attempts < limit) {
        ++result.attempts;
        std::vector<Rational> point(variables);
        for (auto &x : point) {
            x = options.values[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(options.values.size()) - 1))];
        }
        auto p = presentation_from_assignment(r, characters, point);
        const Verdict v = judge(p, options.variant, options.seed, options.trials);
        if (!v.generic) {
            ++result.non_generic;
        } else if (!v.criterion) {
            ++result.rejected;
        } else if (!v.oracle) {
            ++result.disagreements;
        } else {
            result.presentations.push_back(std::move(p));
        }
    }
    return result;
}

CensusRecord enumerate_census(const CartanCharacters &characters, const CensusOptions &options)
{
    if (options.values.empty()) {
        throw std::invalid_argument("census needs at least one value");
    }
    const std::size_t r = resolve_r(characters, options.r);
    CensusRecord record;
    record.variables = free_variables(characters).size();
    const std::size_t base = options.values.size();
    std::size_t total = 1;
    for (std::size_t k = 0; k < record.variables; ++k) {
        if (total > options.cap / base) {
            throw CensusTooLarge(std::to_string(base) + "^" + std::to_string(record.variables) +
                                 " assignments exceed the cap of " + std::to_string(options.cap));
        }
        total *= base;
    }
    if (total > options.cap) {
        throw CensusTooLarge("census exceeds the cap of " + std::to_string(options.cap));
    }
    record.total = total;
    std::vector<std::size_t> digits(record.variables, 0);
    std::vector<Rational> point(record.variables);
    for (std::size_t count = 0; count < total; ++count) {
        for (std::size_t k = 0; k < record.variables; ++k) {
            point[k] = options.values[digits[k]];
        }
        const Verdict v = judge(presentation_from_assignment(r, characters, point), options.variant, options.seed,
                                options.trials);
        if (!v.generic) {
            ++record.non_generic;
        } else {
            record.involutive += v.oracle ? 1 : 0;
            record.criterion_involutive += v.criterion ? 1 : 0;
            record.disagreements += v.oracle != v.criterion ? 1 : 0;
            ++record.violation_histogram[v.violations];
        }
        // odometer, last variable fastest
        for (std::size_t k = record.variables; k > 0; --k) {
            if (++digits[k - 1] < base) {
                break;
            }
            digits[k - 1] = 0;
        }
    }
    return record;
}

} // namespace tableau
