// Acceptance run: one PASS/FAIL line per criterion, details indented below it.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "document.hpp"
#include "support.hpp"
#include "tableau/errors.hpp"
#include "tableau/guillemin.hpp"
#include "tableau/moduli.hpp"

using namespace tableau;
using fixtures::B;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string &what)
    {
        if (!condition) {
            passed = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string &text) { notes.push_back(text); }
};

std::string data(const std::string &name) { return std::string(DATA_DIR) + "/" + name; }

std::string chars_str(const CartanCharacters &s)
{
    std::string out = "(";
    for (std::size_t k = 0; k < s.n(); ++k) {
        out += (k ? "," : "") + std::to_string(s[k]);
    }
    return out + ")";
}

RatMatrix diag(std::vector<Rational> d)
{
    RatMatrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        m(k, k) = d[k];
    }
    return m;
}

// Involutive samples shared by criteria 3, 6, 7 and 8.
struct Sample {
    SymbolPresentation p;
    Tableau A;
};
std::vector<Sample> involutive_samples;

Outcome criterion_1()
{
    Outcome o;
    cli::Options options;
    for (const auto &[name, expected_code] :
         std::vector<std::pair<std::string, int>>{{"tableau_310_involutive.json", 0}, {"tableau_310_not_involutive.json", 1}}) {
        const auto document = doc::read_document(data(name));
        std::ostringstream out;
        const int code = cli::cmd_analyze(document, options, out);
        const auto report = cartan_test(doc::to_tableau(document));
        o.require(code == expected_code, name + ": exit code " + std::to_string(code));
        if (expected_code == 0) {
            o.require(report.involutive && report.dim_A1 == 5 && report.cartan_bound == 5, name + ": dim A^(1) = 5");
        } else {
            o.require(!report.involutive && report.dim_A1 <= 4, name + ": dim A^(1) <= 4");
            o.require(!report.violations.empty(), name + ": at least one violation");
        }
        o.note(name + ": dim A^(1) = " + std::to_string(report.dim_A1) + ", violations " +
               std::to_string(report.violations.size()));
    }
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    std::ostringstream out;
    cli::cmd_characters(doc::read_document(data("tableau_321.json")), cli::Options{}, out);
    o.require(out.str().find("characters: 3 2 1, dim A = 6") != std::string::npos, "characters (3,2,1)");

    // distinct named values, so every slot is checked separately
    fixtures::Values321 v;
    v.P1 = 1, v.P2 = 2, v.P3 = 3, v.T1 = 4, v.T2 = 5, v.T3 = 6, v.R1 = 7, v.R2 = 8, v.R3 = 9, v.Q4 = 10, v.Q5 = 11;
    for (const auto &values : {fixtures::Values321{}, v}) {
        const auto p = fixtures::example_321(values);
        const BArray b = build_b_array(p);
        const auto &x = values;
        o.require(b.block(0, 0) == RatMatrix::identity(3), "B^1_1");
        o.require(b.block(0, 1) == RatMatrix{{0, 0, 0}, {0, 0, 0}, {x.P1, x.P2, x.P3}}, "B^1_2");
        o.require(b.block(0, 2) == RatMatrix{{0, 0, 0}, {x.T1, x.T2, x.T3}, {x.R1, x.R2, x.R3}}, "B^1_3");
        o.require(b.block(1, 1) == diag({1, 1, 0}), "B^2_2");
        o.require(b.block(1, 2) == RatMatrix{{0, 0, 0}, {x.Q4, x.Q5, 0}, {0, 0, 0}}, "B^2_3");
        o.require(b.block(2, 2) == diag({1, 0, 0}), "B^3_3");
        o.require(b.is_endovolutive() && is_endovolutive(p), "endovolutive");
    }
    o.note("six blocks reproduced for the default values and for P,T,R,Q = 1..11");
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    Rng rng(2024);
    std::size_t generic = 0;
    std::size_t skipped = 0;
    std::size_t involutive = 0;
    std::size_t disagree[2] = {0, 0};
    std::map<std::string, std::size_t> breakdown[2];
    while (generic < 500) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto s = fixtures::random_characters(rng, r, n);
        const auto p = fixtures::random_endovolutive(rng, r, s, -2, 2);
        if (!presentation_is_generic(p)) {
            ++skipped;
            continue;
        }
        ++generic;
        auto A = tableau_from_coefficients(p);
        const bool oracle = prolongation_dimension(A).dim_A1 == s.cartan_bound();
        const BArray b(p);
        for (int k = 0; k < 2; ++k) {
            const auto variant = k == 0 ? CriterionVariant::theorem : CriterionVariant::proof;
            const auto violations = quadratic_criterion(b, variant);
            if (violations.empty() != oracle) {
                ++disagree[k];
                const auto &v = violations.front();
                ++breakdown[k][std::string(k == 0 ? "theorem" : "proof") + ": r=" + std::to_string(r) + " s=" + chars_str(s) + (oracle ? " oracle involutive" : " oracle not involutive") +
                               ", first violation (lambda,mu,i,j)=(" + std::to_string(v.lambda + 1) + "," +
                               std::to_string(v.mu + 1) + "," + std::to_string(v.i + 1) + "," +
                               std::to_string(v.j + 1) + ")"];
            }
        }
        if (oracle) {
            ++involutive;
            involutive_samples.push_back({p, std::move(A)});
        }
    }
    o.note(std::to_string(generic) + " generic presentations (" + std::to_string(skipped) +
           " non-generic skipped), " + std::to_string(involutive) + " involutive");
    for (int k = 0; k < 2; ++k) {
        const char *name = k == 0 ? "theorem" : "proof";
        o.note(std::string("variant ") + name + (k == 0 ? " (default)" : "") + ": agreement " +
               std::to_string(generic - disagree[k]) + "/" + std::to_string(generic));
        for (const auto &[what, count] : breakdown[k]) {
            o.note("  " + std::to_string(count) + "x " + what);
        }
    }
    o.require(disagree[0] == 0, "default variant agrees with the oracle on every sample");
    o.require(disagree[0] == 0 || disagree[1] == 0, "some variant agrees with the oracle on every sample");
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    Rng rng(4);
    std::size_t n1 = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        std::vector<RatMatrix> spanning;
        for (long k = rng.uniform(0, static_cast<long>(r)); k > 0; --k) {
            spanning.push_back(fixtures::random_matrix(rng, r, 1, -2, 2));
        }
        const auto report = cartan_test(Tableau(r, 1, spanning));
        n1 += report.involutive ? 1 : 0;
    }
    o.require(n1 == 200, "n = 1: all involutive");
    std::size_t n2 = 0;
    std::size_t n2_criterion = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto s = fixtures::random_characters(rng, r, 2);
        const auto p = fixtures::random_endovolutive(rng, r, s, -2, 2);
        n2 += cartan_test(tableau_from_coefficients(p)).involutive ? 1 : 0;
        n2_criterion += quadratic_criterion(BArray(p)).empty() ? 1 : 0;
    }
    o.require(n2 == 200, "n = 2: all endovolutive presentations involutive");
    o.require(n2_criterion == 200, "n = 2: quadratic criterion empty");
    o.note("n = 1: " + std::to_string(n1) + "/200 involutive; n = 2: " + std::to_string(n2) + "/200 involutive");
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    const std::vector<Covector> phis_u1{{1, 0, 0}};
    const std::vector<Covector> phis_mixed{{0, 1, 0}, {1, 1, 0}, {3, -2, 0}, {-1, 5, 7}};
    std::size_t families = 0;
    std::size_t non_involutive = 0;
    for (long t2 = -2; t2 <= 2; ++t2) {
        for (long r3 = -2; r3 <= 2; ++r3) {
            const auto p = fixtures::example_310(t2, r3);
            const BArray b(p);
            ++families;
            non_involutive += t2 != r3 ? 1 : 0;
            for (const auto &phi : phis_u1) {
                o.require(w1_of_phi(b, phi).dim() == 2, "dim W^1(u^1) = 2");
                o.require(check_gnf_commutativity(b, phi).passed, "commutativity at u^1");
            }
            for (const auto &phi : phis_mixed) {
                o.require(w1_of_phi(b, phi).dim() == 1, "dim W^1(phi) = 1 for phi_2 != 0");
                o.require(check_gnf_commutativity(b, phi).passed, "commutativity for phi_2 != 0");
            }
        }
    }
    o.note(std::to_string(families) + " members (T2, R3 in -2..2), " + std::to_string(non_involutive) +
           " of them not involutive, all pass the commutativity check");
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    std::size_t checked = 0;
    for (const auto &sample : involutive_samples) {
        const auto &s = sample.p.characters();
        const std::size_t ell = s.ell();
        const std::size_t expected = ell == 0 ? 0 : s[ell - 1];
        const std::size_t got = dim_w1_generic(BArray(sample.p));
        if (got != expected) {
            o.require(false, "dim W^1 = s_ell for s = " + chars_str(s) + " (got " + std::to_string(got) + ")");
        }
        ++checked;
    }
    o.require(checked > 0, "some involutive samples");
    o.note(std::to_string(checked) + " involutive samples checked");
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    std::size_t checked = 0;
    for (const auto &sample : involutive_samples) {
        const auto check = check_theorem_a(sample.A);
        if (!check.holds) {
            o.require(false, "restriction to U for s = " + chars_str(sample.p.characters()));
        }
        ++checked;
    }
    o.require(checked > 0, "some involutive samples");
    o.note(std::to_string(checked) + " involutive samples checked");
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    std::size_t samples = 0;
    std::size_t changes = 0;
    // largest n first, so the changes actually mix columns
    std::vector<const Sample *> order;
    for (const auto &sample : involutive_samples) {
        order.push_back(&sample);
    }
    std::stable_sort(order.begin(), order.end(), [](const Sample *x, const Sample *y) { return x->p.n() > y->p.n(); });
    for (const Sample *pointer : order) {
        const Sample &sample = *pointer;
        if (samples == 50) {
            break;
        }
        const std::size_t n = sample.p.n();
        const std::size_t r = sample.p.r();
        for (std::uint64_t k = 0; k < 5; ++k) {
            const BasisPair borel{random_unit_upper_triangular(n, mix_seed(samples, k), 3), RatMatrix::identity(r)};
            try {
                const auto q = extract_symbol_coefficients(sample.A, borel);
                o.require(q.characters() == sample.p.characters(), "characters preserved");
                o.require(is_endovolutive(q), "endovolutive after a unit upper-triangular change");
                o.require(prolongation_dimension(tableau_from_coefficients(q)).dim_A1 == q.characters().cartan_bound(),
                          "involutive after a unit upper-triangular change");
            } catch (const Error &e) {
                o.require(false, std::string("re-extraction: ") + e.what());
            }
            ++changes;
        }
        ++samples;
    }
    o.require(samples == 50, "50 involutive samples available");
    o.note(std::to_string(samples) + " samples (n >= " + std::to_string(order.empty() ? 0 : order[std::min<std::size_t>(49, order.size() - 1)]->p.n()) +
           ") x 5 changes = " + std::to_string(changes) + " re-extractions");
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    Rng rng(9);
    for (const auto &s : {CartanCharacters({3, 1, 0}), CartanCharacters({1, 1, 1})}) {
        const auto ideal = export_ideal(s);
        const auto variables = free_variables(s);
        // half uniform points, half points already on the variety
        std::vector<SymbolPresentation> points;
        for (int k = 0; k < 50; ++k) {
            std::vector<Rational> values(variables.size());
            for (auto &x : values) {
                x = Rational(rng.uniform(-2, 2));
            }
            points.push_back(presentation_from_assignment(0, s, values));
        }
        SamplingOptions sampling;
        sampling.seed = 9;
        sampling.count = 50;
        sampling.values = {0, 1};
        for (auto &p : sample_involutive(s, sampling).presentations) {
            points.push_back(std::move(p));
        }
        o.require(points.size() == 100, "100 points for s = " + chars_str(s));
        std::size_t vanishing = 0;
        for (const auto &p : points) {
            bool zero = true;
            for (const auto &g : ideal) {
                zero = zero && g.polynomial.evaluate(p.coefficients()).is_zero();
            }
            const bool empty = quadratic_criterion(BArray(p)).empty();
            o.require(zero == empty, "ideal vanishes iff criterion empty at s = " + chars_str(s));
            vanishing += zero ? 1 : 0;
        }
        o.note(chars_str(s) + ": " + std::to_string(ideal.size()) + " generators, vanishing at " +
               std::to_string(vanishing) + "/" + std::to_string(points.size()) + " points");
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 (3,1,0) example: involutive iff T2 = R3", criterion_1},
        {"2 (3,2,1) example: characters, B-array, endovolutive", criterion_2},
        {"3 quadratic criterion matches the prolongation oracle", criterion_3},
        {"4 n = 1 and endovolutive n = 2 are involutive", criterion_4},
        {"5 W^1(phi) dimensions and commutativity on (3,1,0)", criterion_5},
        {"6 dim W^1(phi) = s_ell on involutive samples", criterion_6},
        {"7 prolongation of A equals that of A restricted to U", criterion_7},
        {"8 unit upper-triangular changes keep endovolutive and involutive", criterion_8},
        {"9 exported ideal vanishes iff the criterion is empty", criterion_9},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds);
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << " (" << timing << ")\n";
        // identical failure lines are collapsed
        std::map<std::string, std::size_t> seen;
        for (const auto &line : o.notes) {
            if (++seen[line] == 1) {
                std::cout << "    " << line << "\n";
            }
        }
        failures += o.passed ? 0 : 1;
    }
    std::cout << (9 - failures) << "/9 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
