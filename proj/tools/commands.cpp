#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tableau/errors.hpp"
#include "tableau/guillemin.hpp"
#include "tableau/moduli.hpp"

namespace tableau::cli {

namespace {

using doc::json;
using doc::TableauDocument;

std::string join_values(const std::vector<std::size_t> &xs)
{
    std::string out;
    for (const auto x : xs) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
    }
    return out;
}

std::string vector_str(const RatVector &v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k ? ", " : "") + v[k].str();
    }
    return out + ")";
}

json vector_json(const RatVector &v)
{
    json out = json::array();
    for (const auto &x : v) {
        out.push_back(doc::rational_to_json(x));
    }
    return out;
}

json subspace_json(const Subspace &s)
{
    json out = json::array();
    for (const auto &v : s.basis()) {
        out.push_back(vector_json(v));
    }
    return out;
}

void print_matrix(std::ostream &out, const std::string &name, const RatMatrix &m)
{
    out << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << std::setw(4) << m(i, j).str();
        }
        out << "\n";
    }
}

void print_basis(std::ostream &out, const std::string &title, const BasisPair &basis)
{
    out << title << "\n";
    print_matrix(out, "  g (V*)", basis.g);
    print_matrix(out, "  h (W)", basis.h);
}

std::string index_str(std::size_t lambda, std::size_t mu, std::size_t i, std::size_t j, std::size_t a, std::size_t b)
{
    std::ostringstream os;
    os << "lambda=" << lambda + 1 << " mu=" << mu + 1 << " i=" << i + 1 << " j=" << j + 1 << " a=" << a + 1
       << " b=" << b + 1;
    return os.str();
}

// Endovolutive presentation for the gnf command, with the bases it is written in.
struct Endovolutive {
    SymbolPresentation symbol;
    std::optional<BasisPair> basis; ///< empty: the document's own coordinates
};

Endovolutive endovolutive_presentation(const TableauDocument &document, const Options &options)
{
    if (document.kind == TableauDocument::Kind::coefficients) {
        auto p = doc::to_presentation(document);
        if (!is_endovolutive(p)) {
            const auto bad = *check_endovolutive(p).offending;
            throw NotEndovolutive("coefficient " + variable_name(bad) + " has a > s_lambda");
        }
        return {std::move(p), std::nullopt};
    }
    const Tableau A = doc::to_tableau(document);
    const auto generic = find_generic_basis(A, options.seed, options.trials);
    auto found = search_endovolutive_basis(A, generic.basis, 8, options.seed);
    if (!found) {
        throw NotEndovolutive("no endovolutive basis found (inconclusive)");
    }
    return {std::move(found->symbol), std::move(found->basis)};
}

void print_sampling_summary(std::ostream &out, const SampleResult &result)
{
    out << "kept: " << result.presentations.size() << "\n"
        << "attempts: " << result.attempts << "\n"
        << "non-generic: " << result.non_generic << "\n"
        << "rejected by the criterion: " << result.rejected << "\n"
        << "criterion/oracle disagreements: " << result.disagreements << "\n";
}

} // namespace

std::vector<Rational> parse_rational_list(const std::string &text, const std::string &what)
{
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    std::size_t k = 0;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        try {
            out.push_back(Rational::parse(item));
        } catch (const ParseError &e) {
            throw ParseError(what + "[" + std::to_string(k) + "]: " + e.what());
        }
        ++k;
    }
    if (out.empty()) {
        throw ParseError(what + ": empty list");
    }
    return out;
}

int cmd_characters(const TableauDocument &document, const Options &options, std::ostream &out)
{
    const Tableau A = doc::to_tableau(document);
    const auto generic = find_generic_basis(A, options.seed, options.trials);
    const std::size_t dim_H1 = A.r() * A.n() - A.dim();
    if (options.json) {
        json report;
        report["r"] = A.r();
        report["n"] = A.n();
        report["characters"] = generic.characters.values();
        report["dim_A"] = A.dim();
        report["dim_H1"] = dim_H1;
        report["generic_basis"] = {{"g", doc::matrix_to_json(generic.basis.g)}, {"h", doc::matrix_to_json(generic.basis.h)}};
        out << report.dump(2) << "\n";
        return 0;
    }
    out << "characters: " << join_values(generic.characters.values()) << ", dim A = " << A.dim() << "\n";
    out << "dim H^1 = " << dim_H1 << "\n";
    print_basis(out, "generic basis:", generic.basis);
    return 0;
}

int cmd_analyze(const TableauDocument &document, const Options &options, std::ostream &out)
{
    CartanTestOptions test;
    test.seed = options.seed;
    test.trials = options.trials;
    test.variant = options.variant;
    const auto report = cartan_test(doc::to_tableau(document), test);
    if (const auto problem = report.inconsistency()) {
        throw std::logic_error("inconsistent report: " + *problem);
    }
    const int code = !report.endovolutive ? exit_error : report.involutive ? exit_involutive : exit_not_involutive;
    if (options.json) {
        out << doc::report_to_json(report).dump(2) << "\n";
        return code;
    }
    out << "r = " << report.r << ", n = " << report.n << "\n";
    out << "characters: " << join_values(report.characters.values()) << ", dim A = " << report.dim_A << "\n";
    out << "dim A^(1) = " << report.dim_A1 << ", Cartan bound = " << report.cartan_bound << "\n";
    out << "dim H^1 = " << report.dim_H1 << ", dim H^2 = " << report.dim_H2 << "\n";
    out << "oracle: " << (report.involutive ? "involutive" : "not involutive") << "\n";
    if (!report.endovolutive) {
        out << "endovolutive basis: not found (inconclusive)\n";
    } else {
        out << "endovolutive basis: found\n";
        out << "quadratic criterion (" << to_string(report.variant) << "): "
            << (*report.criterion_involutive ? "satisfied" : "violated") << "\n";
        for (const auto &v : report.violations) {
            out << "  violation " << index_str(v.lambda, v.mu, v.i, v.j, v.a, v.b) << " value " << v.value << "\n";
        }
        if (*report.criterion_involutive != report.involutive) {
            out << "warning: criterion and oracle disagree\n";
        }
    }
    print_basis(out, "generic basis:", report.generic_basis);
    if (report.endovolutive_basis) {
        print_basis(out, "endovolutive basis:", *report.endovolutive_basis);
    }
    return code;
}

int cmd_gnf(const TableauDocument &document, const RatVector &phi, const Options &options, std::ostream &out)
{
    if (phi.size() != document.n) {
        throw InvalidDocument("phi: expected " + std::to_string(document.n) + " entries");
    }
    const auto presentation = endovolutive_presentation(document, options);
    const BArray b(presentation.symbol);
    const auto w_minus = w_minus_of_phi(b, phi);
    const auto check = check_gnf_commutativity(b, phi);
    if (options.json) {
        json report;
        report["phi"] = vector_json(phi);
        report["characters"] = b.characters().values();
        report["w_minus"] = subspace_json(w_minus);
        report["w1"] = subspace_json(check.w1);
        report["passed"] = check.passed;
        if (presentation.basis) {
            report["basis"] = {{"g", doc::matrix_to_json(presentation.basis->g)},
                               {"h", doc::matrix_to_json(presentation.basis->h)}};
        }
        if (check.witness) {
            const auto &w = *check.witness;
            report["witness"] = {{"kind", w.kind == GnfWitness::Kind::not_invariant ? "not_invariant" : "not_commuting"},
                                 {"v", vector_json(w.v)},
                                 {"v_tilde", vector_json(w.v_tilde)},
                                 {"z", vector_json(w.z)}};
        }
        out << report.dump(2) << "\n";
        return check.passed ? 0 : 1;
    }
    out << "phi = " << vector_str(phi) << "\n";
    out << "W^-(phi): dim " << w_minus.dim() << "\n";
    for (const auto &v : w_minus.basis()) {
        out << "  " << vector_str(v) << "\n";
    }
    out << "W^1(phi): dim " << check.w1.dim() << "\n";
    for (const auto &v : check.w1.basis()) {
        out << "  " << vector_str(v) << "\n";
    }
    if (check.passed) {
        out << "B(phi)(v) preserves W^1(phi) and the maps commute on it\n";
    } else {
        const auto &w = *check.witness;
        if (w.kind == GnfWitness::Kind::not_invariant) {
            out << "B(phi)(v) does not preserve W^1(phi): v = " << vector_str(w.v) << ", z = " << vector_str(w.z) << "\n";
        } else {
            out << "B(phi)(v) and B(phi)(v') do not commute on W^1(phi): v = " << vector_str(w.v)
                << ", v' = " << vector_str(w.v_tilde) << ", z = " << vector_str(w.z) << "\n";
        }
    }
    if (presentation.basis) {
        print_basis(out, "basis used:", *presentation.basis);
    }
    return check.passed ? 0 : 1;
}

int cmd_ideal(const CartanCharacters &characters, std::size_t r, const Options &options, std::ostream &out)
{
    const auto ideal = export_ideal(characters, options.variant, r);
    if (options.json) {
        json generators = json::array();
        for (const auto &g : ideal) {
            generators.push_back({{"lambda", g.lambda + 1},
                                  {"mu", g.mu + 1},
                                  {"i", g.i + 1},
                                  {"j", g.j + 1},
                                  {"a", g.a + 1},
                                  {"b", g.b + 1},
                                  {"polynomial", g.polynomial.str()}});
        }
        json report;
        report["characters"] = characters.values();
        report["variant"] = std::string(to_string(options.variant));
        report["generators"] = std::move(generators);
        out << report.dump(2) << "\n";
        return 0;
    }
    out << "# " << ideal.size() << " generators\n";
    for (const auto &g : ideal) {
        out << g.polynomial.str() << "\n";
    }
    return 0;
}

int cmd_sample(const CartanCharacters &characters, std::size_t r, const std::vector<Rational> &values,
               std::size_t count, const std::string &output_dir, const Options &options, std::ostream &out)
{
    SamplingOptions sampling;
    sampling.seed = options.seed;
    sampling.count = count;
    sampling.values = values;
    sampling.variant = options.variant;
    sampling.trials = options.trials;
    sampling.r = r;
    const auto result = sample_involutive(characters, sampling);
    std::vector<std::string> written;
    if (!output_dir.empty()) {
        std::filesystem::create_directories(output_dir);
        for (std::size_t k = 0; k < result.presentations.size(); ++k) {
            std::ostringstream name;
            name << "sample_" << std::setw(3) << std::setfill('0') << k + 1 << ".json";
            const auto path = (std::filesystem::path(output_dir) / name.str()).string();
            std::ofstream file(path);
            if (!file) {
                throw InvalidDocument("cannot write " + path);
            }
            file << doc::to_json(doc::document_from_presentation(result.presentations[k])).dump(2) << "\n";
            written.push_back(path);
        }
    }
    if (options.json) {
        json report;
        report["kept"] = result.presentations.size();
        report["attempts"] = result.attempts;
        report["non_generic"] = result.non_generic;
        report["rejected"] = result.rejected;
        report["disagreements"] = result.disagreements;
        report["files"] = written;
        json samples = json::array();
        for (const auto &p : result.presentations) {
            samples.push_back(doc::to_json(doc::document_from_presentation(p)));
        }
        report["samples"] = std::move(samples);
        out << report.dump(2) << "\n";
        return 0;
    }
    print_sampling_summary(out, result);
    for (const auto &path : written) {
        out << "wrote " << path << "\n";
    }
    if (output_dir.empty()) {
        for (const auto &p : result.presentations) {
            std::string line;
            for (const auto &[index, value] : p.coefficients()) {
                line += (line.empty() ? "" : ", ") + variable_name(index) + "=" + value.str();
            }
            out << "  {" << line << "}\n";
        }
    }
    return result.presentations.size() == count ? 0 : 1;
}

int cmd_census(const CartanCharacters &characters, std::size_t r, const std::vector<Rational> &values,
               std::size_t cap, const Options &options, std::ostream &out)
{
    CensusOptions census;
    census.values = values;
    census.cap = cap;
    census.variant = options.variant;
    census.seed = options.seed;
    census.trials = options.trials;
    census.r = r;
    const auto record = enumerate_census(characters, census);
    if (options.json) {
        json histogram = json::object();
        for (const auto &[k, count] : record.violation_histogram) {
            histogram[std::to_string(k)] = count;
        }
        json report;
        report["characters"] = characters.values();
        report["variables"] = record.variables;
        report["total"] = record.total;
        report["non_generic"] = record.non_generic;
        report["involutive"] = record.involutive;
        report["criterion_involutive"] = record.criterion_involutive;
        report["disagreements"] = record.disagreements;
        report["violation_histogram"] = std::move(histogram);
        out << report.dump(2) << "\n";
        return 0;
    }
    out << "characters: " << join_values(characters.values()) << "\n"
        << "variables: " << record.variables << "\n"
        << "assignments: " << record.total << "\n"
        << "non-generic: " << record.non_generic << "\n"
        << "involutive (oracle): " << record.involutive << "\n"
        << "involutive (criterion): " << record.criterion_involutive << "\n"
        << "disagreements: " << record.disagreements << "\n"
        << "violations histogram:";
    for (const auto &[k, count] : record.violation_histogram) {
        out << " " << k << ":" << count;
    }
    out << "\n";
    return 0;
}

} // namespace tableau::cli
