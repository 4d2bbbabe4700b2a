#include "document.hpp"

#include <fstream>
#include <sstream>

#include "tableau/errors.hpp"

namespace tableau::doc {

namespace {

std::string where(const std::string &path) { return path.empty() ? "document" : path; }

const json &field(const json &object, const std::string &key, const std::string &path)
{
    const auto it = object.find(key);
    if (it == object.end()) {
        throw InvalidDocument(where(path) + ": missing field '" + key + "'");
    }
    return *it;
}

std::string join(const std::string &path, const std::string &key) { return path.empty() ? key : path + "." + key; }
std::string join(const std::string &path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

std::size_t count_from_json(const json &value, const std::string &path)
{
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        throw InvalidDocument(path + ": expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::size_t index_from_json(const json &value, const std::string &path, std::size_t bound)
{
    const std::size_t k = count_from_json(value, path);
    if (k < 1 || k > bound) {
        throw InvalidDocument(path + ": index " + std::to_string(k) + " outside 1.." + std::to_string(bound));
    }
    return k - 1;
}

const json &array_field(const json &object, const std::string &key, const std::string &path)
{
    const json &value = field(object, key, path);
    if (!value.is_array()) {
        throw InvalidDocument(join(path, key) + ": expected an array");
    }
    return value;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json characters_to_json(const CartanCharacters &s) { return s.values(); }

CartanCharacters characters_from_json(const json &value, const std::string &path)
{
    if (!value.is_array()) {
        throw InvalidDocument(path + ": expected an array");
    }
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < value.size(); ++k) {
        s.push_back(count_from_json(value[k], join(path, k)));
    }
    return CartanCharacters(std::move(s));
}

json basis_pair_to_json(const BasisPair &basis) { return {{"g", matrix_to_json(basis.g)}, {"h", matrix_to_json(basis.h)}}; }

BasisPair basis_pair_from_json(const json &value, std::size_t r, std::size_t n, const std::string &path)
{
    if (!value.is_object()) {
        throw InvalidDocument(path + ": expected an object");
    }
    return {matrix_from_json(field(value, "g", path), n, n, join(path, "g")),
            matrix_from_json(field(value, "h", path), r, r, join(path, "h"))};
}

bool bool_from_json(const json &value, const std::string &path)
{
    if (!value.is_boolean()) {
        throw InvalidDocument(path + ": expected a boolean");
    }
    return value.get<bool>();
}

} // namespace

Rational rational_from_json(const json &value, const std::string &path)
{
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const ParseError &e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    if (value.is_number_integer()) {
        // integers only; floats are rejected below
        if (value.is_number_unsigned()) {
            return Rational::parse(std::to_string(value.get<unsigned long long>()));
        }
        return Rational::parse(std::to_string(value.get<long long>()));
    }
    if (value.is_number_float()) {
        throw ParseError(path + ": floating-point numbers are not allowed, write the rational as a string");
    }
    throw ParseError(path + ": expected a rational string or an integer");
}

json rational_to_json(const Rational &x) { return x.str(); }

json matrix_to_json(const RatMatrix &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(rational_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const json &value, std::size_t rows, std::size_t cols, const std::string &path)
{
    if (!value.is_array() || value.size() != rows) {
        throw InvalidDocument(path + ": expected " + std::to_string(rows) + " rows");
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = value[i];
        const std::string row_path = join(path, i);
        if (!row.is_array() || row.size() != cols) {
            throw InvalidDocument(row_path + ": expected " + std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rational_from_json(row[j], join(row_path, j));
        }
    }
    return m;
}

TableauDocument parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
    }
    if (!root.is_object()) {
        throw InvalidDocument("document: expected a JSON object");
    }
    TableauDocument document;
    document.r = count_from_json(field(root, "r", ""), "r");
    document.n = count_from_json(field(root, "n", ""), "n");
    const json &kind = field(root, "presentation", "");
    if (kind == "basis") {
        document.kind = TableauDocument::Kind::basis;
        const json &basis = array_field(root, "basis", "");
        for (std::size_t k = 0; k < basis.size(); ++k) {
            document.basis.push_back(matrix_from_json(basis[k], document.r, document.n, join("basis", k)));
        }
        if (root.contains("characters")) {
            document.characters = characters_from_json(root["characters"], "characters");
        }
    } else if (kind == "coefficients") {
        document.kind = TableauDocument::Kind::coefficients;
        document.characters = characters_from_json(field(root, "characters", ""), "characters");
        const std::size_t r = document.r;
        const std::size_t n = document.n;
        const json &records = array_field(root, "coefficients", "");
        for (std::size_t k = 0; k < records.size(); ++k) {
            const json &record = records[k];
            const std::string path = join("coefficients", k);
            if (!record.is_object()) {
                throw InvalidDocument(path + ": expected an object");
            }
            SymbolIndex index;
            index.a = index_from_json(field(record, "a", path), join(path, "a"), r);
            index.lambda = index_from_json(field(record, "lambda", path), join(path, "lambda"), n);
            index.i = index_from_json(field(record, "i", path), join(path, "i"), n);
            index.b = index_from_json(field(record, "b", path), join(path, "b"), r);
            const Rational value = rational_from_json(field(record, "value", path), join(path, "value"));
            if (!document.coefficients.emplace(index, value).second) {
                throw InvalidDocument(path + ": duplicate coefficient");
            }
        }
    } else {
        throw InvalidDocument("presentation: expected \"basis\" or \"coefficients\"");
    }
    validate(document);
    return document;
}

TableauDocument read_document(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidDocument("cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str());
}

void validate(const TableauDocument &document)
{
    const std::size_t r = document.r;
    const std::size_t n = document.n;
    if (document.characters) {
        const auto &s = *document.characters;
        if (s.n() != n) {
            throw InvalidDocument("characters: expected " + std::to_string(n) + " entries");
        }
        try {
            s.validate(r);
        } catch (const InvalidCharacters &e) {
            throw InvalidDocument(std::string("characters: ") + e.what());
        }
    }
    if (document.kind == TableauDocument::Kind::basis) {
        for (std::size_t k = 0; k < document.basis.size(); ++k) {
            if (document.basis[k].rows() != r || document.basis[k].cols() != n) {
                throw InvalidDocument("basis[" + std::to_string(k) + "]: expected a " + std::to_string(r) + "x" +
                                      std::to_string(n) + " matrix");
            }
        }
        if (Tableau(r, n, document.basis).dim() != document.basis.size()) {
            throw InvalidDocument("basis: matrices are linearly dependent");
        }
        return;
    }
    if (!document.characters) {
        throw InvalidDocument("characters: required for a coefficients presentation");
    }
    for (const auto &[index, value] : document.coefficients) {
        (void)value;
        if (!SymbolPresentation::is_slot(*document.characters, r, index)) {
            throw InvalidDocument("coefficients: B[" + std::to_string(index.a + 1) + "," +
                                  std::to_string(index.lambda + 1) + "," + std::to_string(index.i + 1) + "," +
                                  std::to_string(index.b + 1) +
                                  "] is not a slot (need lambda <= i, b <= s_lambda, a > s_i)");
        }
    }
}

json to_json(const TableauDocument &document)
{
    json out;
    out["r"] = document.r;
    out["n"] = document.n;
    if (document.kind == TableauDocument::Kind::basis) {
        out["presentation"] = "basis";
        if (document.characters) {
            out["characters"] = characters_to_json(*document.characters);
        }
        json basis = json::array();
        for (const auto &m : document.basis) {
            basis.push_back(matrix_to_json(m));
        }
        out["basis"] = std::move(basis);
        return out;
    }
    out["presentation"] = "coefficients";
    out["characters"] = characters_to_json(*document.characters);
    json records = json::array();
    for (const auto &[index, value] : document.coefficients) {
        records.push_back({{"a", index.a + 1},
                           {"lambda", index.lambda + 1},
                           {"i", index.i + 1},
                           {"b", index.b + 1},
                           {"value", rational_to_json(value)}});
    }
    out["coefficients"] = std::move(records);
    return out;
}

TableauDocument document_from_presentation(const SymbolPresentation &p)
{
    TableauDocument document;
    document.r = p.r();
    document.n = p.n();
    document.kind = TableauDocument::Kind::coefficients;
    document.characters = p.characters();
    document.coefficients = p.coefficients();
    return document;
}

TableauDocument document_from_tableau(const Tableau &tableau)
{
    TableauDocument document;
    document.r = tableau.r();
    document.n = tableau.n();
    document.kind = TableauDocument::Kind::basis;
    document.basis = tableau.basis();
    return document;
}

SymbolPresentation to_presentation(const TableauDocument &document)
{
    if (document.kind != TableauDocument::Kind::coefficients) {
        throw InvalidDocument("presentation: expected a coefficients document");
    }
    return {document.r, *document.characters, document.coefficients};
}

Tableau to_tableau(const TableauDocument &document)
{
    if (document.kind == TableauDocument::Kind::basis) {
        return {document.r, document.n, document.basis};
    }
    return tableau_from_coefficients(to_presentation(document));
}

json report_to_json(const InvolutivityReport &report)
{
    json violations = json::array();
    for (const auto &v : report.violations) {
        violations.push_back({{"lambda", v.lambda + 1},
                              {"mu", v.mu + 1},
                              {"i", v.i + 1},
                              {"j", v.j + 1},
                              {"a", v.a + 1},
                              {"b", v.b + 1},
                              {"value", rational_to_json(v.value)}});
    }
    json out;
    out["r"] = report.r;
    out["n"] = report.n;
    out["characters"] = characters_to_json(report.characters);
    out["dim_A"] = report.dim_A;
    out["dim_A1"] = report.dim_A1;
    out["cartan_bound"] = report.cartan_bound;
    out["involutive"] = report.involutive;
    out["endovolutive"] = report.endovolutive;
    out["violations"] = std::move(violations);
    out["dim_H1"] = report.dim_H1;
    out["dim_H2"] = report.dim_H2;
    out["variant"] = std::string(to_string(report.variant));
    out["generic_basis"] = basis_pair_to_json(report.generic_basis);
    out["endovolutive_basis"] = report.endovolutive_basis ? basis_pair_to_json(*report.endovolutive_basis) : json();
    out["criterion_involutive"] = report.criterion_involutive ? json(*report.criterion_involutive) : json();
    return out;
}

InvolutivityReport report_from_json(const json &value)
{
    if (!value.is_object()) {
        throw InvalidDocument("report: expected a JSON object");
    }
    InvolutivityReport report;
    report.r = count_from_json(field(value, "r", ""), "r");
    report.n = count_from_json(field(value, "n", ""), "n");
    report.characters = characters_from_json(field(value, "characters", ""), "characters");
    report.dim_A = count_from_json(field(value, "dim_A", ""), "dim_A");
    report.dim_A1 = count_from_json(field(value, "dim_A1", ""), "dim_A1");
    report.cartan_bound = count_from_json(field(value, "cartan_bound", ""), "cartan_bound");
    report.involutive = bool_from_json(field(value, "involutive", ""), "involutive");
    report.endovolutive = bool_from_json(field(value, "endovolutive", ""), "endovolutive");
    const json &violations = array_field(value, "violations", "");
    for (std::size_t k = 0; k < violations.size(); ++k) {
        const std::string path = join("violations", k);
        const json &v = violations[k];
        if (!v.is_object()) {
            throw InvalidDocument(path + ": expected an object");
        }
        report.violations.push_back({index_from_json(field(v, "lambda", path), join(path, "lambda"), report.n),
                                     index_from_json(field(v, "mu", path), join(path, "mu"), report.n),
                                     index_from_json(field(v, "i", path), join(path, "i"), report.n),
                                     index_from_json(field(v, "j", path), join(path, "j"), report.n),
                                     index_from_json(field(v, "a", path), join(path, "a"), report.r),
                                     index_from_json(field(v, "b", path), join(path, "b"), report.r),
                                     rational_from_json(field(v, "value", path), join(path, "value"))});
    }
    report.dim_H1 = count_from_json(field(value, "dim_H1", ""), "dim_H1");
    report.dim_H2 = count_from_json(field(value, "dim_H2", ""), "dim_H2");
    const json &variant = field(value, "variant", "");
    if (!variant.is_string()) {
        throw InvalidDocument("variant: expected a string");
    }
    report.variant = parse_variant(variant.get<std::string>());
    report.generic_basis = basis_pair_from_json(field(value, "generic_basis", ""), report.r, report.n, "generic_basis");
    const json &endo = field(value, "endovolutive_basis", "");
    if (!endo.is_null()) {
        report.endovolutive_basis = basis_pair_from_json(endo, report.r, report.n, "endovolutive_basis");
    }
    const json &verdict = field(value, "criterion_involutive", "");
    if (!verdict.is_null()) {
        report.criterion_involutive = bool_from_json(verdict, "criterion_involutive");
    }
    return report;
}

} // namespace tableau::doc
