#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tableau/involutivity.hpp"
#include "tableau/tableau.hpp"

// JSON documents describing a tableau, and JSON renderings of reports.
// Indices in documents are 1-based; rationals are "p", "p/q" or JSON integers.

namespace tableau::doc {

using nlohmann::json;

struct TableauDocument {
    enum class Kind { basis, coefficients };

    std::size_t r = 0;
    std::size_t n = 0;
    Kind kind = Kind::basis;
    std::optional<CartanCharacters> characters; ///< required for coefficients
    std::vector<RatMatrix> basis;
    std::map<SymbolIndex, Rational> coefficients; ///< 0-based internally
};

/// Parses and validates. Throws ParseError (syntax, with line and column, or a
/// bad rational, with the field path) or InvalidDocument (structure).
TableauDocument parse_document(std::string_view text);
TableauDocument read_document(const std::string &path);

json to_json(const TableauDocument &document);
TableauDocument document_from_presentation(const SymbolPresentation &p);
TableauDocument document_from_tableau(const Tableau &tableau);

/// Structural checks; throws InvalidDocument naming the offending field.
void validate(const TableauDocument &document);

Tableau to_tableau(const TableauDocument &document);
/// Only for coefficient documents.
SymbolPresentation to_presentation(const TableauDocument &document);

/// Reads a rational from a string or integer JSON value; `path` goes into the message.
Rational rational_from_json(const json &value, const std::string &path);
json rational_to_json(const Rational &x);
json matrix_to_json(const RatMatrix &m);
RatMatrix matrix_from_json(const json &value, std::size_t rows, std::size_t cols, const std::string &path);

/// Field-for-field rendering of an InvolutivityReport, 1-based indices.
json report_to_json(const InvolutivityReport &report);
/// Inverse of report_to_json; throws ParseError or InvalidDocument.
InvolutivityReport report_from_json(const json &value);

} // namespace tableau::doc
