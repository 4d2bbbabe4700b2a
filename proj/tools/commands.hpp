#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "document.hpp"

// Subcommands of the `tableau` tool. Each writes its report to `out` and
// returns the process exit code; library errors propagate as exceptions.

namespace tableau::cli {

struct Options {
    std::uint64_t seed = 0;
    std::size_t trials = 32;
    CriterionVariant variant = CriterionVariant::theorem;
    bool json = false;
};

enum ExitCode : int { exit_involutive = 0, exit_not_involutive = 1, exit_error = 2 };

int cmd_characters(const doc::TableauDocument &document, const Options &options, std::ostream &out);

/// 0 involutive, 1 not involutive, 2 when no endovolutive basis was found
/// (the oracle verdict is printed anyway).
int cmd_analyze(const doc::TableauDocument &document, const Options &options, std::ostream &out);

/// phi is read in the V* basis of a coefficients document, or in the endovolutive
/// basis found for a basis document (printed in the report).
int cmd_gnf(const doc::TableauDocument &document, const RatVector &phi, const Options &options, std::ostream &out);

int cmd_ideal(const CartanCharacters &characters, std::size_t r, const Options &options, std::ostream &out);

/// Writes sample_NNN.json coefficient documents into output_dir when it is not empty.
int cmd_sample(const CartanCharacters &characters, std::size_t r, const std::vector<Rational> &values,
               std::size_t count, const std::string &output_dir, const Options &options, std::ostream &out);

int cmd_census(const CartanCharacters &characters, std::size_t r, const std::vector<Rational> &values,
               std::size_t cap, const Options &options, std::ostream &out);

/// "1/2,-3,0" -> rationals; throws ParseError naming `what`.
std::vector<Rational> parse_rational_list(const std::string &text, const std::string &what);

} // namespace tableau::cli
