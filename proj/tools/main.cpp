#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tableau/errors.hpp"

using namespace tableau;

int main(int argc, char **argv)
{
    CLI::App app{"Cartan characters, involutivity and symbol structure of linear tableaux"};
    app.require_subcommand(1);

    cli::Options options;
    std::string variant = "theorem";
    std::string input;
    std::string phi;
    std::string set = "-1,0,1";
    std::string output_dir;
    std::vector<std::size_t> characters;
    std::size_t r = 0;
    std::size_t cap = 100000;
    std::size_t count = 10;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", options.seed, "seed for every random choice")->capture_default_str();
        sub->add_option("--trials", options.trials, "random bases tried for genericity")->capture_default_str();
        sub->add_option("--variant", variant, "index range of the quadratic conditions")
            ->check(CLI::IsMember({"theorem", "proof"}))
            ->capture_default_str();
        sub->add_flag("--json", options.json, "machine-readable output");
    };
    const auto with_input = [&](CLI::App *sub) {
        sub->add_option("--input,input", input, "tableau document (JSON)")->required();
    };
    const auto with_characters = [&](CLI::App *sub) {
        sub->add_option("characters", characters, "Cartan characters s_1 ... s_n")->required();
        sub->add_option("--r", r, "dim W (default s_1)");
    };

    auto *characters_cmd = app.add_subcommand("characters", "generic characters of a tableau");
    common(characters_cmd);
    with_input(characters_cmd);

    auto *analyze = app.add_subcommand("analyze", "Cartan test, endovolutive search and quadratic criterion");
    common(analyze);
    with_input(analyze);

    auto *gnf = app.add_subcommand("gnf", "W^1(phi) and the commutativity check for a covector phi");
    common(gnf);
    with_input(gnf);
    gnf->add_option("--phi", phi, "covector, comma-separated rationals")->required();

    auto *ideal = app.add_subcommand("ideal", "quadratic conditions as polynomials in the free coefficients");
    common(ideal);
    with_characters(ideal);

    auto *sample = app.add_subcommand("sample", "random involutive endovolutive presentations");
    common(sample);
    with_characters(sample);
    sample->add_option("--set", set, "coefficient values, comma-separated")->capture_default_str();
    sample->add_option("--count", count, "number of presentations to keep")->capture_default_str();
    sample->add_option("--output", output_dir, "directory for the sampled documents");

    auto *census = app.add_subcommand("census", "exhaustive count over a finite value set");
    common(census);
    with_characters(census);
    census->add_option("--set", set, "coefficient values, comma-separated")->capture_default_str();
    census->add_option("--cap", cap, "maximum number of assignments")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        options.variant = parse_variant(variant);
        const CartanCharacters s(characters);
        if (characters_cmd->parsed()) {
            return cli::cmd_characters(doc::read_document(input), options, std::cout);
        }
        if (analyze->parsed()) {
            return cli::cmd_analyze(doc::read_document(input), options, std::cout);
        }
        if (gnf->parsed()) {
            return cli::cmd_gnf(doc::read_document(input), cli::parse_rational_list(phi, "phi"), options, std::cout);
        }
        if (ideal->parsed()) {
            return cli::cmd_ideal(s, r, options, std::cout);
        }
        if (sample->parsed()) {
            return cli::cmd_sample(s, r, cli::parse_rational_list(set, "set"), count, output_dir, options, std::cout);
        }
        if (census->parsed()) {
            return cli::cmd_census(s, r, cli::parse_rational_list(set, "set"), cap, options, std::cout);
        }
    } catch (const tableau::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_error;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return cli::exit_error;
    }
    return cli::exit_error;
}
