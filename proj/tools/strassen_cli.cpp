#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "strassen/commands.hpp"

int main(int argc, char** argv) {
    using namespace strassen::cli;

    CLI::App app{"Exact stochastic dominance checks with verifiable witnesses"};
    app.require_subcommand(1);

    std::string problem;
    std::string witness;
    std::string out;

    auto* check = app.add_subcommand("check", "Decide dominance and emit a witness");
    check->add_option("problem", problem, "Problem JSON")->required();
    check->add_option("-w,--witness", witness, "Write the witness JSON here");

    auto* verify = app.add_subcommand("verify", "Re-verify a witness against a problem");
    verify->add_option("problem", problem, "Problem JSON")->required();
    verify->add_option("witness", witness, "Witness JSON")->required();

    auto* oracle = app.add_subcommand("oracle", "Closed-form check (scalar or halfspace cone)");
    oracle->add_option("problem", problem, "Problem JSON")->required();

    std::uint64_t seed = 1;
    long long dim = 1;
    long long ny = 3;
    long long nz = 3;
    std::string order = "icv";
    std::string cone = "orthant";
    auto* gen = app.add_subcommand("gen", "Write a seeded random problem");
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--dim", dim, "Dimension k");
    gen->add_option("--ny", ny, "Support size of Y");
    gen->add_option("--nz", nz, "Support size of Z");
    gen->add_option("--order", order, "icv or cv");
    gen->add_option("--cone", cone, "orthant, ray, halfspace or generators");
    gen->add_option("-o,--out", out, "Output path")->required();

    auto* plot = app.add_subcommand("plot", "Write x,u,s samples of a scalar certificate");
    plot->add_option("problem", problem, "Problem JSON")->required();
    plot->add_option("witness", witness, "Witness JSON")->required();
    plot->add_option("-o,--out", out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    if (check->parsed()) {
        return cmd_check(problem, witness.empty() ? std::nullopt : std::optional<std::string>(witness),
                         std::cout, std::cerr);
    }
    if (verify->parsed()) return cmd_verify(problem, witness, std::cout, std::cerr);
    if (oracle->parsed()) return cmd_oracle(problem, std::cout, std::cerr);
    if (gen->parsed()) return cmd_gen(seed, dim, ny, nz, order, cone, out, std::cout, std::cerr);
    if (plot->parsed()) return cmd_plot(problem, witness, out, std::cout, std::cerr);
    return kInputError;
}
