#include "shv/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    CLI::App app{"Spinor-helicity varieties, Mandelstam varieties and scattering equations"};
    app.require_subcommand(1);
    app.fallthrough();
    shv::RunConfig config;
    std::string format = "json";

    app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", config.out, "Write output to this file");

    auto params = [&](CLI::App* sub, bool required) {
        auto* k = sub->add_option("--k", config.k, "Plane dimension");
        auto* n = sub->add_option("--n", config.n, "Number of particles");
        sub->add_option("--r", config.r, "Rank bound")->capture_default_str();
        if (required) {
            k->required();
            n->required();
        }
    };

    auto* poset = app.add_subcommand("poset", "Glued poset P(k,n,r)");
    params(poset, true);
    poset->add_option("--emit", config.emit, "What to print")
        ->check(CLI::IsMember({"elements", "pairs", "covers", "bidegree", "all"}))
        ->capture_default_str();

    auto* ideal = app.add_subcommand("ideal", "Generators of the ideal of SH(k,n,r)");
    params(ideal, true);
    ideal->add_option("--family", config.family, "Generator family")
        ->check(CLI::IsMember({"plucker", "mixed", "pq", "toric", "all"}))
        ->capture_default_str();
    ideal->add_flag("--verify", config.verify, "Check every generator vanishes on the parametrization");

    auto* mandelstam = app.add_subcommand("mandelstam", "Mandelstam variety M(k,n,r)");
    params(mandelstam, false);
    mandelstam->add_option("--samples", config.samples, "Number of random points");
    mandelstam->add_option("--check", config.check_file, "Tensor file to test for membership")->check(CLI::ExistingFile);

    auto* trop = app.add_subcommand("trop", "Tropical Mandelstam vectors");
    params(trop, false);
    trop->add_option("--samples", config.samples, "Number of random vectors");
    trop->add_option("--check-m250", config.check_file, "Vector file to test against trop M(2,5,0)")
        ->check(CLI::ExistingFile);
    trop->add_flag("--circuits", config.circuits, "List the circuits of the M(2,5,0) momentum matrix");

    auto* scatter = app.add_subcommand("scatter", "Scattering equations on X(k,n)");
    params(scatter, false);
    scatter->add_option("--kinematics", config.kinematics_file, "Kinematics file")->check(CLI::ExistingFile);
    scatter->add_flag("--solve", config.solve, "Solve numerically");
    scatter->add_flag("--classify", config.classify, "Sort k=2 solutions into sectors");
    scatter->add_flag("--tautological", config.tautological, "Exact tautological solutions for (3,6)");
    scatter->add_option("--budget", config.budget, "Newton starts (0 = automatic)");
    scatter->add_option("--tol", config.tol, "Residual tolerance")->capture_default_str();
    scatter->add_option("--dedup", config.dedup, "Deduplication radius")->capture_default_str();
    scatter->add_option("--classify-tol", config.classify_tol, "Rank test tolerance")->capture_default_str();

    app.add_subcommand("paper-report", "Recompute every reference value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : shv::exit_domain_error;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "text" ? shv::Format::Text : shv::Format::Json;
    return shv::run(config, std::cout, std::cerr);
}
