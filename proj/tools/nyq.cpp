#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace nyq::cli;

int main(int argc, char** argv) {
    CLI::App app{"nyq: stability of feedback loops over rings of stable transfer functions"};
    app.require_subcommand(1);

    Flags flags;
    std::string target;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--ring", flags.ring, "disk, hardy, ap, cd or polydisk (full names also accepted)");
        sub->add_option("--tolerance", flags.tolerance, "boundary tolerance (default 1e-9)");
        sub->add_option("--index-tolerance", flags.index_tolerance, "tolerance on real index parts (default 1e-6)");
        sub->add_option("--samples", flags.samples, "boundary samples (default 1024)");
        sub->add_option("--gamma", flags.gamma, "pole placed outside the closed disk by factorizations (default 2)");
        sub->add_option("--window", flags.window, "half-width of the real-line window for almost periodic curves");
        sub->add_option("--json-out", flags.json_out, "also write a JSON report here");
    };

    auto* analyze = app.add_subcommand("analyze", "decide whether C stabilizes P");
    analyze->add_option("problem", target, "problem file (JSON)")->required();
    common(analyze);

    auto* wind = app.add_subcommand("wind", "index of a single element");
    wind->add_option("element", target, "expression, or a file holding one")->required();
    common(wind);
    wind->add_option("--csv", flags.csv, "write t,re,im,unwrapped_arg samples (\"-\" for stdout)");

    auto* factorize = app.add_subcommand("factorize", "coprime factorizations over a rational ring");
    factorize->add_option("problem", target, "problem file (JSON)")->required();
    common(factorize);
    factorize->add_option("-o,--output", flags.output, "output problem file (default stdout)");

    auto* curve = app.add_subcommand("curve", "sample det(I - CP) along the boundary");
    curve->add_option("problem", target, "problem file (JSON)")->required();
    common(curve);
    curve->add_option("--csv", flags.csv, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : kUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(target, flags, std::cout);
        if (wind->parsed()) return cmd_wind(target, flags, std::cout);
        if (factorize->parsed()) return cmd_factorize(target, flags, std::cout);
        if (curve->parsed()) return cmd_curve(target, flags, std::cout);
    } catch (const nyq::Error& e) {
        std::cerr << "nyq: " << nyq::to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "nyq: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
