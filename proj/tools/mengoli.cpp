// Command-line front end: eval, digamma, zeta, verify, bench.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mengoli/cli.hpp"
#include "mengoli/error.hpp"

namespace {

using mengoli::cli::CliRequest;
using mengoli::cli::Command;
using mengoli::cli::Format;

void add_common(CLI::App* sub, std::string& format, unsigned& precision, std::string& out_file) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--precision", precision, "Working precision in bits (default from MENGOLI_PRECISION or 128)");
    sub->add_option("--out", out_file, "Write the report to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form evaluation of rational-shift product series"};
    app.require_subcommand(1);

    CliRequest req;
    std::string format = "text";
    std::string out_file;
    std::string shifts;
    std::string grid;
    unsigned precision = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate sum 1/prod(n + q_i) in closed form");
    eval->add_option("--shifts", shifts, "Comma-separated rationals, e.g. -1/2,1/2")->required();
    eval->add_option("--N", req.terms, "Also bracket the value with an N-term oracle");

    auto* digamma = app.add_subcommand("digamma", "Gauss digamma sum at p/q");
    digamma->add_option("--arg", req.arg, "Argument p/q with 0 < p < q (not reduced)")->required();
    digamma->add_option("--N", req.terms, "Check against an N-term series oracle");

    auto* zeta = app.add_subcommand("zeta", "Reproduce zeta(2) or zeta(4) by extrapolation in w");
    zeta->add_option("--s", req.s, "2 or 4")->required();
    zeta->add_option("--w", grid, "Comma-separated w grid (default 16,32,64,128)");
    zeta->add_option("--order", req.order, "Richardson levels (default: grid size - 1)");

    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the truncation oracle");
    verify->add_option("--shifts", shifts, "Verify one series instead of random trials");
    verify->add_option("--trials", req.trials, "Number of random shift pairs");
    verify->add_option("--seed", req.seed, "Random seed");
    verify->add_option("--max-den", req.max_den, "Largest shift denominator");
    verify->add_option("--N", req.terms, "Oracle terms (default 1000000)");
    verify->add_option("--perturb", req.perturb, "Add this offset to closed-form values (fault injection)");

    auto* bench = app.add_subcommand("bench", "Time closed form vs naive summation to a tolerance");
    bench->add_option("--shifts", shifts, "Comma-separated rationals")->required();
    bench->add_option("--eps", req.eps, "Target absolute tolerance");

    for (auto* sub : {eval, digamma, zeta, verify, bench}) add_common(sub, format, precision, out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; every malformed command line maps to the input-error code
        return app.exit(e) == 0 ? 0 : mengoli::cli::kExitInvalidInput;
    }

    try {
        if (eval->parsed()) req.command = Command::Eval;
        if (digamma->parsed()) req.command = Command::Digamma;
        if (zeta->parsed()) req.command = Command::Zeta;
        if (verify->parsed()) req.command = Command::Verify;
        if (bench->parsed()) req.command = Command::Bench;
        if (!shifts.empty()) req.shifts = mengoli::cli::parse_shift_list(shifts);
        if (!grid.empty()) req.w_grid = mengoli::cli::parse_int_list(grid);
        req.precision_bits = precision != 0 ? precision : mengoli::cli::default_precision_from_env();
        req.format = format == "json" ? Format::Json : Format::Text;
    } catch (const mengoli::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return mengoli::cli::kExitInvalidInput;
    }

    if (out_file.empty()) return mengoli::cli::run(req, std::cout, std::cerr);

    std::ostringstream buffer;
    const int code = mengoli::cli::run(req, buffer, std::cerr);
    std::ofstream file(out_file);
    if (!file) {
        std::cerr << "cannot open " << out_file << '\n';
        return mengoli::cli::kExitInvalidInput;
    }
    file << buffer.str();
    return code;
}
