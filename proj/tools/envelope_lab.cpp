#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "envlab/commands.hpp"

namespace {

std::uint32_t prime_from_env() {
    if (const char* v = std::getenv("ENVELOPE_LAB_PRIME")) {
        try {
            const unsigned long parsed = std::stoul(v);
            if (parsed >= 2 && parsed < (1ul << 31)) return static_cast<std::uint32_t>(parsed);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring unusable ENVELOPE_LAB_PRIME='" << v << "'\n";
    }
    return envlab::kDefaultPrime;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"envelope-lab: degree envelopes, resolutions, and determinantal loci of "
                 "point arrangements in the projective plane over a prime field"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint32_t prime = prime_from_env();
    std::uint64_t seed = 0;
    int trials = 50;
    int max_degree = -1;
    std::string format = "json";
    std::string out_path;
    app.add_option("--prime", prime, "field characteristic, an odd prime below 2^31");
    app.add_option("--seed", seed, "base seed for all random draws");
    app.add_option("--trials", trials, "Monte Carlo trials per verification target");
    app.add_option("--max-degree", max_degree,
                   "cap on graded-piece degrees (default: chosen per command)");
    app.add_option("--format", format, "report format: json, csv, or text");
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    std::string points_file;
    auto* analyze = app.add_subcommand("analyze", "resolution data and envelope profile of a point file");
    analyze->add_option("file", points_file, "points file: one x y z triple per line")->required();

    int sample_n = 0;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample-points", "sample n general points and write them to a file");
    sample->add_option("n", sample_n, "number of points")->required();
    sample->add_option("file", sample_out, "output points file")->required();

    int n_min = 2, n_max = 30;
    auto* generic = app.add_subcommand(
        "verify-generic", "check generic resolution data and envelope clauses for sampled points");
    generic->add_option("--n-min", n_min, "smallest point count");
    generic->add_option("--n-max", n_max, "largest point count");

    std::vector<std::string> r_tokens;
    auto* theorem = app.add_subcommand(
        "verify-theorem", "sample matrices with given resolution data and verify the genericity claims");
    theorem->add_option("data", r_tokens, "resolution data, e.g. a=3,3,4 b=5,5")->required();

    int detloci_k = 1;
    auto* detloci = app.add_subcommand(
        "detloci", "graded decomposition and codimension checks for the generic (k+1) x k matrix");
    detloci->add_option("k", detloci_k, "matrix size parameter, 1 to 3")->required();

    app.add_subcommand("examples", "re-run the six worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    envlab::RunConfig cfg;
    cfg.prime = prime;
    cfg.seed = seed;
    cfg.trials = trials;
    if (max_degree >= 0) cfg.max_degree_cap = max_degree;
    cfg.format = format;

    try {
        envlab::CommandOutcome outcome;
        if (analyze->parsed())
            outcome = envlab::cmd_analyze(cfg, points_file);
        else if (sample->parsed())
            outcome = envlab::cmd_sample_points(cfg, sample_n, sample_out);
        else if (generic->parsed())
            outcome = envlab::cmd_verify_generic(cfg, n_min, n_max);
        else if (theorem->parsed()) {
            std::string joined;
            for (const std::string& t : r_tokens) {
                if (!joined.empty()) joined += ' ';
                joined += t;
            }
            outcome = envlab::cmd_verify_theorem(cfg, joined);
        } else if (detloci->parsed())
            outcome = envlab::cmd_detloci(cfg, detloci_k);
        else
            outcome = envlab::cmd_examples(cfg);

        const std::string text = envlab::render_report(outcome.report, cfg.format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw envlab::InputError("cannot open report file '" + out_path + "'");
            f << text;
            f.flush();
            if (!f) throw envlab::InputError("failed while writing '" + out_path + "'");
        }
        return outcome.exit_code;
    } catch (const envlab::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
