// Command-line front-end: computes reduced Groebner bases of vanishing
// ideals from interpolation-condition files, verifies emitted results and
// runs the randomized benchmark.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "idealgb/bench.hpp"
#include "idealgb/errors.hpp"
#include "idealgb/gbuilder.hpp"
#include "idealgb/oracle.hpp"
#include "idealgb/problem_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalidProblem = 2;
constexpr int kExitInternal = 3;

int run_compute(const std::string& path, const std::string& format,
                const std::string& verify, bool skip_d_invariance) {
    using namespace idealgb;
    ParsedProblem parsed = load_problem(path);
    InterpolationProblem& problem = parsed.problem;

    if (verify == "oracle" && !problem.is_lagrange())
        throw InvalidProblemError(
            "oracle verification requires a Lagrange problem (every "
            "functional list equal to [\"1\"])");

    GroebnerResult result = groebner_hermite(problem, skip_d_invariance);
    if (verify != "none") {
        Certificate cert = certify(result, problem);
        if (verify == "oracle") {
            GroebnerResult reference =
                bm_vanishing_ideal(problem.points(), problem.ordering);
            cert.oracle_match = results_equal(result, reference);
        }
        result.certificate = cert;
    }

    // Assemble the full report before printing anything.
    std::string output = format == "json"
                             ? result_to_json(parsed.variables, result)
                             : result_to_text(parsed.variables, result);
    std::cout << output;
    return kExitOk;
}

int run_verify(const std::string& path) {
    using namespace idealgb;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read \"" + path + "\"", 1);
    std::ostringstream buffer;
    buffer << in.rdbuf();

    LoadedResult loaded = parse_result_json(buffer.str());
    Certificate cert = is_reduced_groebner(loaded.result);
    loaded.result.certificate = cert;
    std::cout << result_to_text(loaded.variables, loaded.result);
    if (!cert.structure_ok || !cert.all_spairs_reduce_to_zero) {
        std::cout << "verification FAILED\n";
        return kExitInvalidProblem;
    }
    std::cout << "verification passed (structural checks; the original "
                 "conditions are not part of a result file)\n";
    return kExitOk;
}

int run_bench_cmd(std::uint64_t seed, const std::vector<int>& dims,
                  const std::vector<int>& sizes, int reps) {
    using namespace idealgb;
    BenchConfig config;
    config.seed = seed;
    if (!dims.empty()) config.dims = dims;
    if (!sizes.empty()) config.sizes = sizes;
    config.reps = reps;
    std::vector<BenchRow> rows = run_bench(config);
    std::cout << format_bench_table(rows);
    for (const BenchRow& row : rows)
        if (!row.match) {
            std::cerr << "error: pipeline/oracle mismatch at d="
                      << row.dimension << " n=" << row.size << "\n";
            return kExitInternal;
        }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Reduced Groebner bases of vanishing ideals from ideal-interpolation "
        "conditions"};
    app.require_subcommand(1);

    std::string compute_path;
    std::string format = "text";
    std::string verify = "spairs";
    bool skip_d_invariance = false;
    CLI::App* compute = app.add_subcommand(
        "compute", "compute the reduced Groebner basis for a problem file");
    compute->add_option("file", compute_path, "problem file (JSON)")
        ->required();
    compute->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--verify", verify, "certification depth")
        ->check(CLI::IsMember({"none", "spairs", "oracle"}));
    compute->add_flag("--skip-d-invariance", skip_d_invariance,
                      "skip the D-invariance validation of condition spaces");

    std::string verify_path;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "re-run structural certification on an emitted result");
    verify_cmd->add_option("file", verify_path, "result file (JSON)")
        ->required();

    std::uint64_t seed = 1;
    std::vector<int> dims;
    std::vector<int> sizes;
    int reps = 3;
    CLI::App* bench = app.add_subcommand(
        "bench", "time the pipeline against the evaluation oracle");
    bench->add_option("--seed", seed, "instance seed");
    bench->add_option("--dims", dims, "dimensions, e.g. --dims 2,3")
        ->delimiter(',');
    bench->add_option("--sizes", sizes, "point counts, e.g. --sizes 4,8,16")
        ->delimiter(',');
    bench->add_option("--reps", reps, "instances per grid cell")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(compute_path, format, verify, skip_d_invariance);
        if (verify_cmd->parsed()) return run_verify(verify_path);
        return run_bench_cmd(seed, dims, sizes, reps);
    } catch (const idealgb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const idealgb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidProblem;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
