#ifndef IDEALGB_BENCH_HPP
#define IDEALGB_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "idealgb/functional.hpp"

namespace idealgb {

/// Small deterministic PRNG (splitmix64) so benchmark instances are
/// reproducible across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    int next_int(int lo, int hi);

private:
    std::uint64_t state_;
};

/// n pairwise-distinct integer points with coordinates in [-range, range].
std::vector<Point> random_distinct_points(SplitMix64& rng, int dimension,
                                          int count, int range);

struct BenchConfig {
    std::uint64_t seed = 1;
    std::vector<int> dims = {2};
    std::vector<int> sizes = {4, 8, 16};
    int reps = 3;
};

struct BenchRow {
    int dimension;
    int size;
    int reps;
    double pipeline_ms;
    double oracle_ms;
    std::uint64_t pipeline_ops;
    std::uint64_t oracle_ops;
    bool match;
};

/// Times the elimination pipeline against the evaluation/elimination
/// oracle on random Lagrange instances and checks that the outputs agree
/// exactly. Deterministic for a fixed seed.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace idealgb

#endif
