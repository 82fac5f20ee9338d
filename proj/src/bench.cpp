#include "idealgb/bench.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "idealgb/gbuilder.hpp"
#include "idealgb/oracle.hpp"

namespace idealgb {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SplitMix64::next_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

std::vector<Point> random_distinct_points(SplitMix64& rng, int dimension,
                                          int count, int range) {
    std::set<std::vector<int>> seen;
    std::vector<Point> points;
    int attempts = 0;
    while (static_cast<int>(points.size()) < count) {
        if (++attempts > 1000 * count)
            throw std::invalid_argument(
                "cannot sample enough distinct points in the given range");
        std::vector<int> coords(static_cast<size_t>(dimension));
        for (int& c : coords) c = rng.next_int(-range, range);
        if (!seen.insert(coords).second) continue;
        Point p;
        for (int c : coords) p.coordinates.push_back(Rational(c));
        points.push_back(std::move(p));
    }
    return points;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (int d : config.dims) {
        for (int n : config.sizes) {
            BenchRow row{d, n, config.reps, 0.0, 0.0, 0, 0, true};
            for (int rep = 0; rep < config.reps; ++rep) {
                // Per-instance seed, so rows are independent of grid order.
                SplitMix64 rng(config.seed * 0x10001ULL +
                               static_cast<std::uint64_t>(d) * 257 +
                               static_cast<std::uint64_t>(n) * 17 +
                               static_cast<std::uint64_t>(rep));
                int range = std::max(9, n);
                std::vector<Point> points =
                    random_distinct_points(rng, d, n, range);
                MonomialOrdering ord = MonomialOrdering::grlex(d);

                reset_rational_op_count();
                auto t0 = std::chrono::steady_clock::now();
                GroebnerResult pipeline = groebner_lagrange(points, ord);
                row.pipeline_ms += ms_since(t0);
                row.pipeline_ops += rational_op_count();

                reset_rational_op_count();
                auto t1 = std::chrono::steady_clock::now();
                GroebnerResult oracle = bm_vanishing_ideal(points, ord);
                row.oracle_ms += ms_since(t1);
                row.oracle_ops += rational_op_count();

                if (!results_equal(pipeline, oracle)) row.match = false;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "  d    n reps  pipeline(ms)    oracle(ms)   pipeline_ops     "
           "oracle_ops  match\n";
    for (const BenchRow& row : rows) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%3d %4d %4d %13.2f %13.2f %14llu %14llu  %s\n",
                      row.dimension, row.size, row.reps, row.pipeline_ms,
                      row.oracle_ms,
                      static_cast<unsigned long long>(row.pipeline_ops),
                      static_cast<unsigned long long>(row.oracle_ops),
                      row.match ? "yes" : "NO");
        out << line;
    }
    return out.str();
}

}  // namespace idealgb
