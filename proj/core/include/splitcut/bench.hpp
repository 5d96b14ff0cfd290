#ifndef SPLITCUT_BENCH_HPP
#define SPLITCUT_BENCH_HPP

#include "splitcut/solver.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace splitcut {

struct BenchRow {
    std::size_t t = 0;
    std::size_t n = 0;
    std::uint64_t subsets = 0;
    std::size_t size = 0;
    double millis = 0.0;
};

/// Solves one generate_balanced_split(t, prob, seed) instance per t in [min_t, max_t].
std::vector<BenchRow> run_bench(std::size_t min_t, std::size_t max_t, double prob, std::uint64_t seed,
                                const SolveOptions &options = {});

/// Header `t,n,subsets,size,millis` followed by one row per entry.
void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows);

} // namespace splitcut

#endif // SPLITCUT_BENCH_HPP
