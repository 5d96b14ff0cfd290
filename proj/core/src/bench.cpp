#include "splitcut/bench.hpp"

#include "splitcut/errors.hpp"
#include "splitcut/generator.hpp"

#include <chrono>
#include <iomanip>

namespace splitcut {

std::vector<BenchRow> run_bench(std::size_t min_t, std::size_t max_t, double prob, std::uint64_t seed,
                                const SolveOptions &options) {
    if (min_t > max_t) throw PreconditionError("min t exceeds max t");
    std::vector<BenchRow> rows;
    for (std::size_t t = min_t; t <= max_t; ++t) {
        const Graph g = generate_balanced_split(t, prob, seed);
        const auto start = std::chrono::steady_clock::now();
        const CutReport report = maxcut_split(g, options);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back({t, g.num_vertices(), report.subsets_enumerated, report.size, elapsed.count()});
    }
    return rows;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows) {
    out << "t,n,subsets,size,millis\n";
    for (const auto &r : rows)
        out << r.t << ',' << r.n << ',' << r.subsets << ',' << r.size << ',' << std::fixed << std::setprecision(3)
            << r.millis << '\n';
}

} // namespace splitcut
