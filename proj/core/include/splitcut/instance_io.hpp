#ifndef SPLITCUT_INSTANCE_IO_HPP
#define SPLITCUT_INSTANCE_IO_HPP

#include "splitcut/graph.hpp"
#include "splitcut/reduction.hpp"
#include "splitcut/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace splitcut {

/**
 * DIMACS `p edge` dialect:
 *
 *     c any comment
 *     p edge <n> <m>
 *     e <u> <v>          (1-based, u != v, m lines)
 *
 * Blank lines are skipped. Every error is a ParseError carrying the 1-based line number
 * (the last line for count mismatches). Weighted `w` lines are rejected.
 */
Graph parse_instance(std::string_view text);
Graph read_instance(const std::filesystem::path &path);

/// Header plus edges in lexicographic order; comment lines are emitted first.
std::string serialize_instance(const Graph &g, std::string_view comment = {});
void write_instance(const std::filesystem::path &path, const Graph &g, std::string_view comment = {});

/// One line `a <aux-label> <u> <v>` per auxiliary vertex, all labels 1-based.
std::string serialize_reduction_map(const ReductionMap &map);

struct SolveReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    Algorithm algorithm = Algorithm::trivial;
    std::size_t size = 0;
    /// 1-based, ascending.
    std::vector<std::size_t> side1;
    std::uint64_t subsets_enumerated = 0;
    double millis = 0.0;
};

SolveReport make_solve_report(std::string instance, const Graph &g, const CutReport &report, double millis);

/// JSON object with keys in this order: instance, n, m, algorithm, size, side1, subsets, millis.
std::string to_json(const SolveReport &report);
std::string to_text(const SolveReport &report);

} // namespace splitcut

#endif // SPLITCUT_INSTANCE_IO_HPP
