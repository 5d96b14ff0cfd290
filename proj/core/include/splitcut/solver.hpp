#ifndef SPLITCUT_SOLVER_HPP
#define SPLITCUT_SOLVER_HPP

#include "splitcut/graph.hpp"
#include "splitcut/split.hpp"

#include <cstdint>
#include <string_view>

namespace splitcut {

enum class Algorithm {
    alg1,            ///< enumerate the non-independent side, place the independent side greedily
    alg2,            ///< enumerate the non-clique side, place the clique side by sorted prefix
    trivial,         ///< edgeless, complete, or n <= 1
    component_merge, ///< several non-trivial components solved separately
    oracle,          ///< brute force over all cuts
};

std::string_view to_string(Algorithm a);

struct CutReport {
    Cut cut;
    std::size_t size = 0;
    Algorithm algorithm = Algorithm::trivial;
    /// Number of subsets of the enumerated side that were evaluated.
    std::uint64_t subsets_enumerated = 0;
};

/// Which side the split solver enumerates. Anything other than `automatic` is a test hook.
enum class Dispatch { automatic, force_alg1, force_alg2 };

struct SolveOptions {
    Dispatch dispatch = Dispatch::automatic;
    /// Worker threads for subset enumeration. Results do not depend on this value.
    unsigned threads = 1;
};

/// Largest enumerated side the solver accepts (subset masks are 64-bit words).
inline constexpr std::size_t kMaxEnumeratedSide = 62;

struct IndependentPlacement {
    VertexSet i1;
    VertexSet i2;
};

/**
 * Best placement of an independent set for a fixed split (c1, c2) of the remaining vertices:
 * v joins i1 when |N(v) ∩ c2| >= |N(v) ∩ c1|, ties included. Each independent vertex then
 * contributes max(|N(v) ∩ c1|, |N(v) ∩ c2|) crossing edges, which no other placement beats.
 */
IndependentPlacement greedy_extend_is(const Graph &g, const VertexSet &independent, const VertexSet &c1,
                                      const VertexSet &c2);

/**
 * Maximum cut given an independent set I of g (g itself need not be split).
 *
 * Walks all 2^|V \ I| subsets C1 of the remaining vertices and completes each with
 * greedy_extend_is. The witness is the first maximum in plain binary-counter order
 * (lowest vertex id = least significant bit), whatever the internal visiting order.
 */
CutReport maxcut_given_is(const Graph &g, const VertexSet &independent, const SolveOptions &options = {});

struct CliquePlacement {
    VertexSet c1;
    VertexSet c2;
};

/**
 * Orders the clique by key(v) = |N(v) ∩ i2| - |N(v) ∩ i1| non-increasingly (equal keys by
 * ascending id) and puts the first m vertices in c1.
 */
CliquePlacement clique_prefix_partition(const Graph &g, const VertexSet &clique, const VertexSet &i1,
                                        const VertexSet &i2, std::size_t m);

/// Maximum cut given a clique C of g; enumerates all 2^|V \ C| subsets I1 and every prefix length m.
CutReport maxcut_given_clique(const Graph &g, const VertexSet &clique, const SolveOptions &options = {});

/**
 * Maximum cut of a split graph in O(2^{n/2} poly) time and polynomial space.
 *
 * Each connected component is recognized and solved on its own, enumerating whichever of
 * its clique / independent side is smaller (the independent-set route on ties). Disjoint
 * unions of split graphs are therefore accepted too; NotSplitGraph is thrown as soon as one
 * component is not split.
 */
CutReport maxcut_split(const Graph &g, const SolveOptions &options = {});

struct DecisionReport {
    bool yes = false;
    /// Answered from the balanced clique bipartition alone.
    bool early_exit = false;
    std::uint64_t subsets_enumerated = 0;
    std::size_t clique_size = 0;
};

/**
 * Does the split graph g have a cut of size >= k?
 *
 * Splitting the clique C in half already crosses floor(|C|^2/4) edges, so 4k <= |C|^2 answers
 * yes at once. Otherwise |C| < 2 sqrt(k) and the independent-set route over at most
 * 2^{2 sqrt(k)} subsets settles it exactly.
 */
DecisionReport decide_maxcut_report(const Graph &g, std::uint64_t k, const SolveOptions &options = {});

inline bool decide_maxcut(const Graph &g, std::uint64_t k) { return decide_maxcut_report(g, k).yes; }

} // namespace splitcut

#endif // SPLITCUT_SOLVER_HPP
