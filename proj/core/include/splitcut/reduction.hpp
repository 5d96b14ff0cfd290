#ifndef SPLITCUT_REDUCTION_HPP
#define SPLITCUT_REDUCTION_HPP

#include "splitcut/graph.hpp"
#include "splitcut/solver.hpp"

#include <map>
#include <optional>
#include <vector>

namespace splitcut {

/**
 * Split image of an arbitrary graph G.
 *
 * The image keeps G's vertices 0..n-1 as a clique and adds one auxiliary vertex per
 * non-edge {u, v} of G, adjacent to exactly u and v. Auxiliary ids start at n and follow
 * lexicographic non-edge order. Max cut of the image = max cut of G + 2 * nonedge_count().
 */
class ReductionMap {
public:
    explicit ReductionMap(const Graph &original);

    const Graph &original() const { return original_; }
    const Graph &image() const { return image_; }

    std::size_t nonedge_count() const { return nonedges_.size(); }

    /// Non-edges (u < v) in auxiliary-id order: auxiliary vertex n + i stands for nonedges()[i].
    const std::vector<Edge> &nonedges() const { return nonedges_; }

    /// Auxiliary vertex for the non-edge {u, v}, or nullopt if {u, v} is an edge of G.
    std::optional<Vertex> nonedge_vertex(Vertex u, Vertex v) const;

private:
    Graph original_;
    Graph image_;
    std::vector<Edge> nonedges_;
    std::map<Edge, Vertex> lookup_;
};

inline ReductionMap build_split_instance(const Graph &g) { return ReductionMap(g); }

/// Restricts a cut of the image to the original vertices. Auxiliary placement is ignored.
Cut lift_cut(const ReductionMap &map, const Cut &cut_prime);

/**
 * Maximum cut of an arbitrary graph through its split image. The report carries the
 * image solver's algorithm tag and subset count, and the lifted cut with its size in G.
 */
CutReport maxcut_via_reduction(const Graph &g, const SolveOptions &options = {});

} // namespace splitcut

#endif // SPLITCUT_REDUCTION_HPP
