#ifndef SPLITCUT_GRAPH_HPP
#define SPLITCUT_GRAPH_HPP

#include "splitcut/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace splitcut {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable undirected simple graph on vertices 0..n-1.
 *
 * Adjacency is held twice: sorted neighbor lists for iteration and one bit row
 * per vertex so that |N(v) ∩ S| is a popcount over an intersection.
 */
class Graph {
public:
    Graph() = default;

    /// Rejects self-loops, duplicate edges (in either orientation) and endpoints >= n.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t num_vertices() const { return neighbors_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
    const VertexSet &row(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }

    /// |N(v) ∩ s|
    std::size_t degree_into(Vertex v, const VertexSet &s) const { return rows_[v].intersect_count(s); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }

    friend bool operator==(const Graph &a, const Graph &b) { return a.neighbors_ == b.neighbors_; }

private:
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<VertexSet> rows_;
    std::size_t num_edges_ = 0;
};

/// A two-sided partition of a graph's vertex set.
class Cut {
public:
    Cut() = default;

    /// Throws InvalidPartition unless side1 and side2 are disjoint and cover the universe.
    Cut(VertexSet side1, VertexSet side2);

    static Cut from_side1(VertexSet side1);

    const VertexSet &side1() const { return side1_; }
    const VertexSet &side2() const { return side2_; }
    std::size_t universe() const { return side1_.universe(); }

    Cut swapped() const { return Cut(side2_, side1_); }

    friend bool operator==(const Cut &, const Cut &) = default;

private:
    VertexSet side1_;
    VertexSet side2_;
};

/// Number of edges with one endpoint on each side. Throws InvalidPartition when the cut's
/// universe differs from the graph's vertex count.
std::size_t cut_size(const Graph &g, const Cut &cut);

/// Number of edges with both endpoints in s.
std::size_t edges_within(const Graph &g, const VertexSet &s);

Graph complement(const Graph &g);

/// Connected components ordered by their smallest member.
std::vector<VertexSet> connected_components(const Graph &g);

bool is_clique(const Graph &g, const VertexSet &s);
bool is_independent_set(const Graph &g, const VertexSet &s);

/// Subgraph induced by `keep`; vertex i of the result is the i-th smallest member of `keep`.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep);

} // namespace splitcut

#endif // SPLITCUT_GRAPH_HPP
