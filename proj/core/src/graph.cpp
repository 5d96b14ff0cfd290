#include "splitcut/graph.hpp"

#include "splitcut/errors.hpp"

#include <algorithm>
#include <string>

namespace splitcut {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : neighbors_(n), rows_(n, VertexSet(n)) {
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n)
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (rows_[u].contains(v))
            throw PreconditionError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        rows_[u].insert(v);
        rows_[v].insert(u);
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    for (auto &list : neighbors_) std::sort(list.begin(), list.end());
    num_edges_ = edges.size();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Cut::Cut(VertexSet side1, VertexSet side2) : side1_(std::move(side1)), side2_(std::move(side2)) {
    if (side1_.universe() != side2_.universe())
        throw InvalidPartition("cut sides are over different universes");
    if (side1_.intersects(side2_)) throw InvalidPartition("cut sides overlap");
    if ((side1_ | side2_).count() != side1_.universe()) throw InvalidPartition("cut sides do not cover every vertex");
}

Cut Cut::from_side1(VertexSet side1) {
    VertexSet side2 = side1.complement();
    return Cut(std::move(side1), std::move(side2));
}

std::size_t cut_size(const Graph &g, const Cut &cut) {
    if (cut.universe() != g.num_vertices())
        throw InvalidPartition("cut covers " + std::to_string(cut.universe()) + " vertices, graph has " +
                               std::to_string(g.num_vertices()));
    std::size_t total = 0;
    cut.side1().for_each([&](Vertex v) { total += g.degree_into(v, cut.side2()); });
    return total;
}

std::size_t edges_within(const Graph &g, const VertexSet &s) {
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.degree_into(v, s); });
    return twice / 2;
}

Graph complement(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.num_edges());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<VertexSet> connected_components(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet component(n);
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            component.insert(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(component));
    }
    return out;
}

bool is_clique(const Graph &g, const VertexSet &s) {
    const std::size_t k = s.count();
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.degree_into(v, s) != k - 1) ok = false;
    });
    return ok;
}

bool is_independent_set(const Graph &g, const VertexSet &s) {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.row(v).intersects(s)) ok = false;
    });
    return ok;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep) {
    InducedSubgraph out;
    out.to_parent = keep.members();
    std::vector<Vertex> local(g.num_vertices(), 0);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex u : out.to_parent)
        for (Vertex v : g.neighbors(u))
            if (u < v && keep.contains(v)) edges.emplace_back(local[u], local[v]);
    out.graph = Graph(out.to_parent.size(), edges);
    return out;
}

} // namespace splitcut
