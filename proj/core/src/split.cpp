#include "splitcut/split.hpp"

#include "splitcut/errors.hpp"

#include <algorithm>
#include <numeric>

namespace splitcut {

namespace {

void require_cover(const Graph &g, const VertexSet &a, const VertexSet &b) {
    if (a.universe() != g.num_vertices() || b.universe() != g.num_vertices())
        throw InvalidPartition("partition universe does not match the graph");
    if (a.intersects(b)) throw InvalidPartition("clique and independent sides overlap");
    if (a.count() + b.count() != g.num_vertices()) throw InvalidPartition("partition misses a vertex");
}

// Vertices by non-increasing degree, ties by ascending id.
std::vector<Vertex> degree_order(const Graph &g) {
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

struct Splittance {
    std::size_t clique_size;
    bool split;
};

Splittance splittance(const Graph &g, const std::vector<Vertex> &order) {
    const std::size_t n = order.size();
    std::size_t m_star = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) + 1 >= i) m_star = i;
    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m_star ? head : tail) += g.degree(order[i]);
    const std::size_t inner = m_star == 0 ? 0 : m_star * (m_star - 1);
    return {m_star, head == inner + tail};
}

} // namespace

SplitPartition::SplitPartition(const Graph &g, VertexSet clique, VertexSet independent)
    : clique_(std::move(clique)), independent_(std::move(independent)) {
    require_cover(g, clique_, independent_);
    if (!is_clique(g, clique_)) throw PreconditionError("clique side is not a clique");
    if (!is_independent_set(g, independent_)) throw PreconditionError("independent side has an edge");
}

bool satisfies_splittance(const Graph &g) { return splittance(g, degree_order(g)).split; }

std::optional<SplitPartition> recognize_split(const Graph &g) {
    const std::size_t n = g.num_vertices();
    const auto order = degree_order(g);
    const auto [m_star, split] = splittance(g, order);
    if (!split) return std::nullopt;
    VertexSet clique(n);
    for (std::size_t i = 0; i < m_star; ++i) clique.insert(order[i]);
    VertexSet independent = clique.complement();
    if (!verify_partition(g, clique, independent)) return std::nullopt;
    return SplitPartition(g, std::move(clique), std::move(independent));
}

bool verify_partition(const Graph &g, const VertexSet &clique, const VertexSet &independent) {
    require_cover(g, clique, independent);
    return is_clique(g, clique) && is_independent_set(g, independent);
}

bool verify_partition(const Graph &g, const SplitPartition &p) {
    return verify_partition(g, p.clique(), p.independent());
}

} // namespace splitcut
