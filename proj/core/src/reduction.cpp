#include "splitcut/reduction.hpp"

#include "splitcut/errors.hpp"

#include <stdexcept>
#include <string>

namespace splitcut {

ReductionMap::ReductionMap(const Graph &original) : original_(original) {
    const std::size_t n = original.num_vertices();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
            if (!original.has_edge(u, v)) nonedges_.emplace_back(u, v);
        }
    for (std::size_t i = 0; i < nonedges_.size(); ++i) {
        const auto aux = static_cast<Vertex>(n + i);
        const auto [u, v] = nonedges_[i];
        edges.emplace_back(u, aux);
        edges.emplace_back(v, aux);
        lookup_.emplace(nonedges_[i], aux);
    }
    image_ = Graph(n + nonedges_.size(), edges);
}

std::optional<Vertex> ReductionMap::nonedge_vertex(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const auto it = lookup_.find(Edge{u, v});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Cut lift_cut(const ReductionMap &map, const Cut &cut_prime) {
    if (cut_prime.universe() != map.image().num_vertices())
        throw InvalidPartition("cut covers " + std::to_string(cut_prime.universe()) + " vertices, image has " +
                               std::to_string(map.image().num_vertices()));
    VertexSet side1(map.original().num_vertices());
    cut_prime.side1().for_each([&](Vertex v) {
        if (v < side1.universe()) side1.insert(v);
    });
    return Cut::from_side1(std::move(side1));
}

CutReport maxcut_via_reduction(const Graph &g, const SolveOptions &options) {
    if (g.num_vertices() == 0) throw PreconditionError("reduction needs at least one vertex");
    const ReductionMap map(g);
    CutReport image = maxcut_split(map.image(), options);
    Cut lifted = lift_cut(map, image.cut);
    const std::size_t size = cut_size(g, lifted);
    if (size + 2 * map.nonedge_count() != image.size)
        throw std::logic_error("lifted cut of size " + std::to_string(size) + " does not match image cut of size " +
                               std::to_string(image.size));
    return CutReport{std::move(lifted), size, image.algorithm, image.subsets_enumerated};
}

} // namespace splitcut
