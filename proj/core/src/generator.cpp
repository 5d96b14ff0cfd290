#include "splitcut/generator.hpp"

#include "splitcut/errors.hpp"

#include <random>
#include <string>
#include <vector>

namespace splitcut {

namespace {

double unit_draw(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Graph generate_split(std::size_t clique_size, std::size_t is_size, double edge_prob, std::uint64_t seed) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw PreconditionError("edge probability must lie in [0, 1], got " + std::to_string(edge_prob));
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < clique_size; ++u)
        for (std::size_t v = u + 1; v < clique_size; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (std::size_t c = 0; c < clique_size; ++c)
        for (std::size_t i = 0; i < is_size; ++i)
            if (unit_draw(rng) < edge_prob)
                edges.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(clique_size + i));
    return Graph(clique_size + is_size, edges);
}

Graph generate_balanced_split(std::size_t t, double edge_prob, std::uint64_t seed) {
    if (t < 2) throw PreconditionError("balanced instances need t >= 2");
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        Graph g = generate_split(t, t, edge_prob, seed + attempt);
        bool ok = true;
        for (std::size_t i = t; i < 2 * t && ok; ++i) {
            const std::size_t d = g.degree(static_cast<Vertex>(i));
            ok = d >= 1 && d + 1 <= t;
        }
        if (ok) return g;
    }
    throw PreconditionError("no balanced connected instance for t=" + std::to_string(t) +
                            " at edge probability " + std::to_string(edge_prob));
}

} // namespace splitcut
