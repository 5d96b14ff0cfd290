#include "splitcut/oracle.hpp"

#include "splitcut/errors.hpp"

#include <string>
#include <vector>

namespace splitcut::oracle {

namespace {

void require_cap(const Graph &g, std::size_t cap) {
    if (g.num_vertices() > cap || g.num_vertices() > 63)
        throw InstanceTooLarge("oracle limited to " + std::to_string(cap) + " vertices, instance has " +
                               std::to_string(g.num_vertices()));
}

} // namespace

CutReport brute_force_maxcut(const Graph &g, std::size_t cap) {
    require_cap(g, cap);
    const std::size_t n = g.num_vertices();
    const auto edges = g.edges();
    std::uint64_t best_mask = 0;
    std::size_t best = 0;
    // bit i of `side` set means vertex i is on side 2; vertex 0 never is.
    const std::uint64_t limit = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t half = 0; half < limit; ++half) {
        const std::uint64_t side = half << 1;
        std::size_t crossing = 0;
        for (const auto &[u, v] : edges)
            if (((side >> u) & 1U) != ((side >> v) & 1U)) ++crossing;
        if (crossing > best) {
            best = crossing;
            best_mask = side;
        }
    }
    VertexSet side1(n);
    for (Vertex v = 0; v < n; ++v)
        if (((best_mask >> v) & 1U) == 0) side1.insert(v);
    return CutReport{Cut::from_side1(std::move(side1)), best, Algorithm::oracle, limit};
}

bool brute_force_decision(const Graph &g, std::int64_t k, std::size_t cap) {
    return static_cast<std::int64_t>(brute_force_maxcut(g, cap).size) >= k;
}

bool brute_force_split_check(const Graph &g, std::size_t cap) {
    require_cap(g, cap);
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto &[u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    for (std::uint64_t s = 0;; ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (s & bit)
                ok = (adj[v] & s) == (s & ~bit);
            else
                ok = (adj[v] & (all & ~s)) == 0;
        }
        if (ok) return true;
        if (s == all) break;
    }
    return false;
}

} // namespace splitcut::oracle
