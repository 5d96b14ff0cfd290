#include "splitcut/solver.hpp"

#include "splitcut/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace splitcut {

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::alg1: return "alg1";
    case Algorithm::alg2: return "alg2";
    case Algorithm::trivial: return "trivial";
    case Algorithm::component_merge: return "component-merge";
    case Algorithm::oracle: return "oracle";
    }
    return "unknown";
}

namespace {

// Best value seen so far. Ties go to the smaller mask, then the smaller prefix length, which
// reproduces "first strict maximum" of a binary-counter scan with m ascending inside each mask.
struct Candidate {
    std::int64_t size = -1;
    std::uint64_t mask = 0;
    std::size_t prefix = 0;

    bool beats(const Candidate &o) const {
        if (size != o.size) return size > o.size;
        if (mask != o.mask) return mask < o.mask;
        return prefix < o.prefix;
    }
};

void require_width(std::size_t width) {
    if (width > kMaxEnumeratedSide)
        throw InstanceTooLarge("enumerated side has " + std::to_string(width) + " vertices, limit is " +
                               std::to_string(kMaxEnumeratedSide));
}

void require_universe(const Graph &g, const VertexSet &s, const char *name) {
    if (s.universe() != g.num_vertices())
        throw PreconditionError(std::string(name) + " is over a universe of " + std::to_string(s.universe()) +
                                " vertices, graph has " + std::to_string(g.num_vertices()));
}

void require_partition(const VertexSet &a, const VertexSet &b, const VertexSet &whole, const char *what) {
    if (a.intersects(b) || (a | b) != whole) throw InvalidPartition(std::string(what));
}

VertexSet set_from_mask(std::size_t universe, const std::vector<Vertex> &bits, std::uint64_t mask) {
    VertexSet out(universe);
    for (std::size_t j = 0; j < bits.size(); ++j)
        if ((mask >> j) & 1U) out.insert(bits[j]);
    return out;
}

// Incremental state for the independent-set route. The enumerated side is V \ I; bit j of the
// mask selects the j-th smallest such vertex into C1.
class IndependentRoute {
public:
    IndependentRoute(const Graph &g, const VertexSet &independent)
        : g_(&g), enumerated_(independent.complement().members()), independent_(g.num_vertices(), 0),
          deg_rest_(g.num_vertices(), 0), in_c1_(g.num_vertices(), 0) {
        const VertexSet rest = independent.complement();
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            independent_[v] = independent.contains(v) ? 1 : 0;
            deg_rest_[v] = static_cast<std::int32_t>(g.degree_into(v, rest));
        }
    }

    std::size_t width() const { return enumerated_.size(); }

    void reset(std::uint64_t mask) {
        std::fill(in_c1_.begin(), in_c1_.end(), 0);
        for (std::size_t j = 0; j < enumerated_.size(); ++j)
            if ((mask >> j) & 1U)
                for (Vertex y : g_->neighbors(enumerated_[j])) ++in_c1_[y];
        cross_ = 0;
        for (std::size_t j = 0; j < enumerated_.size(); ++j)
            if ((mask >> j) & 1U) cross_ += deg_rest_[enumerated_[j]] - in_c1_[enumerated_[j]];
        placed_ = 0;
        for (Vertex v = 0; v < independent_.size(); ++v)
            if (independent_[v]) placed_ += contribution(v);
    }

    void flip(std::size_t bit, bool entering) {
        const Vertex x = enumerated_[bit];
        const std::int64_t delta = deg_rest_[x] - 2 * std::int64_t{in_c1_[x]};
        cross_ += entering ? delta : -delta;
        const std::int32_t step = entering ? 1 : -1;
        for (Vertex y : g_->neighbors(x)) {
            if (independent_[y]) {
                placed_ -= contribution(y);
                in_c1_[y] += step;
                placed_ += contribution(y);
            } else {
                in_c1_[y] += step;
            }
        }
    }

    void offer(std::uint64_t mask, Candidate &best) const {
        const Candidate here{cross_ + placed_, mask, 0};
        if (here.beats(best)) best = here;
    }

    const std::vector<Vertex> &enumerated() const { return enumerated_; }

private:
    std::int64_t contribution(Vertex v) const { return std::max(in_c1_[v], deg_rest_[v] - in_c1_[v]); }

    const Graph *g_;
    std::vector<Vertex> enumerated_;
    std::vector<std::uint8_t> independent_;
    std::vector<std::int32_t> deg_rest_;
    std::vector<std::int32_t> in_c1_;
    std::int64_t cross_ = 0;
    std::int64_t placed_ = 0;
};

// Incremental state for the clique route. The enumerated side is V \ C; bit j selects the j-th
// smallest such vertex into I1. For a fixed I1 the cut with |C1| = m is
//   m(|C| - m) + sum_{v in C} |N(v) ∩ I1| + (sum of the m largest keys) + |E(I1, I2)|.
class CliqueRoute {
public:
    CliqueRoute(const Graph &g, const VertexSet &clique)
        : g_(&g), enumerated_(clique.complement().members()), clique_(clique.members()),
          in_clique_(g.num_vertices(), 0), deg_rest_(g.num_vertices(), 0), in_i1_(g.num_vertices(), 0),
          keys_(clique_.size(), 0) {
        const VertexSet rest = clique.complement();
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            in_clique_[v] = clique.contains(v) ? 1 : 0;
            deg_rest_[v] = static_cast<std::int32_t>(g.degree_into(v, rest));
        }
    }

    std::size_t width() const { return enumerated_.size(); }

    void reset(std::uint64_t mask) {
        std::fill(in_i1_.begin(), in_i1_.end(), 0);
        for (std::size_t j = 0; j < enumerated_.size(); ++j)
            if ((mask >> j) & 1U)
                for (Vertex y : g_->neighbors(enumerated_[j])) ++in_i1_[y];
        cross_ = 0;
        for (std::size_t j = 0; j < enumerated_.size(); ++j)
            if ((mask >> j) & 1U) cross_ += deg_rest_[enumerated_[j]] - in_i1_[enumerated_[j]];
        clique_to_i1_ = 0;
        for (Vertex v : clique_) clique_to_i1_ += in_i1_[v];
    }

    void flip(std::size_t bit, bool entering) {
        const Vertex u = enumerated_[bit];
        const std::int64_t delta = deg_rest_[u] - 2 * std::int64_t{in_i1_[u]};
        cross_ += entering ? delta : -delta;
        const std::int32_t step = entering ? 1 : -1;
        for (Vertex y : g_->neighbors(u)) {
            in_i1_[y] += step;
            if (in_clique_[y]) clique_to_i1_ += step;
        }
    }

    void offer(std::uint64_t mask, Candidate &best) {
        for (std::size_t i = 0; i < clique_.size(); ++i) keys_[i] = deg_rest_[clique_[i]] - 2 * in_i1_[clique_[i]];
        std::sort(keys_.begin(), keys_.end(), std::greater<>());
        const auto c = static_cast<std::int64_t>(clique_.size());
        const std::int64_t base = clique_to_i1_ + cross_;
        std::int64_t prefix = 0;
        for (std::int64_t m = 0; m <= c; ++m) {
            const Candidate here{m * (c - m) + base + prefix, mask, static_cast<std::size_t>(m)};
            if (here.beats(best)) best = here;
            if (m < c) prefix += keys_[static_cast<std::size_t>(m)];
        }
    }

    const std::vector<Vertex> &enumerated() const { return enumerated_; }

private:
    const Graph *g_;
    std::vector<Vertex> enumerated_;
    std::vector<Vertex> clique_;
    std::vector<std::uint8_t> in_clique_;
    std::vector<std::int32_t> deg_rest_;
    std::vector<std::int32_t> in_i1_;
    std::vector<std::int32_t> keys_;
    std::int64_t cross_ = 0;
    std::int64_t clique_to_i1_ = 0;
};

// Visits masks in Gray-code order over [lo, hi) so that consecutive subsets differ in one bit.
template <typename Route>
Candidate scan_block(Route route, std::uint64_t lo, std::uint64_t hi) {
    Candidate best;
    std::uint64_t mask = lo ^ (lo >> 1);
    route.reset(mask);
    route.offer(mask, best);
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        mask ^= std::uint64_t{1} << bit;
        route.flip(bit, ((mask >> bit) & 1U) != 0);
        route.offer(mask, best);
    }
    return best;
}

template <typename Route>
Candidate scan_all(const Route &route, unsigned threads) {
    const std::uint64_t total = std::uint64_t{1} << route.width();
    const std::uint64_t blocks = std::min<std::uint64_t>(std::max(threads, 1U), total);
    if (blocks == 1) return scan_block(route, 0, total);

    std::vector<Candidate> results(blocks);
    std::vector<std::thread> workers;
    workers.reserve(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = total / blocks * b + std::min(b, total % blocks);
        const std::uint64_t hi = lo + total / blocks + (b < total % blocks ? 1 : 0);
        workers.emplace_back([&, b, lo, hi] { results[b] = scan_block(route, lo, hi); });
    }
    for (auto &w : workers) w.join();
    Candidate best;
    for (const auto &r : results)
        if (r.beats(best)) best = r;
    return best;
}

CutReport finish(const Graph &g, Cut cut, Algorithm algorithm, std::uint64_t subsets, std::int64_t expected) {
    const std::size_t size = cut_size(g, cut);
    if (static_cast<std::int64_t>(size) != expected)
        throw std::logic_error("incremental cut value " + std::to_string(expected) + " disagrees with witness size " +
                               std::to_string(size));
    return CutReport{std::move(cut), size, algorithm, subsets};
}

CutReport trivial_report(const Graph &g, VertexSet side1) {
    Cut cut = Cut::from_side1(std::move(side1));
    const std::size_t size = cut_size(g, cut);
    return CutReport{std::move(cut), size, Algorithm::trivial, 0};
}

CutReport solve_component(const Graph &g, const SplitPartition &p, const SolveOptions &options) {
    const bool independent_route =
        options.dispatch == Dispatch::force_alg1 ||
        (options.dispatch == Dispatch::automatic && p.clique().count() <= p.independent().count());
    return independent_route ? maxcut_given_is(g, p.independent(), options)
                             : maxcut_given_clique(g, p.clique(), options);
}

} // namespace

IndependentPlacement greedy_extend_is(const Graph &g, const VertexSet &independent, const VertexSet &c1,
                                      const VertexSet &c2) {
    require_universe(g, independent, "independent set");
    require_universe(g, c1, "c1");
    require_universe(g, c2, "c2");
    require_partition(c1, c2, independent.complement(), "c1 and c2 must partition the vertices outside the independent set");
    if (!is_independent_set(g, independent)) throw PreconditionError("vertex set is not independent");

    IndependentPlacement out{VertexSet(g.num_vertices()), VertexSet(g.num_vertices())};
    independent.for_each([&](Vertex v) {
        if (g.degree_into(v, c2) >= g.degree_into(v, c1))
            out.i1.insert(v);
        else
            out.i2.insert(v);
    });
    return out;
}

CutReport maxcut_given_is(const Graph &g, const VertexSet &independent, const SolveOptions &options) {
    require_universe(g, independent, "independent set");
    if (!is_independent_set(g, independent)) throw PreconditionError("vertex set is not independent");
    const IndependentRoute route(g, independent);
    require_width(route.width());

    const Candidate best = scan_all(route, options.threads);
    const VertexSet c1 = set_from_mask(g.num_vertices(), route.enumerated(), best.mask);
    const VertexSet c2 = independent.complement() - c1;
    const auto [i1, i2] = greedy_extend_is(g, independent, c1, c2);
    return finish(g, Cut(c1 | i1, c2 | i2), Algorithm::alg1, std::uint64_t{1} << route.width(), best.size);
}

CliquePlacement clique_prefix_partition(const Graph &g, const VertexSet &clique, const VertexSet &i1,
                                        const VertexSet &i2, std::size_t m) {
    require_universe(g, clique, "clique");
    require_universe(g, i1, "i1");
    require_universe(g, i2, "i2");
    require_partition(i1, i2, clique.complement(), "i1 and i2 must partition the vertices outside the clique");
    if (m > clique.count())
        throw PreconditionError("prefix length " + std::to_string(m) + " exceeds clique size " +
                                std::to_string(clique.count()));

    std::vector<std::pair<std::int64_t, Vertex>> order;
    order.reserve(clique.count());
    clique.for_each([&](Vertex v) {
        const auto key = static_cast<std::int64_t>(g.degree_into(v, i2)) - static_cast<std::int64_t>(g.degree_into(v, i1));
        order.emplace_back(key, v);
    });
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) { return a.first > b.first; });

    CliquePlacement out{VertexSet(g.num_vertices()), VertexSet(g.num_vertices())};
    for (std::size_t i = 0; i < order.size(); ++i) (i < m ? out.c1 : out.c2).insert(order[i].second);
    return out;
}

CutReport maxcut_given_clique(const Graph &g, const VertexSet &clique, const SolveOptions &options) {
    require_universe(g, clique, "clique");
    if (!is_clique(g, clique)) throw PreconditionError("vertex set is not a clique");
    const CliqueRoute route(g, clique);
    require_width(route.width());

    const Candidate best = scan_all(route, options.threads);
    const VertexSet i1 = set_from_mask(g.num_vertices(), route.enumerated(), best.mask);
    const VertexSet i2 = clique.complement() - i1;
    const auto [c1, c2] = clique_prefix_partition(g, clique, i1, i2, best.prefix);
    return finish(g, Cut(c1 | i1, c2 | i2), Algorithm::alg2, std::uint64_t{1} << route.width(), best.size);
}

CutReport maxcut_split(const Graph &g, const SolveOptions &options) {
    const std::size_t n = g.num_vertices();
    if (n <= 1 || g.num_edges() == 0) return trivial_report(g, g.all_vertices());
    if (g.num_edges() == n * (n - 1) / 2) {
        VertexSet half(n);
        for (Vertex v = 0; v < n / 2; ++v) half.insert(v);
        return trivial_report(g, std::move(half));
    }

    const auto components = connected_components(g);
    if (components.size() == 1) {
        const auto partition = recognize_split(g);
        if (!partition) throw NotSplitGraph();
        return solve_component(g, *partition, options);
    }

    VertexSet side1(n);
    std::uint64_t subsets = 0;
    std::size_t solved = 0;
    Algorithm algorithm = Algorithm::trivial;
    for (const auto &component : components) {
        if (component.count() == 1) {
            side1 |= component;
            continue;
        }
        const auto sub = induced_subgraph(g, component);
        const auto local = recognize_split(sub.graph);
        if (!local) throw NotSplitGraph();
        const CutReport r = solve_component(sub.graph, *local, options);
        r.cut.side1().for_each([&](Vertex v) { side1.insert(sub.to_parent[v]); });
        subsets += r.subsets_enumerated;
        algorithm = r.algorithm;
        ++solved;
    }
    Cut cut = Cut::from_side1(std::move(side1));
    const std::size_t size = cut_size(g, cut);
    return CutReport{std::move(cut), size, solved == 1 ? algorithm : Algorithm::component_merge, subsets};
}

DecisionReport decide_maxcut_report(const Graph &g, std::uint64_t k, const SolveOptions &options) {
    const auto partition = recognize_split(g);
    if (!partition) throw NotSplitGraph();

    DecisionReport out;
    out.clique_size = partition->clique().count();
    const std::uint64_t c = out.clique_size;
    if (k <= std::numeric_limits<std::uint64_t>::max() / 4 && 4 * k <= c * c) {
        out.yes = true;
        out.early_exit = true;
        return out;
    }
    const CutReport r = maxcut_given_is(g, partition->independent(), options);
    out.yes = r.size >= k;
    out.subsets_enumerated = r.subsets_enumerated;
    return out;
}

} // namespace splitcut
