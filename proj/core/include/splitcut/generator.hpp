#ifndef SPLITCUT_GENERATOR_HPP
#define SPLITCUT_GENERATOR_HPP

#include "splitcut/graph.hpp"

#include <cstddef>
#include <cstdint>

namespace splitcut {

/**
 * Random split graph: vertices 0..clique_size-1 form a clique, the next is_size vertices an
 * independent set. The stream is std::mt19937_64 seeded with `seed`; one draw per
 * (clique, independent) pair in row-major order, taking its top 53 bits as a uniform
 * u in [0, 1) and adding the edge iff u < edge_prob. Output is identical on every platform.
 */
Graph generate_split(std::size_t clique_size, std::size_t is_size, double edge_prob, std::uint64_t seed);

/**
 * Balanced instance for the work-bound benchmark: |C| = |I| = t, connected, and recognized
 * with exactly that partition (each independent vertex has between 1 and t-1 clique
 * neighbours). Attempt a uses seed `seed + a`; throws PreconditionError after 1000 misses.
 */
Graph generate_balanced_split(std::size_t t, double edge_prob, std::uint64_t seed);

} // namespace splitcut

#endif // SPLITCUT_GENERATOR_HPP
