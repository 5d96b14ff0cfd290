#ifndef SPLITCUT_SPLIT_HPP
#define SPLITCUT_SPLIT_HPP

#include "splitcut/graph.hpp"

#include <optional>

namespace splitcut {

/// A clique / independent-set partition that has been checked against its graph.
class SplitPartition {
public:
    /// Throws InvalidPartition if the sets do not partition g's vertices, and
    /// PreconditionError if the clique or independent side fails its check.
    SplitPartition(const Graph &g, VertexSet clique, VertexSet independent);

    const VertexSet &clique() const { return clique_; }
    const VertexSet &independent() const { return independent_; }

private:
    VertexSet clique_;
    VertexSet independent_;
};

/**
 * Hammer-Simeone splittance test: with degrees sorted non-increasingly,
 * m* = max{i : d_i >= i-1}, and g is split iff
 * sum_{i<=m*} d_i == m*(m*-1) + sum_{i>m*} d_i.
 *
 * On success the clique side is the m* highest-degree vertices, ties broken by
 * ascending vertex id. Returns nullopt for non-split graphs.
 */
std::optional<SplitPartition> recognize_split(const Graph &g);

/// The degree-sequence criterion alone, without materializing a partition.
bool satisfies_splittance(const Graph &g);

/// Throws InvalidPartition unless clique and independent partition the vertex set.
bool verify_partition(const Graph &g, const VertexSet &clique, const VertexSet &independent);
bool verify_partition(const Graph &g, const SplitPartition &p);

} // namespace splitcut

#endif // SPLITCUT_SPLIT_HPP
