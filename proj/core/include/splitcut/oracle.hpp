#ifndef SPLITCUT_ORACLE_HPP
#define SPLITCUT_ORACLE_HPP

#include "splitcut/graph.hpp"
#include "splitcut/solver.hpp"

#include <cstddef>
#include <cstdint>

// Brute-force ground truth. Shares nothing with the solver beyond the Graph type: every cut
// is recounted from the edge list.
namespace splitcut::oracle {

inline constexpr std::size_t kDefaultCap = 20;

/// Tries all 2^(n-1) cuts with vertex 0 fixed on side 1; first maximum in mask order wins.
CutReport brute_force_maxcut(const Graph &g, std::size_t cap = kDefaultCap);

bool brute_force_decision(const Graph &g, std::int64_t k, std::size_t cap = kDefaultCap);

/// Tries all 2^n candidate cliques S and checks that V \ S is independent.
bool brute_force_split_check(const Graph &g, std::size_t cap = kDefaultCap);

} // namespace splitcut::oracle

#endif // SPLITCUT_ORACLE_HPP
