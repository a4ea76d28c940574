#ifndef DGC_EXACT_HPP
#define DGC_EXACT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dgc/graph.hpp"

namespace dgc {

// Exact c-colorability by backtracking with DSATUR vertex order and a
// clique-based lower-bound prune. Budget-capped with explicit failure, never a
// wrong answer. `precolored` may pin colors (0 = free).
bool exact_colorable(const Graph& g, int c, std::uint64_t budget = 50'000'000,
    std::vector<int>* coloring_out = nullptr);

// Number of backtracking nodes the last exact_colorable call visited (proof
// trace length for certificates). Not thread-safe across concurrent solves.
std::uint64_t exact_last_trace_length();

// Exact chromatic number via clique lower bound plus incremental colorability.
int chromatic_number(const Graph& g, std::uint64_t budget = 50'000'000);

// Maximum clique of the whole graph (branch and bound).
std::vector<int> maximum_clique(const Graph& g, std::uint64_t budget = 50'000'000);

// Maximum matching size in an arbitrary graph (Edmonds blossom).
int maximum_matching_size(const Graph& g);

// Maximum matching size in the complement of g[s].
int complement_matching_size(const Graph& g, const VertexSet& s);

// Backtracking isomorphism test with degree invariants; fine at desk scale.
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace dgc

#endif
