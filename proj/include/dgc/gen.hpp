#ifndef DGC_GEN_HPP
#define DGC_GEN_HPP

#include <cstdint>

#include "dgc/graph.hpp"

namespace dgc {

// Random graph with maximum degree <= delta (random edge insertions under a
// degree cap, duplicate and self-edges rejected). With plant_cap > 0, the
// first plant_cap vertices are filled up to degree exactly delta so the cap
// is attained.
Graph gen_random_capped(int n, int delta, std::uint64_t seed, int plant_cap = 1,
    double fill = 0.7);

// Bipartite (hence triangle-free) variant: random cross edges under the cap,
// optionally with planted maximum-degree vertices.
Graph gen_random_bipartite(int n, int delta, std::uint64_t seed, int plant_cap = 1,
    double fill = 0.7);

// Disjoint union of `count` copies of K_{delta+1}, optionally each minus a
// perfect matching (delta odd not required: with delta+1 odd the last vertex
// keeps full degree).
Graph gen_clique_union(int delta, int count, bool minus_perfect_matching);

} // namespace dgc

#endif
