#ifndef DGC_DECOMPOSITION_HPP
#define DGC_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "dgc/graph.hpp"
#include "dgc/sim.hpp"

namespace dgc {

// Partition of V into a sparse set S and dense components X_1..X_t:
//   (1) S, X_1..X_t partition V
//   (2) Delta - 8d <= |X_i| <= Delta + 4d
//   (3) at most 8 d Delta edges leave each X_i
//   (4) v has >= 3 Delta / 4 neighbors in X_i  iff  v is in X_i
//   (5) every vertex of S is d-sparse
struct DenseDecomposition {
    VertexSet sparse;
    std::vector<VertexSet> components;
    int d = 0;
    int delta = 0;

    int component_of(int v) const; // -1 for S / not found
    std::string to_json() const;
    static DenseDecomposition from_json(const std::string& text);
};

// A vertex is d-dense when its neighborhood spans more than
// C(Delta,2) - d*Delta edges (Delta is the graph maximum degree, not deg(v)).
bool is_dense_vertex(const Graph& g, int v, int d);

// Two-phase constant-round construction. Phase 1 runs, per dense vertex v, a
// removal loop (drop u in D_v with fewer than 3 Delta / 4 neighbors inside)
// then an addition loop to fixpoint, ascending id, on radius-2 information.
// Phase 2 sends every vertex to the cluster of the smallest-id dense vertex
// whose fixpoint set contains it; unclustered sparse vertices (and sparse
// vertices whose anchor dissolved) go to S. Requires d <= Delta / 100.
DenseDecomposition build_decomposition(const Graph& g, int d, sim::RoundStats* stats = nullptr);

struct PropertyCheck {
    std::string name;
    bool pass = true;
    bool paper_breach = false; // failure attributable to small-Delta rounding
    std::string witness;
};

struct DecompositionReport {
    std::vector<PropertyCheck> checks;
    bool all_pass() const;
    std::string to_json() const;
};

// Per-property report with witnesses; also checks the diameter <= 2
// consequence when 8d <= Delta.
DecompositionReport verify_decomposition(const Graph& g, const DenseDecomposition& dec);

} // namespace dgc

#endif
