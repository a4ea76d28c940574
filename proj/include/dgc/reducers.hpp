#ifndef DGC_REDUCERS_HPP
#define DGC_REDUCERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgc/constants.hpp"
#include "dgc/decomposition.hpp"
#include "dgc/graph.hpp"
#include "dgc/sim.hpp"

namespace dgc {

// A clique of c-1 vertices fully joined to a disjoint stable set, the clique
// having no neighbors outside the union. Deleting the clique and contracting
// the stable set preserves c-colorability in both directions.
struct ReducerSpec {
    VertexSet clique; // size c-1
    VertexSet stable; // nonempty
    int component_id = -1;
};

// Literal definitional test on X_i: candidate clique = members whose whole
// neighborhood stays inside X_i, stable part = the rest.
std::optional<ReducerSpec> detect_reducer(const Graph& g, const VertexSet& x, int c);

// Fewer than c outside vertices see the stable set.
bool is_deletable(const Graph& g, const ReducerSpec& r, int c);

struct Reduction {
    Graph graph;
    std::vector<int> old_of_new; // new id -> original id; 0 for contracted vertices
    std::vector<int> contracted; // new ids of the per-reducer contraction vertices
};

// Remove the clique, contract the stable set into one vertex (placed after the
// surviving vertices, which keep ascending order).
Reduction reduce(const Graph& g, const ReducerSpec& r);
Reduction reduce_all(const Graph& g, const std::vector<ReducerSpec>& reducers);

// Extends a proper coloring of G minus the reducers: colors every contraction
// vertex in the reduced graph by list coloring (degree there is at most c-1),
// copies that color onto the whole stable set, and gives the clique the c-1
// remaining colors.
PartialColoring extend_over_reducers(const Graph& g, const std::vector<ReducerSpec>& reducers,
    const PartialColoring& outer, int c, std::uint64_t seed, sim::RoundStats* stats = nullptr);

// Complement of g[x] contains a matching of at least `threshold` pairs.
// Greedy maximal matching as a 2-approximate prefilter, exact augmenting-path
// matching for the undecided band.
bool detect_hollow(const Graph& g, const VertexSet& x, int threshold);

// Runs the five-stage dense extension on the listed hollow components only.
PartialColoring extend_over_hollow(const Graph& g, const DenseDecomposition& dec,
    const std::vector<int>& hollow_ids, const PartialColoring& outer, int c, int k_equiv,
    std::uint64_t seed, sim::RoundStats* stats = nullptr, BreachLog* breaches = nullptr);

struct Certificate {
    int vertex = 0;
    Graph subgraph; // induced closed neighborhood, relabeled
    std::vector<int> old_of_new;
    int c = 0;
    std::uint64_t trace_length = 0; // solver nodes visited proving non-colorability
    std::string to_json() const;
};

struct CertifyReport {
    std::optional<Certificate> certificate;
    // "no certificate" implies chi <= c only under these hypotheses:
    bool hypothesis_c_large_enough = false; // c >= Delta - k_Delta + 1
    int scanned = 0;
};

// Scans every closed neighborhood with the exact c-colorability solver;
// certificates are re-verified before being returned.
CertifyReport certify_non_colorable(const Graph& g, int c, std::uint64_t budget = 50'000'000);

} // namespace dgc

#endif
