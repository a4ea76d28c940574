#ifndef DGC_SPARSE_DENSE_HPP
#define DGC_SPARSE_DENSE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dgc/constants.hpp"
#include "dgc/decomposition.hpp"
#include "dgc/graph.hpp"
#include "dgc/sim.hpp"

namespace dgc {

// One wasteful coloring round: every target draws a uniform color from
// 1..C; both endpoints of any monochromatic edge uncolor themselves.
PartialColoring wasteful_round(const Graph& g, const VertexSet& targets, int C, std::uint64_t seed);

struct SparseColorOptions {
    std::uint64_t seed = 0;
    const ConstantsProfile* constants = nullptr; // required
    int palette = 0; // 0 -> floor(Delta/2)
    // Per-vertex repeated-color requirement, overriding the default derived
    // from beta * ell. Indexed by vertex id; 0 entries mean "no event".
    std::vector<std::int64_t> required_repeats;
    // Vertices that draw colors; defaults to `targets` when empty. Events are
    // always placed on `targets` only.
    VertexSet draw_set;
    sim::RoundStats* stats = nullptr;
    BreachLog* breaches = nullptr;
    std::vector<int>* violated_out = nullptr; // targets still bad on failure
};

// Wasteful round plus local-lemma repair: returns a proper partial coloring
// under which every uncolored target carries more than beta * ell repeated
// colors in its neighborhood (or its per-vertex override). Each bad event is
// anchored at its vertex and scoped to the color draws within distance two.
// Precondition: every target has at least ell * Delta non-adjacent pairs of
// neighbors inside the draw set.
PartialColoring sparse_color(const Graph& g, const VertexSet& targets, std::int64_t ell,
    const SparseColorOptions& opts);

// The five sets the component extension runs on. M pairs are non-adjacent in
// G and pairwise disjoint; U is the component minus the pair endpoints; Z the
// lowest-id vertices dominating at least |M|/6 pairs (capped at ceil(|U|/5));
// W0 the low-degree rest, W+ the rest with many Z-neighbors, W- the remainder.
struct DenseExtensionPlan {
    int component = -1;
    Matching M;
    VertexSet U, Z, W0, Wplus, Wminus;
};

DenseExtensionPlan plan_dense_extension(
    const Graph& g, const VertexSet& x, int k, BreachLog* breaches = nullptr);

// Extends a proper coloring of everything outside `comps` to a total proper
// c-coloring, running the five stages on all listed components at once:
// (1) merged antimatching pairs, (2) W-, (3) W+, (4) Z, (5) W0.
PartialColoring extend_components(const Graph& g, const std::vector<VertexSet>& comps,
    const PartialColoring& outer, int c, int k, std::uint64_t seed,
    sim::RoundStats* stats = nullptr, BreachLog* breaches = nullptr);

// Lemma-level wrapper: extends a coloring of the sparse set S over every
// dense component. Expects c >= Delta - k/48 and Delta >= 30k (recorded as
// breaches when the desk profile relaxes them).
PartialColoring dense_extend(const Graph& g, const DenseDecomposition& dec,
    const PartialColoring& s_coloring, int c, int k, std::uint64_t seed,
    sim::RoundStats* stats = nullptr, BreachLog* breaches = nullptr);

struct Theorem1Result {
    std::optional<std::pair<int, VertexSet>> certificate; // (vertex, clique)
    std::optional<PartialColoring> coloring;
    int palette = 0; // Delta - floor(eps * k) when coloring
    DenseDecomposition decomposition;
    sim::RoundStats stats;
    BreachLog breaches;
};

// End-to-end pipeline: clique certificate above Delta - k if one exists, else
// decomposition, wasteful sparse coloring with repair on the high-degree
// sparse vertices, list-coloring extension of S, and the dense-component
// extension, with palette Delta - floor(eps * k).
Theorem1Result theorem1_run(
    const Graph& g, int k, const ConstantsProfile& constants, std::uint64_t seed);

} // namespace dgc

#endif
