#ifndef DGC_LIST_COLORING_HPP
#define DGC_LIST_COLORING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dgc/graph.hpp"
#include "dgc/sim.hpp"

namespace dgc {

// Lists of available colors over the uncolored subgraph, plus the slack
// |L(u)| - d_U(u) that every extension argument runs on.
struct ResidualLists {
    Graph uncolored_subgraph; // relabeled 1..k
    std::vector<int> old_of_new; // new id -> original id
    std::vector<std::vector<int>> lists; // per new id, sorted ascending
    std::vector<int> slack; // per new id
    std::vector<int> repeated; // repeated colors in the original neighborhood
};

ResidualLists residual_lists(const Graph& g, const PartialColoring& colored, int palette);

// Colors assigned to at least two neighbors of v.
int repeated_colors(const Graph& g, int v, const PartialColoring& coloring);

struct DegPlusOptions {
    std::uint64_t seed = 0;
    int max_trial_rounds = 4096;
    int proposal_num = 1; // proposal probability num/den
    int proposal_den = 2;
    sim::RoundStats* stats = nullptr;
};

// Randomized (deg+1)-list coloring: each trial round every uncolored vertex
// proposes a uniform color from its current list with probability 1/2 and
// keeps it iff no uncolored neighbor proposed the same color; kept colors are
// removed from neighbors' lists. Requires |L(u)| >= deg(u)+1.
PartialColoring solve_deg_plus(
    const Graph& gU, const std::vector<std::vector<int>>& lists, const DegPlusOptions& opts);

// Colors every uncolored member of `subset`, reading conflicts from already
// colored vertices anywhere in g; vertices outside the subset that are still
// uncolored do not constrain anything (they are colored by a later stage).
PartialColoring color_subset(const Graph& g, const PartialColoring& colored,
    const std::vector<int>& subset, int c, int required_slack, std::uint64_t seed,
    const std::string& stage = "extend", sim::RoundStats* stats = nullptr);

// Total proper c-coloring of g agreeing with `colored` on its domain.
PartialColoring extend(const Graph& g, const PartialColoring& colored, int c, int required_slack,
    std::uint64_t seed, sim::RoundStats* stats = nullptr);

} // namespace dgc

#endif
