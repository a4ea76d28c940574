#ifndef DGC_LOWERBOUND_HPP
#define DGC_LOWERBOUND_HPP

#include <string>
#include <utility>
#include <vector>

#include "dgc/graph.hpp"
#include "dgc/reducers.hpp"

namespace dgc {

// The chain G_i: start from K_{c+1}; each step removes the lowest-id vertex of
// the previous layer's clique, adds a stable set of Delta-c+2 vertices fully
// joined to a fresh clique of c-1 vertices, and hands the removed vertex's
// edges to the stable set round-robin. Not c-colorable; deleting any edge
// makes it c-colorable.
struct LayeredGraph {
    Graph graph;
    std::vector<int> layer_of; // per vertex, 1..layers
    enum Role { clique = 0, stable = 1 };
    std::vector<int> role_of; // per vertex (layer 1 counts as clique)
    std::vector<int> removed_degree; // degree each removed vertex had, per step
    int delta = 0;
    int c = 0;
    int layers = 0;

    std::string layers_json() const;
};

// c <= Delta - k_Delta - 1, or c = Delta - k_Delta with Delta = (k+1)(k+2);
// equivalently (Delta-c+2)(Delta-c+1) >= Delta, which the degree split needs.
std::pair<bool, std::string> valid_parameters(int delta, int c);

LayeredGraph build_chain(int delta, int c, int i);

// G_i minus the lowest-id edge crossing layers i/2 and i/2+1. Requires i even
// and >= 4; the result is c-colorable with maximum degree <= Delta.
Graph build_hard_instance(int delta, int c, int i);

struct BallMatch {
    int vertex = 0; // in the chain graph
    int matched_to = 0; // vertex of the hard instance, 0 when unmatched
};

struct IndistinguishabilityReport {
    std::vector<BallMatch> matches;
    int matched = 0;
    int total = 0;
    std::string to_json() const;
};

// For every vertex of the chain, looks for a vertex of the hard instance with
// an isomorphic radius ball. Radius capped at 3 (ball isomorphism is
// backtracking search).
IndistinguishabilityReport indistinguishability_report(
    const Graph& g_hard, const LayeredGraph& g_chain, int radius);

// The top layer C_i + S_i viewed as a c-reducer (it always is one).
ReducerSpec top_reducer(const LayeredGraph& chain);

} // namespace dgc

#endif
