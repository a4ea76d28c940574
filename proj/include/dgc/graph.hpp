#ifndef DGC_GRAPH_HPP
#define DGC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgc/error.hpp"

namespace dgc {

// Set of vertex ids with deterministic (ascending) iteration order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    static VertexSet range(int lo, int hi); // inclusive

    bool contains(int v) const;
    void add(int v);
    void remove(int v);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_; // sorted, unique
};

// Simple undirected graph on vertices 1..n with sorted adjacency lists and a
// cached maximum degree. Immutable after construction; all queries are pure.
class Graph {
public:
    Graph() = default;

    // Edges may contain duplicates (collapsed); self-loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    int delta() const { return delta_; }
    int degree(int v) const { return static_cast<int>(adjacency(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency(v); }
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `verts`, relabeled to 1..k in ascending id order.
    // old_of_new[i] (1-based) recovers the original id of new vertex i.
    Graph induced(const std::vector<int>& verts, std::vector<int>* old_of_new = nullptr) const;

    void check_vertex(int v) const;

private:
    const std::vector<int>& adjacency(int v) const
    {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int n_ = 0;
    int m_ = 0;
    int delta_ = 0;
    std::vector<std::vector<int>> adj_; // index 0 unused
};

// Vertex -> optional color in 1..palette, proper on its colored domain
// (properness is the caller's invariant; is_proper checks it).
struct PartialColoring {
    std::vector<int> color; // index 0 unused; 0 = uncolored
    int palette = 0;

    static PartialColoring empty(int n, int palette)
    {
        PartialColoring pc;
        pc.color.assign(static_cast<std::size_t>(n) + 1, 0);
        pc.palette = palette;
        return pc;
    }
    bool colored(int v) const { return color[static_cast<std::size_t>(v)] != 0; }
    int at(int v) const { return color[static_cast<std::size_t>(v)]; }
    void set(int v, int c) { color[static_cast<std::size_t>(v)] = c; }
    int colored_count() const;
    bool total(int n) const;
    int max_color() const;
};

// Disjoint vertex pairs; each pair's adjacency status (in G or in the
// complement) is asserted at construction time by the factory helpers.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// ---- edge-list / JSON I/O ----------------------------------------------------

// Text format: header "p <n> <m>", then m lines "<u> <v>", '#' comments.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path); // dispatches on .json extension
void save_graph(const Graph& g, std::ostream& out);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
void save_graph_file(const Graph& g, const std::string& path);

// ---- combinatorial primitives -----------------------------------------------

// Max k with (k+1)(k+2) <= delta. Requires delta >= 2.
int k_delta(int delta);

// Unordered non-adjacent pairs {u,w} inside N(v) (optionally intersected with
// `restrict`).
std::int64_t non_adjacent_pairs_in_neighborhood(
    const Graph& g, int v, const VertexSet* restrict_to = nullptr);

// Ascending-id greedy maximal matching in the complement of g[s]. The
// uncovered vertices of s always form a clique in g.
Matching greedy_complement_matching(const Graph& g, const VertexSet& s);

// Exact per-closed-neighborhood search for a clique of size > threshold.
// Returns (anchor vertex, clique) or nullopt. Throws BudgetExceeded naming the
// neighborhood where the branch budget ran out.
std::optional<std::pair<int, VertexSet>> find_clique_above(
    const Graph& g, int threshold, std::uint64_t budget_per_neighborhood = 10'000'000);

bool is_proper(const Graph& g, const PartialColoring& coloring);

// First improperly colored edge, if any.
std::optional<std::pair<int, int>> find_conflict_edge(const Graph& g, const PartialColoring& c);

bool is_clique(const Graph& g, const std::vector<int>& verts);
bool is_stable(const Graph& g, const std::vector<int>& verts);

} // namespace dgc

#endif
