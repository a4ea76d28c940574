#include "dgc/reducers.hpp"

#include <algorithm>

#include <json.hpp>

#include "dgc/error.hpp"
#include "dgc/exact.hpp"
#include "dgc/list_coloring.hpp"
#include "dgc/sparse_dense.hpp"

namespace dgc {

std::optional<ReducerSpec> detect_reducer(const Graph& g, const VertexSet& x, int c)
{
    std::vector<int> clique_ids, stable_ids;
    for (int v : x) {
        bool inside_only = true;
        for (int u : g.neighbors(v))
            if (!x.contains(u)) {
                inside_only = false;
                break;
            }
        (inside_only ? clique_ids : stable_ids).push_back(v);
    }
    if (static_cast<int>(clique_ids.size()) != c - 1 || stable_ids.empty())
        return std::nullopt;
    if (!is_clique(g, clique_ids) || !is_stable(g, stable_ids))
        return std::nullopt;
    for (int v : clique_ids)
        for (int s : stable_ids)
            if (!g.adjacent(v, s))
                return std::nullopt;
    ReducerSpec r;
    r.clique = VertexSet(clique_ids);
    r.stable = VertexSet(stable_ids);
    return r;
}

bool is_deletable(const Graph& g, const ReducerSpec& r, int c)
{
    std::vector<int> external;
    for (int s : r.stable)
        for (int u : g.neighbors(s))
            if (!r.stable.contains(u) && !r.clique.contains(u))
                external.push_back(u);
    std::sort(external.begin(), external.end());
    external.erase(std::unique(external.begin(), external.end()), external.end());
    return static_cast<int>(external.size()) < c;
}

Reduction reduce_all(const Graph& g, const std::vector<ReducerSpec>& reducers)
{
    std::vector<int> owner(static_cast<std::size_t>(g.n()) + 1, -1); // reducer index or -1
    std::vector<char> in_clique(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        for (int v : reducers[i].clique) {
            if (owner[static_cast<std::size_t>(v)] != -1)
                throw PreconditionError("reducers overlap at vertex " + std::to_string(v));
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
            in_clique[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : reducers[i].stable) {
            if (owner[static_cast<std::size_t>(v)] != -1)
                throw PreconditionError("reducers overlap at vertex " + std::to_string(v));
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    Reduction red;
    std::vector<int> new_of_old(static_cast<std::size_t>(g.n()) + 1, 0);
    red.old_of_new.push_back(0); // index 0 unused
    for (int v = 1; v <= g.n(); ++v)
        if (owner[static_cast<std::size_t>(v)] == -1) {
            new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(red.old_of_new.size());
            red.old_of_new.push_back(v);
        }
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        red.contracted.push_back(static_cast<int>(red.old_of_new.size()));
        red.old_of_new.push_back(0);
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : g.edges()) {
        if (in_clique[static_cast<std::size_t>(u)] || in_clique[static_cast<std::size_t>(w)])
            continue;
        int ou = owner[static_cast<std::size_t>(u)];
        int ow = owner[static_cast<std::size_t>(w)];
        int a = ou == -1 ? new_of_old[static_cast<std::size_t>(u)]
                         : red.contracted[static_cast<std::size_t>(ou)];
        int b = ow == -1 ? new_of_old[static_cast<std::size_t>(w)]
                         : red.contracted[static_cast<std::size_t>(ow)];
        if (a != b)
            edges.push_back({ a, b });
    }
    red.graph = Graph::from_edges(static_cast<int>(red.old_of_new.size()) - 1, edges);
    return red;
}

Reduction reduce(const Graph& g, const ReducerSpec& r) { return reduce_all(g, { r }); }

PartialColoring extend_over_reducers(const Graph& g, const std::vector<ReducerSpec>& reducers,
    const PartialColoring& outer, int c, std::uint64_t seed, sim::RoundStats* stats)
{
    for (const ReducerSpec& r : reducers) {
        if (static_cast<int>(r.clique.size()) != c - 1)
            throw PreconditionError("reducer clique has " + std::to_string(r.clique.size())
                + " vertices, expected c-1");
        if (!is_deletable(g, r, c))
            throw PreconditionError("reducer is not deletable: its stable set has >= c external "
                                    "neighbors");
    }
    if (auto conflict = find_conflict_edge(g, outer))
        throw PreconditionError("extend_over_reducers: outer coloring improper on edge "
            + std::to_string(conflict->first) + "-" + std::to_string(conflict->second));

    Reduction red = reduce_all(g, reducers);
    for (std::size_t i = 1; i < red.old_of_new.size(); ++i) {
        int v = red.old_of_new[i];
        if (v != 0 && !outer.colored(v))
            throw PreconditionError(
                "extend_over_reducers: vertex " + std::to_string(v) + " outside the reducers "
                                                                      "is uncolored");
    }

    PartialColoring reduced_coloring = PartialColoring::empty(red.graph.n(), c);
    for (int nv = 1; nv <= red.graph.n(); ++nv)
        if (int ov = red.old_of_new[static_cast<std::size_t>(nv)]; ov != 0)
            reduced_coloring.set(nv, outer.at(ov));

    PartialColoring completed = color_subset(red.graph, reduced_coloring, red.contracted, c, 1,
        derive_seed(seed, 0x4ed), "reducer-contractions", stats);

    PartialColoring result = outer;
    result.palette = std::max(result.palette, c);
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        int s_color = completed.at(red.contracted[i]);
        for (int s : reducers[i].stable)
            result.set(s, s_color);
        int next = 1;
        for (int v : reducers[i].clique) {
            if (next == s_color)
                ++next;
            result.set(v, next++);
        }
    }
    return result;
}

bool detect_hollow(const Graph& g, const VertexSet& x, int threshold)
{
    if (threshold <= 0)
        return true;
    int greedy = greedy_complement_matching(g, x).size();
    if (greedy >= threshold)
        return true;
    if (2 * greedy < threshold) // maximal matching is a 2-approximation
        return false;
    return complement_matching_size(g, x) >= threshold;
}

PartialColoring extend_over_hollow(const Graph& g, const DenseDecomposition& dec,
    const std::vector<int>& hollow_ids, const PartialColoring& outer, int c, int k_equiv,
    std::uint64_t seed, sim::RoundStats* stats, BreachLog* breaches)
{
    std::vector<VertexSet> comps;
    for (int i : hollow_ids) {
        if (i < 0 || i >= static_cast<int>(dec.components.size()))
            throw PreconditionError("unknown component index " + std::to_string(i));
        comps.push_back(dec.components[static_cast<std::size_t>(i)]);
    }
    return extend_components(g, comps, outer, c, k_equiv, seed, stats, breaches);
}

std::string Certificate::to_json() const
{
    nlohmann::ordered_json j;
    j["vertex"] = vertex;
    j["c"] = c;
    j["vertices"] = std::vector<int>(old_of_new.begin() + 1, old_of_new.end());
    j["edges"] = nlohmann::json::array();
    for (auto [u, w] : subgraph.edges())
        j["edges"].push_back({ old_of_new[static_cast<std::size_t>(u)],
            old_of_new[static_cast<std::size_t>(w)] });
    j["proof_trace_length"] = trace_length;
    return j.dump(2);
}

CertifyReport certify_non_colorable(const Graph& g, int c, std::uint64_t budget)
{
    if (c < 1)
        throw PreconditionError("certify_non_colorable needs c >= 1");
    CertifyReport rep;
    rep.hypothesis_c_large_enough = g.delta() >= 2 && c >= g.delta() - k_delta(g.delta()) + 1;
    for (int v = 1; v <= g.n(); ++v) {
        ++rep.scanned;
        std::vector<int> ids;
        Graph sub = sim::gather_ball(g, v, 1, &ids);
        if (exact_colorable(sub, c, budget))
            continue;
        std::uint64_t trace = exact_last_trace_length();
        if (exact_colorable(sub, c, budget)) // re-verify before emitting
            throw ModelViolation("exact solver disagreed with itself on vertex "
                + std::to_string(v));
        Certificate cert;
        cert.vertex = v;
        cert.subgraph = std::move(sub);
        cert.old_of_new = std::move(ids);
        cert.c = c;
        cert.trace_length = trace;
        rep.certificate = std::move(cert);
        return rep;
    }
    return rep;
}

} // namespace dgc
