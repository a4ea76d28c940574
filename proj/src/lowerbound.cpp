#include "dgc/lowerbound.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "dgc/error.hpp"
#include "dgc/exact.hpp"
#include "dgc/sim.hpp"

namespace dgc {

std::string LayeredGraph::layers_json() const
{
    nlohmann::ordered_json j;
    j["delta"] = delta;
    j["c"] = c;
    j["layers"] = layers;
    j["layer_of"] = std::vector<int>(layer_of.begin() + 1, layer_of.end());
    j["role_of"] = nlohmann::json::array();
    for (std::size_t v = 1; v < role_of.size(); ++v)
        j["role_of"].push_back(role_of[v] == stable ? "stable" : "clique");
    return j.dump(2);
}

std::pair<bool, std::string> valid_parameters(int delta, int c)
{
    if (delta < 3 || c < 3)
        return { false, "needs delta >= 3 and c >= 3" };
    if (c > delta)
        return { false, "needs c <= delta" };
    int k = k_delta(delta);
    std::int64_t split = static_cast<std::int64_t>(delta - c + 2) * (delta - c + 1);
    if (split < delta)
        return { false,
            "(delta-c+2)(delta-c+1) = " + std::to_string(split) + " < delta = "
                + std::to_string(delta) + " (c > delta - k_delta = " + std::to_string(delta - k)
                + " or the boundary case fails)" };
    return { true, "degree split feasible" };
}

namespace {

    struct ChainBuilder {
        int delta, c;
        std::vector<std::set<int>> adj { {} }; // creation ids, index 0 unused
        std::vector<char> alive { 0 };
        std::vector<int> layer { 0 };
        std::vector<int> role { 0 };

        int add_vertex(int lay, int r)
        {
            adj.emplace_back();
            alive.push_back(1);
            layer.push_back(lay);
            role.push_back(r);
            return static_cast<int>(adj.size()) - 1;
        }
        void add_edge(int u, int v)
        {
            adj[static_cast<std::size_t>(u)].insert(v);
            adj[static_cast<std::size_t>(v)].insert(u);
        }
    };

} // namespace

LayeredGraph build_chain(int delta, int c, int i)
{
    auto [ok, reason] = valid_parameters(delta, c);
    if (!ok)
        throw PreconditionError("invalid lower-bound parameters: " + reason);
    if (i < 1)
        throw PreconditionError("chain length must be >= 1");

    ChainBuilder b { delta, c, {}, {}, {}, {} };
    b.adj.emplace_back();
    b.alive.push_back(0);
    b.layer.push_back(0);
    b.role.push_back(0);

    LayeredGraph out;
    out.delta = delta;
    out.c = c;
    out.layers = i;

    std::vector<int> c_prev;
    for (int v = 0; v < c + 1; ++v)
        c_prev.push_back(b.add_vertex(1, LayeredGraph::clique));
    for (std::size_t a = 0; a < c_prev.size(); ++a)
        for (std::size_t bb = a + 1; bb < c_prev.size(); ++bb)
            b.add_edge(c_prev[a], c_prev[bb]);

    const int s_size = delta - c + 2;
    for (int layer = 2; layer <= i; ++layer) {
        int v = *std::min_element(c_prev.begin(), c_prev.end());
        std::vector<int> nv(b.adj[static_cast<std::size_t>(v)].begin(),
            b.adj[static_cast<std::size_t>(v)].end());
        out.removed_degree.push_back(static_cast<int>(nv.size()));
        b.alive[static_cast<std::size_t>(v)] = 0;
        for (int u : nv)
            b.adj[static_cast<std::size_t>(u)].erase(v);
        b.adj[static_cast<std::size_t>(v)].clear();
        c_prev.erase(std::find(c_prev.begin(), c_prev.end(), v));

        std::vector<int> s_layer, c_layer;
        for (int t = 0; t < s_size; ++t)
            s_layer.push_back(b.add_vertex(layer, LayeredGraph::stable));
        for (int t = 0; t < c - 1; ++t)
            c_layer.push_back(b.add_vertex(layer, LayeredGraph::clique));
        for (int s : s_layer)
            for (int q : c_layer)
                b.add_edge(s, q);
        for (std::size_t a = 0; a < c_layer.size(); ++a)
            for (std::size_t bb = a + 1; bb < c_layer.size(); ++bb)
                b.add_edge(c_layer[a], c_layer[bb]);
        // The removed vertex's edges go to the stable set round-robin, so
        // every former neighbor's degree is preserved and each stable vertex
        // inherits at most delta-c+1 edges.
        for (std::size_t t = 0; t < nv.size(); ++t)
            b.add_edge(nv[t], s_layer[t % s_layer.size()]);
        c_prev = c_layer;
    }

    // Relabel alive vertices to 1..n in creation order.
    std::vector<int> final_of(b.adj.size(), 0);
    int n = 0;
    for (std::size_t v = 1; v < b.adj.size(); ++v)
        if (b.alive[v])
            final_of[v] = ++n;
    std::vector<std::pair<int, int>> edges;
    out.layer_of.assign(static_cast<std::size_t>(n) + 1, 0);
    out.role_of.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t v = 1; v < b.adj.size(); ++v) {
        if (!b.alive[v])
            continue;
        out.layer_of[static_cast<std::size_t>(final_of[v])] = b.layer[v];
        out.role_of[static_cast<std::size_t>(final_of[v])] = b.role[v];
        for (int u : b.adj[v])
            if (static_cast<std::size_t>(u) > v)
                edges.push_back({ final_of[v], final_of[static_cast<std::size_t>(u)] });
    }
    out.graph = Graph::from_edges(n, edges);
    if (out.graph.delta() > delta)
        throw ModelViolation("chain construction exceeded the degree bound (internal error)");
    return out;
}

Graph build_hard_instance(int delta, int c, int i)
{
    if (i < 4 || i % 2 != 0)
        throw PreconditionError("hard instance needs an even chain length >= 4");
    LayeredGraph chain = build_chain(delta, c, i);
    const int lo = i / 2, hi = i / 2 + 1;
    std::pair<int, int> victim { 0, 0 };
    for (auto [u, w] : chain.graph.edges()) {
        int lu = chain.layer_of[static_cast<std::size_t>(u)];
        int lw = chain.layer_of[static_cast<std::size_t>(w)];
        if ((lu == lo && lw == hi) || (lu == hi && lw == lo)) {
            victim = { u, w };
            break; // edges() is ordered, first hit is lexicographically least
        }
    }
    if (victim.first == 0)
        throw PreconditionError("no edge crosses layers " + std::to_string(lo) + "/"
            + std::to_string(hi));
    std::vector<std::pair<int, int>> edges;
    for (auto e : chain.graph.edges())
        if (e != victim)
            edges.push_back(e);
    return Graph::from_edges(chain.graph.n(), edges);
}

ReducerSpec top_reducer(const LayeredGraph& chain)
{
    if (chain.layers < 2)
        throw PreconditionError("the single-layer chain K_{c+1} has no reducer");
    ReducerSpec r;
    for (int v = 1; v <= chain.graph.n(); ++v)
        if (chain.layer_of[static_cast<std::size_t>(v)] == chain.layers) {
            if (chain.role_of[static_cast<std::size_t>(v)] == LayeredGraph::clique)
                r.clique.add(v);
            else
                r.stable.add(v);
        }
    return r;
}

std::string IndistinguishabilityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["matched"] = matched;
    j["total"] = total;
    j["unmatched"] = nlohmann::json::array();
    for (const BallMatch& m : matches)
        if (m.matched_to == 0)
            j["unmatched"].push_back(m.vertex);
    return j.dump(2);
}

IndistinguishabilityReport indistinguishability_report(
    const Graph& g_hard, const LayeredGraph& g_chain, int radius)
{
    if (radius < 0)
        throw PreconditionError("radius must be >= 0");
    IndistinguishabilityReport rep;
    std::vector<Graph> hard_balls(static_cast<std::size_t>(g_hard.n()) + 1);
    for (int w = 1; w <= g_hard.n(); ++w)
        hard_balls[static_cast<std::size_t>(w)] = sim::gather_ball(g_hard, w, radius);
    for (int v = 1; v <= g_chain.graph.n(); ++v) {
        Graph ball = sim::gather_ball(g_chain.graph, v, radius);
        BallMatch m { v, 0 };
        // the hard instance lives on the same vertex ids, so v itself is the
        // natural first candidate
        std::vector<int> candidates;
        if (v <= g_hard.n())
            candidates.push_back(v);
        for (int w = 1; w <= g_hard.n(); ++w)
            if (w != v)
                candidates.push_back(w);
        for (int w : candidates) {
            const Graph& hb = hard_balls[static_cast<std::size_t>(w)];
            if (hb.n() != ball.n() || hb.m() != ball.m())
                continue;
            if (are_isomorphic(ball, hb)) {
                m.matched_to = w;
                break;
            }
        }
        if (m.matched_to != 0)
            ++rep.matched;
        ++rep.total;
        rep.matches.push_back(m);
    }
    return rep;
}

} // namespace dgc
