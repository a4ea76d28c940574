#include "dgc/exact.hpp"

#include <algorithm>
#include <numeric>

namespace dgc {

namespace {

    std::uint64_t g_last_trace = 0;

    // Greedy clique seeded at each vertex in degree order; good enough as a
    // lower bound and for symmetry-breaking precoloring.
    std::vector<int> greedy_clique(const Graph& g)
    {
        std::vector<int> order(static_cast<std::size_t>(g.n()));
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
        std::vector<int> best;
        int tries = std::min(g.n(), 128);
        for (int t = 0; t < tries; ++t) {
            std::vector<int> clique { order[static_cast<std::size_t>(t)] };
            for (int v : order) {
                if (v == clique.front())
                    continue;
                bool ok = true;
                for (int u : clique)
                    if (!g.adjacent(u, v)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    clique.push_back(v);
            }
            if (clique.size() > best.size())
                best = clique;
        }
        return best;
    }

    struct ColorSearch {
        const Graph& g;
        int c;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<int> color;
        std::vector<int> sat_count; // distinct neighbor colors
        std::vector<std::vector<int>> sat_mark; // sat_mark[v][col] = #neighbors with col
        bool symmetry_cap;
        int max_used = 0;

        explicit ColorSearch(const Graph& graph, int colors, std::uint64_t b, bool cap)
            : g(graph)
            , c(colors)
            , budget(b)
            , color(static_cast<std::size_t>(graph.n()) + 1, 0)
            , sat_count(static_cast<std::size_t>(graph.n()) + 1, 0)
            , sat_mark(static_cast<std::size_t>(graph.n()) + 1,
                  std::vector<int>(static_cast<std::size_t>(colors) + 1, 0))
            , symmetry_cap(cap)
        {
        }

        void assign(int v, int col)
        {
            color[static_cast<std::size_t>(v)] = col;
            for (int u : g.neighbors(v)) {
                if (++sat_mark[static_cast<std::size_t>(u)][static_cast<std::size_t>(col)] == 1)
                    ++sat_count[static_cast<std::size_t>(u)];
            }
        }

        void unassign(int v, int col)
        {
            color[static_cast<std::size_t>(v)] = 0;
            for (int u : g.neighbors(v)) {
                if (--sat_mark[static_cast<std::size_t>(u)][static_cast<std::size_t>(col)] == 0)
                    --sat_count[static_cast<std::size_t>(u)];
            }
        }

        int pick() const
        {
            int best = 0;
            for (int v = 1; v <= g.n(); ++v) {
                if (color[static_cast<std::size_t>(v)] != 0)
                    continue;
                if (best == 0)
                    best = v;
                else {
                    int sv = sat_count[static_cast<std::size_t>(v)];
                    int sb = sat_count[static_cast<std::size_t>(best)];
                    if (sv > sb || (sv == sb && g.degree(v) > g.degree(best)))
                        best = v;
                }
            }
            return best;
        }

        // A clique of uncolored vertices needs pairwise-distinct colors, so
        // the union of their availability sets must be at least as large as
        // the clique. Build one clique greedily, most-saturated first.
        bool clique_dead_end() const
        {
            std::vector<int> uncolored;
            for (int v = 1; v <= g.n(); ++v)
                if (color[static_cast<std::size_t>(v)] == 0)
                    uncolored.push_back(v);
            std::sort(uncolored.begin(), uncolored.end(), [this](int a, int b) {
                int sa = sat_count[static_cast<std::size_t>(a)];
                int sb = sat_count[static_cast<std::size_t>(b)];
                return sa != sb ? sa > sb : a < b;
            });
            std::vector<int> clique;
            std::vector<char> avail(static_cast<std::size_t>(c) + 1, 0);
            int avail_count = 0;
            for (int v : uncolored) {
                bool ok = true;
                for (int u : clique)
                    if (!g.adjacent(u, v)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                clique.push_back(v);
                for (int col = 1; col <= c; ++col)
                    if (sat_mark[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)] == 0
                        && !avail[static_cast<std::size_t>(col)]) {
                        avail[static_cast<std::size_t>(col)] = 1;
                        ++avail_count;
                    }
                if (static_cast<int>(clique.size()) > avail_count)
                    return true;
            }
            return false;
        }

        bool solve(int remaining)
        {
            if (++nodes > budget)
                throw BudgetExceeded("exact coloring budget exceeded");
            if (remaining == 0)
                return true;
            if (clique_dead_end())
                return false;
            int v = pick();
            if (sat_count[static_cast<std::size_t>(v)] >= c)
                return false;
            int limit = symmetry_cap ? std::min(c, max_used + 1) : c;
            for (int col = 1; col <= limit; ++col) {
                if (sat_mark[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)] != 0)
                    continue;
                int prev_max = max_used;
                max_used = std::max(max_used, col);
                assign(v, col);
                if (solve(remaining - 1))
                    return true;
                unassign(v, col);
                max_used = prev_max;
            }
            return false;
        }
    };

} // namespace

std::uint64_t exact_last_trace_length() { return g_last_trace; }

bool exact_colorable(const Graph& g, int c, std::uint64_t budget, std::vector<int>* coloring_out)
{
    if (c < 1)
        throw PreconditionError("exact_colorable requires c >= 1");
    g_last_trace = 0;
    if (g.n() == 0) {
        if (coloring_out)
            coloring_out->assign(1, 0);
        return true;
    }
    auto clique = greedy_clique(g);
    if (static_cast<int>(clique.size()) > c) {
        // the clique itself is the refutation; count it as the trace
        g_last_trace = clique.size();
        return false;
    }
    ColorSearch s(g, c, budget, true);
    // Pin the clique: its vertices are forced onto distinct colors anyway.
    int col = 0;
    for (int v : clique) {
        s.assign(v, ++col);
        s.max_used = col;
    }
    bool ok = s.solve(g.n() - static_cast<int>(clique.size()));
    g_last_trace = s.nodes;
    if (ok && coloring_out)
        *coloring_out = s.color;
    return ok;
}

int chromatic_number(const Graph& g, std::uint64_t budget)
{
    if (g.n() == 0)
        return 0;
    if (g.m() == 0)
        return 1;
    int lb = static_cast<int>(maximum_clique(g, budget).size());
    for (int c = lb;; ++c) {
        if (c >= g.n())
            return g.n();
        if (exact_colorable(g, c, budget))
            return c;
    }
}

namespace {

    struct MaxCliqueSearch {
        const Graph& g;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<int> best {};
        std::vector<int> current {};

        void expand(std::vector<int>& cand)
        {
            if (++nodes > budget)
                throw BudgetExceeded("maximum clique budget exceeded");
            if (current.size() > best.size())
                best = current;
            if (cand.empty())
                return;
            // Greedy coloring bound.
            std::vector<int> color(cand.size(), 0);
            int num_colors = 0;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                std::vector<bool> taken(cand.size() + 2, false);
                for (std::size_t j = 0; j < i; ++j)
                    if (g.adjacent(cand[i], cand[j]))
                        taken[static_cast<std::size_t>(color[j])] = true;
                int c = 1;
                while (taken[static_cast<std::size_t>(c)])
                    ++c;
                color[i] = c;
                num_colors = std::max(num_colors, c);
            }
            if (current.size() + static_cast<std::size_t>(num_colors) <= best.size())
                return;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (current.size() + cand.size() - i <= best.size())
                    return;
                int v = cand[i];
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.adjacent(v, cand[j]))
                        next.push_back(cand[j]);
                current.push_back(v);
                expand(next);
                current.pop_back();
            }
        }
    };

} // namespace

std::vector<int> maximum_clique(const Graph& g, std::uint64_t budget)
{
    MaxCliqueSearch s { .g = g, .budget = budget };
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 1);
    std::sort(all.begin(), all.end(),
        [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    s.best = greedy_clique(g);
    s.expand(all);
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

// ---- Edmonds blossom (O(V^3)), adjacency-matrix free -------------------------

namespace {

    struct Blossom {
        int n;
        std::vector<std::vector<int>> adj; // 0-based
        std::vector<int> match, parent, base;
        std::vector<bool> used, blossom;

        explicit Blossom(int nn)
            : n(nn)
            , adj(static_cast<std::size_t>(nn))
            , match(static_cast<std::size_t>(nn), -1)
            , parent(static_cast<std::size_t>(nn))
            , base(static_cast<std::size_t>(nn))
            , used(static_cast<std::size_t>(nn))
            , blossom(static_cast<std::size_t>(nn))
        {
        }

        int lca(int a, int b)
        {
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            for (;;) {
                a = base[static_cast<std::size_t>(a)];
                seen[static_cast<std::size_t>(a)] = true;
                if (match[static_cast<std::size_t>(a)] == -1)
                    break;
                a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
            }
            for (;;) {
                b = base[static_cast<std::size_t>(b)];
                if (seen[static_cast<std::size_t>(b)])
                    return b;
                b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
            }
        }

        void mark_path(int v, int b, int child)
        {
            while (base[static_cast<std::size_t>(v)] != b) {
                int mv = match[static_cast<std::size_t>(v)];
                blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
                blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = true;
                parent[static_cast<std::size_t>(v)] = child;
                child = mv;
                v = parent[static_cast<std::size_t>(mv)];
            }
        }

        int find_path(int root)
        {
            std::fill(used.begin(), used.end(), false);
            std::fill(parent.begin(), parent.end(), -1);
            std::iota(base.begin(), base.end(), 0);
            used[static_cast<std::size_t>(root)] = true;
            std::vector<int> queue { root };
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (int to : adj[static_cast<std::size_t>(v)]) {
                    if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)]
                        || match[static_cast<std::size_t>(v)] == to)
                        continue;
                    if (to == root
                        || (match[static_cast<std::size_t>(to)] != -1
                            && parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                        int curbase = lca(v, to);
                        std::fill(blossom.begin(), blossom.end(), false);
                        mark_path(v, curbase, to);
                        mark_path(to, curbase, v);
                        for (int i = 0; i < n; ++i)
                            if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                                base[static_cast<std::size_t>(i)] = curbase;
                                if (!used[static_cast<std::size_t>(i)]) {
                                    used[static_cast<std::size_t>(i)] = true;
                                    queue.push_back(i);
                                }
                            }
                    } else if (parent[static_cast<std::size_t>(to)] == -1) {
                        parent[static_cast<std::size_t>(to)] = v;
                        if (match[static_cast<std::size_t>(to)] == -1)
                            return to;
                        used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
                        queue.push_back(match[static_cast<std::size_t>(to)]);
                    }
                }
            }
            return -1;
        }

        int solve()
        {
            int result = 0;
            for (int v = 0; v < n; ++v) {
                if (match[static_cast<std::size_t>(v)] != -1)
                    continue;
                int u = find_path(v);
                if (u == -1)
                    continue;
                ++result;
                while (u != -1) {
                    int pv = parent[static_cast<std::size_t>(u)];
                    int ppv = match[static_cast<std::size_t>(pv)];
                    match[static_cast<std::size_t>(u)] = pv;
                    match[static_cast<std::size_t>(pv)] = u;
                    u = ppv;
                }
            }
            return result;
        }
    };

} // namespace

int maximum_matching_size(const Graph& g)
{
    Blossom b(g.n());
    for (auto [u, v] : g.edges()) {
        b.adj[static_cast<std::size_t>(u - 1)].push_back(v - 1);
        b.adj[static_cast<std::size_t>(v - 1)].push_back(u - 1);
    }
    return b.solve();
}

int complement_matching_size(const Graph& g, const VertexSet& s)
{
    std::vector<int> verts(s.begin(), s.end());
    int k = static_cast<int>(verts.size());
    Blossom b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])) {
                b.adj[static_cast<std::size_t>(i)].push_back(j);
                b.adj[static_cast<std::size_t>(j)].push_back(i);
            }
    return b.solve();
}

// ---- isomorphism -------------------------------------------------------------

namespace {

    struct IsoSearch {
        const Graph& a;
        const Graph& b;
        std::vector<int> map_ab; // a-vertex -> b-vertex, 0 = unmapped
        std::vector<bool> used_b;
        std::vector<int> order;

        bool extend(std::size_t idx)
        {
            if (idx == order.size())
                return true;
            int v = order[idx];
            for (int w = 1; w <= b.n(); ++w) {
                if (used_b[static_cast<std::size_t>(w)] || b.degree(w) != a.degree(v))
                    continue;
                bool ok = true;
                for (int u : a.neighbors(v)) {
                    int mu = map_ab[static_cast<std::size_t>(u)];
                    if (mu != 0 && !b.adjacent(w, mu)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    // Non-edges must map to non-edges as well.
                    for (std::size_t j = 0; j < idx && ok; ++j) {
                        int u = order[j];
                        if (!a.adjacent(v, u) && b.adjacent(w, map_ab[static_cast<std::size_t>(u)]))
                            ok = false;
                    }
                }
                if (!ok)
                    continue;
                map_ab[static_cast<std::size_t>(v)] = w;
                used_b[static_cast<std::size_t>(w)] = true;
                if (extend(idx + 1))
                    return true;
                map_ab[static_cast<std::size_t>(v)] = 0;
                used_b[static_cast<std::size_t>(w)] = false;
            }
            return false;
        }
    };

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.m() != b.m())
        return false;
    std::vector<int> da, db;
    for (int v = 1; v <= a.n(); ++v)
        da.push_back(a.degree(v));
    for (int v = 1; v <= b.n(); ++v)
        db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    IsoSearch s { a, b, std::vector<int>(static_cast<std::size_t>(a.n()) + 1, 0),
        std::vector<bool>(static_cast<std::size_t>(b.n()) + 1, false), {} };
    // BFS-ish order from the highest-degree vertex keeps the partial map connected.
    std::vector<bool> seen(static_cast<std::size_t>(a.n()) + 1, false);
    std::vector<int> rest(static_cast<std::size_t>(a.n()));
    std::iota(rest.begin(), rest.end(), 1);
    std::sort(rest.begin(), rest.end(),
        [&](int x, int y) { return a.degree(x) != a.degree(y) ? a.degree(x) > a.degree(y) : x < y; });
    for (int start : rest) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> queue { start };
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            s.order.push_back(v);
            for (int u : a.neighbors(v))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
        }
    }
    return s.extend(0);
}

} // namespace dgc
