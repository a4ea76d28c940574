// Shared fixtures and brute-force oracles for the test suites. Everything in
// here is deliberately naive: the oracles must be independent of the library
// code they check.

#ifndef DGC_TESTS_HELPERS_HPP
#define DGC_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dgc/graph.hpp"

namespace testutil {

inline dgc::Graph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.push_back({ v, v + 1 });
    return dgc::Graph::from_edges(n, e);
}

inline dgc::Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.push_back({ v, v + 1 });
    e.push_back({ n, 1 });
    return dgc::Graph::from_edges(n, e);
}

inline dgc::Graph complete(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            e.push_back({ u, v });
    return dgc::Graph::from_edges(n, e);
}

// Center is vertex 1, leaves 2..n+1.
inline dgc::Graph star(int leaves)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 2; v <= leaves + 1; ++v)
        e.push_back({ 1, v });
    return dgc::Graph::from_edges(leaves + 1, e);
}

inline dgc::Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            e.push_back({ u, v });
    return dgc::Graph::from_edges(a + b, e);
}

// Outer 5-cycle 1..5, inner 5-cycle 6..10 with step 2, spokes v -- v+5.
inline dgc::Graph petersen()
{
    std::vector<std::pair<int, int>> e = { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 1 },
        { 6, 8 }, { 8, 10 }, { 10, 7 }, { 7, 9 }, { 9, 6 }, { 1, 6 }, { 2, 7 }, { 3, 8 },
        { 4, 9 }, { 5, 10 } };
    return dgc::Graph::from_edges(10, e);
}

// Complete graph minus a perfect (or near-perfect) matching on pairs
// (1,2), (3,4), ...; with n odd the last vertex keeps full degree.
inline dgc::Graph complete_minus_matching(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!(v == u + 1 && u % 2 == 1))
                e.push_back({ u, v });
    return dgc::Graph::from_edges(n, e);
}

// Plain backtracking c-colorability in ascending id order. No heuristics, so
// it shares nothing with the production solver.
inline bool brute_colorable_rec(const dgc::Graph& g, int c, std::vector<int>& col, int v)
{
    if (v > g.n())
        return true;
    for (int color = 1; color <= c; ++color) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (col[static_cast<std::size_t>(u)] == color) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        col[static_cast<std::size_t>(v)] = color;
        if (brute_colorable_rec(g, c, col, v + 1))
            return true;
        col[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

inline bool brute_colorable(const dgc::Graph& g, int c)
{
    std::vector<int> col(static_cast<std::size_t>(g.n()) + 1, 0);
    return brute_colorable_rec(g, c, col, 1);
}

inline int brute_chromatic_number(const dgc::Graph& g)
{
    for (int c = 1;; ++c)
        if (brute_colorable(g, c))
            return c;
}

inline int brute_max_clique_size(const dgc::Graph& g)
{
    int best = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        best = std::max(best, static_cast<int>(cur.size()));
        for (int v = from; v <= g.n(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return best;
}

inline std::int64_t brute_nonadj_pairs(const dgc::Graph& g, int v)
{
    const auto& nb = g.neighbors(v);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j]))
                ++count;
    return count;
}

inline int brute_k_delta(int delta)
{
    int k = 0;
    while (static_cast<std::int64_t>(k + 2) * (k + 3) <= delta)
        ++k;
    return k;
}

// Maximal independent set check for g[active].
inline bool is_mis(const dgc::Graph& g, const dgc::VertexSet& active, const dgc::VertexSet& mis)
{
    for (int u : mis) {
        if (!active.contains(u))
            return false;
        for (int v : mis)
            if (u < v && g.adjacent(u, v))
                return false;
    }
    for (int u : active) {
        if (mis.contains(u))
            continue;
        bool dominated = false;
        for (int w : g.neighbors(u))
            if (mis.contains(w)) {
                dominated = true;
                break;
            }
        if (!dominated)
            return false;
    }
    return true;
}

} // namespace testutil

#endif
