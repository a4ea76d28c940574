#include "dgc/gen.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "dgc/error.hpp"
#include "dgc/rng.hpp"

namespace dgc {

namespace {

    struct Builder {
        int n;
        std::vector<std::set<int>> adj;
        explicit Builder(int n_)
            : n(n_)
            , adj(static_cast<std::size_t>(n_) + 1)
        {
        }
        int deg(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
        bool has(int u, int v) const { return adj[static_cast<std::size_t>(u)].count(v) > 0; }
        bool add(int u, int v, int cap)
        {
            if (u == v || has(u, v) || deg(u) >= cap || deg(v) >= cap)
                return false;
            adj[static_cast<std::size_t>(u)].insert(v);
            adj[static_cast<std::size_t>(v)].insert(u);
            return true;
        }
        Graph build() const
        {
            std::vector<std::pair<int, int>> edges;
            for (int u = 1; u <= n; ++u)
                for (int v : adj[static_cast<std::size_t>(u)])
                    if (u < v)
                        edges.push_back({ u, v });
            return Graph::from_edges(n, edges);
        }
    };

    // Fill the first `plant_cap` vertices up to degree `delta`: random partners
    // first, then a deterministic sweep for the stragglers.
    void plant_max_degree(Builder& b, int delta, int plant_cap, Rng& rng, bool bipartite)
    {
        for (int v = 1; v <= std::min(plant_cap, b.n); ++v) {
            int lo = bipartite ? b.n / 2 + 1 : 1;
            for (int tries = 0; tries < 50 * delta && b.deg(v) < delta; ++tries)
                b.add(v, static_cast<int>(rng.uniform_int(lo, b.n)), delta);
            for (int u = lo; u <= b.n && b.deg(v) < delta; ++u)
                b.add(v, u, delta);
        }
    }

} // namespace

Graph gen_random_capped(int n, int delta, std::uint64_t seed, int plant_cap, double fill)
{
    if (n < 1 || delta < 1)
        throw PreconditionError("generator needs n >= 1 and delta >= 1");
    Builder b(n);
    Rng rng(derive_seed(seed, 0x9e4, static_cast<std::uint64_t>(n)));
    auto target = static_cast<std::int64_t>(fill * n * delta / 2.0);
    std::int64_t added = 0;
    for (std::int64_t t = 0; t < 30 * target && added < target; ++t)
        if (b.add(static_cast<int>(rng.uniform_int(1, n)), static_cast<int>(rng.uniform_int(1, n)),
                delta))
            ++added;
    plant_max_degree(b, delta, plant_cap, rng, false);
    return b.build();
}

Graph gen_random_bipartite(int n, int delta, std::uint64_t seed, int plant_cap, double fill)
{
    if (n < 2 || delta < 1)
        throw PreconditionError("generator needs n >= 2 and delta >= 1");
    Builder b(n);
    Rng rng(derive_seed(seed, 0xb1b, static_cast<std::uint64_t>(n)));
    const int half = n / 2;
    auto target = static_cast<std::int64_t>(fill * n * delta / 2.0);
    std::int64_t added = 0;
    for (std::int64_t t = 0; t < 30 * target && added < target; ++t)
        if (b.add(static_cast<int>(rng.uniform_int(1, half)),
                static_cast<int>(rng.uniform_int(half + 1, n)), delta))
            ++added;
    plant_max_degree(b, delta, plant_cap, rng, true);
    return b.build();
}

Graph gen_clique_union(int delta, int count, bool minus_perfect_matching)
{
    if (delta < 1 || count < 1)
        throw PreconditionError("clique union needs delta >= 1 and count >= 1");
    const int sz = delta + 1;
    std::vector<std::pair<int, int>> edges;
    for (int comp = 0; comp < count; ++comp) {
        const int off = comp * sz;
        std::set<std::pair<int, int>> skip;
        if (minus_perfect_matching) {
            // pair up vertices 2,3 / 4,5 / ... leaving vertex 1 (and, for an
            // odd remainder, the last vertex) at full degree
            for (int t = 2; t + 1 <= sz; t += 2)
                skip.insert({ off + t, off + t + 1 });
        }
        for (int a = 1; a <= sz; ++a)
            for (int b2 = a + 1; b2 <= sz; ++b2)
                if (!skip.count({ off + a, off + b2 }))
                    edges.push_back({ off + a, off + b2 });
    }
    return Graph::from_edges(count * sz, edges);
}

} // namespace dgc
