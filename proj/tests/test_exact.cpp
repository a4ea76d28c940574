#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgc/exact.hpp"
#include "dgc/graph.hpp"
#include "dgc/rng.hpp"
#include "helpers.hpp"

using namespace dgc;
using namespace testutil;

TEST_CASE("chromatic numbers of named graphs")
{
    CHECK(chromatic_number(complete(5)) == 5);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(complete_bipartite(4, 6)) == 2);
    CHECK(chromatic_number(path(1)) == 1);
}

TEST_CASE("exact_colorable returns a usable witness coloring")
{
    Graph g = petersen();
    std::vector<int> col;
    REQUIRE(exact_colorable(g, 3, 50'000'000, &col));
    PartialColoring pc = PartialColoring::empty(g.n(), 3);
    for (int v = 1; v <= g.n(); ++v) {
        REQUIRE(col[static_cast<std::size_t>(v)] >= 1);
        REQUIRE(col[static_cast<std::size_t>(v)] <= 3);
        pc.set(v, col[static_cast<std::size_t>(v)]);
    }
    CHECK(is_proper(g, pc));
    CHECK(!exact_colorable(g, 2));
}

TEST_CASE("exact_colorable agrees with plain backtracking on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Rng rng(derive_seed(11, seed));
        int n = 1 + static_cast<int>(rng.below(8));
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.coin())
                    e.push_back({ u, v });
        Graph g = Graph::from_edges(n, e);
        for (int c = 1; c <= 4; ++c)
            CHECK(exact_colorable(g, c) == brute_colorable(g, c));
    }
}

TEST_CASE("exact_last_trace_length is positive after a refutation")
{
    CHECK(!exact_colorable(complete(5), 4));
    CHECK(exact_last_trace_length() > 0);
}

TEST_CASE("exact_colorable throws when the budget runs out")
{
    // A tight refutation instance with a 1-node budget cannot finish.
    CHECK_THROWS_AS(exact_colorable(complete_minus_matching(14), 11, 1), BudgetExceeded);
}

TEST_CASE("maximum_clique matches the brute-force size")
{
    CHECK(maximum_clique(complete(6)).size() == 6);
    CHECK(maximum_clique(petersen()).size() == 2);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(derive_seed(22, seed));
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= 10; ++u)
            for (int v = u + 1; v <= 10; ++v)
                if (rng.chance(3, 5))
                    e.push_back({ u, v });
        Graph g = Graph::from_edges(10, e);
        std::vector<int> clique = maximum_clique(g);
        CHECK(is_clique(g, clique));
        CHECK(static_cast<int>(clique.size()) == brute_max_clique_size(g));
    }
}

TEST_CASE("maximum_matching_size on paths, cycles and complete graphs")
{
    CHECK(maximum_matching_size(path(2)) == 1);
    CHECK(maximum_matching_size(path(7)) == 3);
    CHECK(maximum_matching_size(cycle(8)) == 4);
    CHECK(maximum_matching_size(cycle(9)) == 4);
    CHECK(maximum_matching_size(complete(6)) == 3);
    CHECK(maximum_matching_size(complete(7)) == 3);
    CHECK(maximum_matching_size(star(5)) == 1);
    // Petersen has a perfect matching.
    CHECK(maximum_matching_size(petersen()) == 5);
}

TEST_CASE("maximum_matching_size handles blossoms")
{
    // Two triangles joined by a path: maximum matching is 3, and any
    // augmenting-path search must shrink an odd cycle to see it.
    Graph g = Graph::from_edges(7,
        { { 1, 2 }, { 2, 3 }, { 3, 1 }, { 3, 4 }, { 4, 5 }, { 5, 6 }, { 6, 7 }, { 7, 5 } });
    CHECK(maximum_matching_size(g) == 3);
}

TEST_CASE("complement_matching_size on structured subsets")
{
    Graph k6 = complete(6);
    CHECK(complement_matching_size(k6, VertexSet::range(1, 6)) == 0);

    Graph empty6 = Graph::from_edges(6, {});
    CHECK(complement_matching_size(empty6, VertexSet::range(1, 6)) == 3);

    // K_m minus the cycle C_m: the complement of the subset is exactly C_m,
    // whose maximum matching is floor(m/2).
    for (int m : { 5, 6, 9 }) {
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= m; ++u)
            for (int v = u + 1; v <= m; ++v) {
                bool on_cycle = (v == u + 1) || (u == 1 && v == m);
                if (!on_cycle)
                    e.push_back({ u, v });
            }
        Graph g = Graph::from_edges(m, e);
        CHECK(complement_matching_size(g, VertexSet::range(1, m)) == m / 2);
    }
}

TEST_CASE("are_isomorphic on positive and negative pairs")
{
    CHECK(are_isomorphic(cycle(5), Graph::from_edges(5, { { 3, 1 }, { 1, 4 }, { 4, 2 }, { 2, 5 }, { 5, 3 } })));
    CHECK(!are_isomorphic(cycle(6), Graph::from_edges(6, { { 1, 2 }, { 2, 3 }, { 3, 1 }, { 4, 5 }, { 5, 6 }, { 6, 4 } })));
    CHECK(!are_isomorphic(path(4), star(3)));
    CHECK(are_isomorphic(petersen(), petersen()));
    CHECK(!are_isomorphic(path(3), path(4)));
}
