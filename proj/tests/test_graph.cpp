#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dgc/exact.hpp"
#include "dgc/graph.hpp"
#include "dgc/rng.hpp"
#include "helpers.hpp"

using namespace dgc;
using namespace testutil;

TEST_CASE("load_graph parses paths and complete graphs")
{
    std::istringstream p3("p 3 2\n1 2\n2 3\n");
    Graph g = load_graph(p3);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.delta() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK(!g.adjacent(1, 3));

    std::istringstream k4("# complete graph\np 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    Graph k = load_graph(k4);
    CHECK(k.n() == 4);
    CHECK(k.delta() == 3);
}

TEST_CASE("load_graph rejects self-loops with the line number")
{
    std::istringstream bad("p 5 1\n5 5\n");
    CHECK_THROWS_AS(load_graph(bad), ParseError);
    std::istringstream bad2("p 5 1\n5 5\n");
    try {
        load_graph(bad2);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("save_graph then load_graph is the identity")
{
    Graph g = petersen();
    std::ostringstream out;
    save_graph(g, out);
    std::istringstream in(out.str());
    Graph h = load_graph(in);
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("JSON graph round trip")
{
    Graph g = cycle(7);
    Graph h = graph_from_json(graph_to_json(g));
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("duplicate edges collapse, adjacency is symmetric")
{
    Graph g = Graph::from_edges(3, { { 1, 2 }, { 2, 1 }, { 1, 2 }, { 2, 3 } });
    CHECK(g.m() == 2);
    CHECK(g.adjacent(2, 1));
    CHECK(g.degree(2) == 2);
}

TEST_CASE("k_delta on the worked values")
{
    CHECK(k_delta(6) == 1); // 2*3 = 6
    CHECK(k_delta(12) == 2); // 3*4 = 12, 4*5 = 20 > 12
    CHECK(k_delta(100) == 8); // 9*10 = 90, 10*11 = 110 > 100
}

TEST_CASE("k_delta matches brute force and the root bounds on a sample")
{
    for (int delta = 2; delta <= 5000; ++delta) {
        int k = k_delta(delta);
        CHECK(k == brute_k_delta(delta));
        double root = std::sqrt(static_cast<double>(delta));
        CHECK(root - 3 < k);
        CHECK(k < root - 1);
    }
}

TEST_CASE("non_adjacent_pairs_in_neighborhood on small fixtures")
{
    CHECK(non_adjacent_pairs_in_neighborhood(star(3), 1) == 3);
    Graph k4 = complete(4);
    for (int v = 1; v <= 4; ++v)
        CHECK(non_adjacent_pairs_in_neighborhood(k4, v) == 0);
    Graph c5 = cycle(5);
    for (int v = 1; v <= 5; ++v)
        CHECK(non_adjacent_pairs_in_neighborhood(c5, v) == 1);
}

TEST_CASE("non_adjacent_pairs_in_neighborhood matches the quadratic count")
{
    Graph g = petersen();
    for (int v = 1; v <= g.n(); ++v)
        CHECK(non_adjacent_pairs_in_neighborhood(g, v) == brute_nonadj_pairs(g, v));
}

TEST_CASE("non_adjacent_pairs_in_neighborhood honors the restriction set")
{
    Graph s = star(4); // leaves 2..5
    VertexSet two(std::vector<int> { 2, 3 });
    CHECK(non_adjacent_pairs_in_neighborhood(s, 1, &two) == 1);
    VertexSet none(std::vector<int> { 2 });
    CHECK(non_adjacent_pairs_in_neighborhood(s, 1, &none) == 0);
}

TEST_CASE("greedy_complement_matching on a clique is empty")
{
    Graph g = complete(6);
    CHECK(greedy_complement_matching(g, VertexSet::range(1, 6)).size() == 0);
}

TEST_CASE("greedy_complement_matching pairs up an independent set")
{
    Graph g = Graph::from_edges(4, { { 1, 2 } });
    // only one edge: the complement of the whole vertex set is nearly complete
    Matching m = greedy_complement_matching(g, VertexSet(std::vector<int> { 1, 2, 3, 4 }));
    CHECK(m.size() == 2);
    for (auto [u, v] : m.pairs)
        CHECK(!g.adjacent(u, v));
}

TEST_CASE("greedy_complement_matching on C5 leaves a clique uncovered")
{
    Graph c5 = cycle(5);
    Matching m = greedy_complement_matching(c5, VertexSet::range(1, 5));
    CHECK(m.size() == 2);
    std::vector<int> covered;
    for (auto [u, v] : m.pairs) {
        CHECK(!c5.adjacent(u, v));
        covered.push_back(u);
        covered.push_back(v);
    }
    std::vector<int> uncovered;
    for (int v = 1; v <= 5; ++v)
        if (std::find(covered.begin(), covered.end(), v) == covered.end())
            uncovered.push_back(v);
    CHECK(uncovered.size() == 1);
    CHECK(is_clique(c5, uncovered));
}

TEST_CASE("uncovered vertices of a maximal complement matching form a clique")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        // pseudo-random graph on 12 vertices
        std::vector<std::pair<int, int>> e;
        Rng rng(seed);
        for (int u = 1; u <= 12; ++u)
            for (int v = u + 1; v <= 12; ++v)
                if (rng.coin())
                    e.push_back({ u, v });
        Graph g = Graph::from_edges(12, e);
        VertexSet s = VertexSet::range(1, 12);
        Matching m = greedy_complement_matching(g, s);
        std::vector<int> uncovered(s.begin(), s.end());
        for (auto [u, v] : m.pairs) {
            std::erase(uncovered, u);
            std::erase(uncovered, v);
        }
        CHECK(is_clique(g, uncovered));
    }
}

TEST_CASE("find_clique_above finds K5 and rejects triangle-free graphs")
{
    auto hit = find_clique_above(complete(5), 4);
    REQUIRE(hit.has_value());
    CHECK(hit->second.size() == 5);
    CHECK(is_clique(complete(5), hit->second.ids()));

    CHECK(!find_clique_above(cycle(6), 2).has_value());
    CHECK(!find_clique_above(petersen(), 2).has_value());
}

TEST_CASE("find_clique_above agrees with the exact clique oracle on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::vector<std::pair<int, int>> e;
        Rng rng(derive_seed(77, seed));
        for (int u = 1; u <= 11; ++u)
            for (int v = u + 1; v <= 11; ++v)
                if (rng.chance(2, 3))
                    e.push_back({ u, v });
        Graph g = Graph::from_edges(11, e);
        int omega = brute_max_clique_size(g);
        for (int t = 1; t <= omega + 1; ++t) {
            auto hit = find_clique_above(g, t);
            if (t < omega) {
                REQUIRE(hit.has_value());
                CHECK(hit->second.size() > t);
                CHECK(is_clique(g, hit->second.ids()));
                CHECK(hit->second.contains(hit->first));
            } else {
                CHECK(!hit.has_value());
            }
        }
    }
}

TEST_CASE("find_clique_above signals budget exhaustion")
{
    CHECK_THROWS_AS(find_clique_above(complete(30), 5, 3), BudgetExceeded);
}

TEST_CASE("is_proper on hand colorings")
{
    Graph p3 = path(3);
    PartialColoring c = PartialColoring::empty(3, 2);
    c.set(1, 1);
    c.set(2, 2);
    c.set(3, 1);
    CHECK(is_proper(p3, c));

    Graph k2 = complete(2);
    PartialColoring bad = PartialColoring::empty(2, 1);
    bad.set(1, 1);
    bad.set(2, 1);
    CHECK(!is_proper(k2, bad));
    auto conflict = find_conflict_edge(k2, bad);
    REQUIRE(conflict.has_value());
    CHECK(conflict->first == 1);
    CHECK(conflict->second == 2);

    CHECK(is_proper(petersen(), PartialColoring::empty(10, 3))); // vacuous
}

TEST_CASE("induced subgraph keeps the id mapping")
{
    Graph g = cycle(6);
    std::vector<int> old_of_new;
    Graph sub = g.induced({ 2, 3, 5 }, &old_of_new);
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 1); // only 2-3 survives
    CHECK(old_of_new[1] == 2);
    CHECK(old_of_new[2] == 3);
    CHECK(old_of_new[3] == 5);
    CHECK(sub.adjacent(1, 2));
}

TEST_CASE("VertexSet keeps ascending order and set semantics")
{
    VertexSet s(std::vector<int> { 5, 1, 3, 3 });
    CHECK(s.size() == 3);
    CHECK(s.ids() == std::vector<int> { 1, 3, 5 });
    s.add(2);
    s.add(2);
    s.remove(3);
    CHECK(s.ids() == std::vector<int> { 1, 2, 5 });
    CHECK(s.contains(5));
    CHECK(!s.contains(3));
    CHECK(VertexSet::range(2, 4).ids() == std::vector<int> { 2, 3, 4 });
}

TEST_CASE("PartialColoring bookkeeping")
{
    PartialColoring c = PartialColoring::empty(4, 7);
    CHECK(c.colored_count() == 0);
    CHECK(!c.total(4));
    c.set(2, 7);
    c.set(4, 3);
    CHECK(c.colored_count() == 2);
    CHECK(c.max_color() == 7);
    c.set(1, 1);
    c.set(3, 2);
    CHECK(c.total(4));
}
