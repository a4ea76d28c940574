#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "dgc/exact.hpp"
#include "dgc/lowerbound.hpp"
#include "helpers.hpp"

using namespace dgc;
using namespace testutil;

TEST_CASE("valid_parameters truth table")
{
    CHECK(valid_parameters(12, 9).first); // c = Delta - k - 1
    CHECK(valid_parameters(12, 10).first); // c = Delta - k with Delta = 3*4
    CHECK(!valid_parameters(12, 11).first);
    CHECK(valid_parameters(20, 16).first);
    CHECK(valid_parameters(20, 17).first); // Delta = 4*5
    CHECK(!valid_parameters(20, 18).first);
    CHECK(!valid_parameters(2, 3).first);
    CHECK(!valid_parameters(12, 2).first);
    CHECK(!valid_parameters(12, 13).first);
    CHECK(!valid_parameters(20, 18).second.empty()); // reason is populated
}

TEST_CASE("the first chain graph is a complete graph on c+1 vertices")
{
    LayeredGraph g1 = build_chain(12, 9, 1);
    CHECK(g1.layers == 1);
    CHECK(g1.graph.n() == 10);
    CHECK(g1.graph.m() == 45);
    for (int v = 1; v <= 10; ++v) {
        CHECK(g1.layer_of[static_cast<std::size_t>(v)] == 1);
        CHECK(g1.role_of[static_cast<std::size_t>(v)] == LayeredGraph::clique);
    }
}

TEST_CASE("chain growth arithmetic and degree invariants")
{
    LayeredGraph g2 = build_chain(12, 9, 2);
    CHECK(g2.graph.n() == 22); // 10 - 1 + 5 + 8
    CHECK(g2.graph.delta() <= 12);
    CHECK(g2.delta == 12);
    CHECK(g2.c == 9);
    REQUIRE(g2.removed_degree.size() == 1);
    CHECK(g2.removed_degree[0] <= 12);

    int s2 = 0, c2 = 0, layer1 = 0;
    std::vector<int> stable2;
    for (int v = 1; v <= g2.graph.n(); ++v) {
        int layer = g2.layer_of[static_cast<std::size_t>(v)];
        int role = g2.role_of[static_cast<std::size_t>(v)];
        if (layer == 1)
            ++layer1;
        else if (role == LayeredGraph::stable) {
            ++s2;
            stable2.push_back(v);
        } else {
            ++c2;
            // every top-layer clique vertex has degree exactly Delta
            CHECK(g2.graph.degree(v) == 12);
        }
    }
    CHECK(layer1 == 9);
    CHECK(s2 == 5); // Delta - c + 2
    CHECK(c2 == 8); // c - 1
    CHECK(is_stable(g2.graph, stable2));
    // each stable vertex sees the whole new clique
    for (int s : stable2) {
        int into_clique = 0;
        for (int u : g2.graph.neighbors(s))
            if (g2.layer_of[static_cast<std::size_t>(u)] == 2
                && g2.role_of[static_cast<std::size_t>(u)] == LayeredGraph::clique)
                ++into_clique;
        CHECK(into_clique == 8);
    }
}

TEST_CASE("clique-role vertices keep degree Delta in deeper chains")
{
    LayeredGraph g3 = build_chain(12, 9, 3);
    CHECK(g3.graph.n() == 34);
    CHECK(g3.graph.delta() <= 12);
    for (int v = 1; v <= g3.graph.n(); ++v)
        if (g3.layer_of[static_cast<std::size_t>(v)] >= 2
            && g3.role_of[static_cast<std::size_t>(v)] == LayeredGraph::clique)
            CHECK(g3.graph.degree(v) == 12);
}

TEST_CASE("the chain needs c+1 colors")
{
    LayeredGraph g2 = build_chain(12, 9, 2);
    CHECK(chromatic_number(g2.graph) == 10);
}

TEST_CASE("build_chain rejects invalid parameters")
{
    CHECK_THROWS_AS(build_chain(12, 11, 2), PreconditionError);
}

TEST_CASE("the hard instance differs from the chain by one crossing edge")
{
    LayeredGraph chain = build_chain(12, 9, 4);
    Graph hard = build_hard_instance(12, 9, 4);
    CHECK(hard.n() == chain.graph.n());
    CHECK(hard.m() == chain.graph.m() - 1);
    CHECK(hard.delta() <= 12);

    // find the missing edge and check it crosses layers 2 and 3
    std::vector<std::pair<int, int>> missing;
    for (auto [u, v] : chain.graph.edges())
        if (!hard.adjacent(u, v))
            missing.push_back({ u, v });
    REQUIRE(missing.size() == 1);
    auto [u, v] = missing[0];
    int lu = chain.layer_of[static_cast<std::size_t>(u)];
    int lv = chain.layer_of[static_cast<std::size_t>(v)];
    CHECK(std::min(lu, lv) == 2);
    CHECK(std::max(lu, lv) == 3);
}

TEST_CASE("build_hard_instance demands an even chain length of at least 4")
{
    CHECK_THROWS_AS(build_hard_instance(12, 9, 3), PreconditionError);
    CHECK_THROWS_AS(build_hard_instance(12, 9, 2), PreconditionError);
}

TEST_CASE("the top layer is a reducer and reduction walks the chain back")
{
    for (int i : { 2, 3 }) {
        LayeredGraph gi = build_chain(12, 9, i);
        ReducerSpec top = top_reducer(gi);
        CHECK(top.clique.size() == 8);
        CHECK(top.stable.size() == 5);
        CHECK(is_clique(gi.graph, top.clique.ids()));
        CHECK(is_stable(gi.graph, top.stable.ids()));
        // the stable set inherits all deg(v) = c edges of the removed vertex,
        // which is exactly c external neighbors: one too many for deletability
        CHECK(!is_deletable(gi.graph, top, 9));

        Reduction red = reduce(gi.graph, top);
        LayeredGraph prev = build_chain(12, 9, i - 1);
        CHECK(are_isomorphic(red.graph, prev.graph));
    }
}

TEST_CASE("layer annotations serialize to valid JSON")
{
    LayeredGraph g2 = build_chain(12, 9, 2);
    nlohmann::json j = nlohmann::json::parse(g2.layers_json());
    CHECK(j.is_object());
}

TEST_CASE("every chain ball has an isomorphic twin in the hard instance")
{
    LayeredGraph chain = build_chain(12, 9, 4);
    Graph hard = build_hard_instance(12, 9, 4);

    IndistinguishabilityReport r0 = indistinguishability_report(hard, chain, 0);
    CHECK(r0.total == chain.graph.n());
    CHECK(r0.matched == r0.total);

    IndistinguishabilityReport r1 = indistinguishability_report(hard, chain, 1);
    CHECK(r1.matched == r1.total);
    nlohmann::json j = nlohmann::json::parse(r1.to_json());
    CHECK(j.is_object());
}

TEST_CASE("a large radius exposes the deleted edge")
{
    // At a radius covering the whole graph the chain ball is the chain itself,
    // which no ball of the edge-deleted graph can reproduce.
    LayeredGraph chain = build_chain(12, 9, 4);
    Graph hard = build_hard_instance(12, 9, 4);
    IndistinguishabilityReport rep = indistinguishability_report(hard, chain, 3);
    CHECK(rep.matched < rep.total);
}
