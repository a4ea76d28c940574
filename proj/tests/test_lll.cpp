#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "dgc/lll.hpp"
#include "helpers.hpp"

using namespace dgc;
using namespace dgc::lll;

namespace {

// CNF clause family on fair coins: clause j reads `width` variables starting
// at j*stride, violated iff every literal is false (all coins land 0). With
// stride = width/2 each clause overlaps only its two neighbors, so the raw
// dependency degree is 2 and e * 2^-width * 4 < 1 for width >= 4.
LLLInstance cnf_chain(int clauses, int width, int stride)
{
    LLLInstance inst;
    inst.variables.assign(
        static_cast<std::size_t>((clauses - 1) * stride + width), Variable { "fair-coin", 0 });
    for (int j = 0; j < clauses; ++j) {
        Event ev;
        for (int t = 0; t < width; ++t)
            ev.scope.push_back(j * stride + t);
        ev.violated = [](const std::vector<const VarValue*>& vals) {
            for (const VarValue* v : vals)
                if ((*v)[0] != 0)
                    return false;
            return true;
        };
        ev.exact_p = std::pow(0.5, width);
        ev.label = "clause-" + std::to_string(j);
        inst.events.push_back(std::move(ev));
    }
    return inst;
}

bool clause_satisfied(const LLLInstance& inst, const SolveResult& res)
{
    for (std::size_t e = 0; e < inst.events.size(); ++e)
        if (event_violated(inst, static_cast<int>(e), res.assignment))
            return false;
    return true;
}

} // namespace

TEST_CASE("dependency_degree on disjoint, shared, and chained scopes")
{
    LLLInstance disjoint;
    disjoint.variables.assign(6, Variable { "fair-coin", 0 });
    for (int j = 0; j < 3; ++j) {
        Event ev;
        ev.scope = { 2 * j, 2 * j + 1 };
        ev.violated = [](const auto&) { return false; };
        ev.exact_p = 0.0;
        disjoint.events.push_back(std::move(ev));
    }
    CHECK(dependency_degree(disjoint) == 0);
    CHECK(check_criterion(disjoint, Criterion::cps(), 0, 0).d == 2); // d >= 2 convention

    LLLInstance shared;
    shared.variables.assign(1, Variable { "fair-coin", 0 });
    for (int j = 0; j < 5; ++j) {
        Event ev;
        ev.scope = { 0 };
        ev.violated = [](const auto&) { return false; };
        shared.events.push_back(std::move(ev));
    }
    CHECK(dependency_degree(shared) == 4);

    // 2-SAT chain: clause j on variables {j, j+1}, five clauses on six vars.
    LLLInstance chain;
    chain.variables.assign(6, Variable { "fair-coin", 0 });
    for (int j = 0; j < 5; ++j) {
        Event ev;
        ev.scope = { j, j + 1 };
        ev.violated = [](const auto&) { return false; };
        chain.events.push_back(std::move(ev));
    }
    CHECK(dependency_degree(chain) == 2);
}

TEST_CASE("check_criterion arithmetic")
{
    auto make = [](double p, int fan) {
        // `fan`+1 events all sharing variable 0 gives raw degree `fan`.
        LLLInstance inst;
        inst.variables.assign(1, Variable { "fair-coin", 0 });
        for (int j = 0; j <= fan; ++j) {
            Event ev;
            ev.scope = { 0 };
            ev.violated = [](const auto&) { return false; };
            ev.exact_p = p;
            inst.events.push_back(std::move(ev));
        }
        return inst;
    };

    CriterionReport ok = check_criterion(make(0.001, 3), Criterion::cps(), 0, 0);
    CHECK(ok.holds); // e * 0.001 * 9 ~ 0.024
    CHECK(ok.d == 3);
    CHECK(!ok.p_estimated);
    CHECK(ok.value == doctest::Approx(2.718281828 * 0.001 * 9.0));

    CriterionReport no = check_criterion(make(0.5, 4), Criterion::cps(), 0, 0);
    CHECK(!no.holds); // e * 0.5 * 16 > 1

    CriterionReport zero = check_criterion(make(0.0, 7), Criterion::cps(), 0, 0);
    CHECK(zero.holds);
    CHECK(zero.value == 0.0);

    // GHK preset: 2^15 * p * d^8.
    CriterionReport ghk = check_criterion(make(1e-9, 2), Criterion::ghk(), 0, 0);
    CHECK(ghk.holds);
    CHECK(ghk.value == doctest::Approx(32768.0 * 1e-9 * 256.0));
}

TEST_CASE("check_criterion estimates missing probabilities by sampling")
{
    LLLInstance inst;
    inst.variables.assign(2, Variable { "fair-coin", 0 });
    Event ev;
    ev.scope = { 0, 1 };
    ev.violated = [](const std::vector<const VarValue*>& vals) {
        return (*vals[0])[0] == 1 && (*vals[1])[0] == 1; // p = 1/4
    };
    inst.events.push_back(std::move(ev));
    CriterionReport rep = check_criterion(inst, Criterion::cps(), 7, 100'000);
    CHECK(rep.p_estimated);
    CHECK(rep.p == doctest::Approx(0.25).epsilon(0.05));

    // With sampling disabled, a missing probability is an error.
    CHECK_THROWS_AS(check_criterion(inst, Criterion::cps(), 0, 0), PreconditionError);
}

TEST_CASE("solve with no events returns the initial sample in zero phases")
{
    LLLInstance inst;
    inst.variables.assign(3, Variable { "uniform-color", 5 });
    SolveResult res = solve(inst, { .seed = 3 });
    CHECK(res.success);
    CHECK(res.phases == 0);
    for (const VarValue& v : res.assignment)
        CHECK((v[0] >= 1 && v[0] <= 5));
}

TEST_CASE("solve flips a single forbidden coin")
{
    LLLInstance inst;
    inst.variables.assign(1, Variable { "fair-coin", 0 });
    Event ev;
    ev.scope = { 0 };
    ev.violated = [](const std::vector<const VarValue*>& vals) { return (*vals[0])[0] == 1; };
    inst.events.push_back(std::move(ev));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SolveResult res = solve(inst, { .seed = seed });
        CHECK(res.success);
        CHECK(res.assignment[0][0] == 0);
    }
}

TEST_CASE("solve satisfies a CNF chain within the polynomial criterion")
{
    LLLInstance inst = cnf_chain(60, 6, 3);
    CriterionReport rep = check_criterion(inst, Criterion::cps(), 0, 0);
    REQUIRE(rep.holds);
    CHECK(rep.d_raw == 2);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        SolveResult res = solve(inst, { .seed = seed });
        CHECK(res.success);
        CHECK(res.violated.empty());
        CHECK(clause_satisfied(inst, res));
    }
}

TEST_CASE("variables outside every event scope keep their initial sample")
{
    // Variable 6 is scoped by no event, so resampling must never touch it.
    LLLInstance inst = cnf_chain(2, 3, 3);
    inst.variables.push_back(Variable { "uniform-color", 1000 });
    std::size_t spare = inst.variables.size() - 1;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng expect(derive_seed(seed, spare, 0));
        std::int64_t initial = sample_variable(inst.variables[spare], expect)[0];
        SolveResult res = solve(inst, { .seed = seed });
        CHECK(res.success);
        CHECK(res.assignment[spare][0] == initial);
    }
}

TEST_CASE("phase exhaustion reports the violated events")
{
    LLLInstance inst;
    inst.variables.assign(1, Variable { "fair-coin", 0 });
    Event ev;
    ev.scope = { 0 };
    ev.violated = [](const auto&) { return true; }; // unsatisfiable
    inst.events.push_back(std::move(ev));
    SolveResult res = solve(inst, { .seed = 1, .max_phases = 10 });
    CHECK(!res.success);
    CHECK(res.phases == 10);
    CHECK(res.violated == std::vector<int> { 0 });
}

TEST_CASE("solve records phase counts in the stats")
{
    LLLInstance inst = cnf_chain(40, 4, 2);
    sim::RoundStats stats;
    SolveResult res = solve(inst, { .seed = 5, .max_phases = 1000, .stats = &stats });
    CHECK(res.success);
    CHECK(stats.phase_rounds.at("lll-phases") == res.phases);
}

TEST_CASE("samplers draw from their declared supports")
{
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        std::int64_t coin = sample_variable(Variable { "fair-coin", 0 }, rng)[0];
        CHECK((coin == 0 || coin == 1));
        std::int64_t color = sample_variable(Variable { "uniform-color", 9 }, rng)[0];
        CHECK((color >= 1 && color <= 9));
    }
    VarValue perm = sample_variable(Variable { "permutation", 8 }, rng);
    std::sort(perm.begin(), perm.end());
    for (int i = 0; i < 8; ++i)
        CHECK(perm[static_cast<std::size_t>(i)] == i);

    CHECK_THROWS_AS(sample_variable(Variable { "no-such-sampler", 0 }, rng), PreconditionError);
}

TEST_CASE("equal seeds reproduce solves exactly")
{
    LLLInstance inst = cnf_chain(30, 5, 2);
    SolveResult a = solve(inst, { .seed = 424242 });
    SolveResult b = solve(inst, { .seed = 424242 });
    CHECK(a.assignment == b.assignment);
    CHECK(a.phases == b.phases);
}

TEST_CASE("instance serialization is valid JSON without code")
{
    LLLInstance inst = cnf_chain(3, 4, 2);
    inst.events[1].host_anchor = 7;
    inst.events[1].host_radius = 2;
    nlohmann::json j = nlohmann::json::parse(instance_to_json(inst));
    CHECK(j.at("variables").size() == inst.variables.size());
    CHECK(j.at("events").size() == 3);
    CHECK(j.at("events")[0].at("scope").size() == 4);
    CHECK(j.at("events")[1].at("host_anchor") == 7);
    CHECK(j.at("variables")[0].at("sampler") == "fair-coin");
}
