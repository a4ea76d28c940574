#include "dgc/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "dgc/error.hpp"

namespace dgc::lll {

VarValue sample_variable(const Variable& var, Rng& rng)
{
    if (var.sampler == "fair-coin")
        return { static_cast<std::int64_t>(rng.coin() ? 1 : 0) };
    if (var.sampler == "uniform-color") {
        if (var.param < 1)
            throw PreconditionError("uniform-color sampler needs param >= 1");
        return { rng.uniform_int(1, var.param) };
    }
    if (var.sampler == "permutation") {
        if (var.param < 0)
            throw PreconditionError("permutation sampler needs param >= 0");
        VarValue perm(static_cast<std::size_t>(var.param));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        return perm;
    }
    throw PreconditionError("unknown sampler '" + var.sampler + "'");
}

namespace {

    std::vector<const VarValue*> scoped(
        const std::vector<int>& scope, const std::vector<VarValue>& values)
    {
        std::vector<const VarValue*> out;
        out.reserve(scope.size());
        for (int idx : scope)
            out.push_back(&values[static_cast<std::size_t>(idx)]);
        return out;
    }

    // Events sharing a variable, computed through a variable -> events index.
    std::vector<std::vector<int>> event_adjacency(const LLLInstance& inst)
    {
        std::vector<std::vector<int>> events_of_var(inst.variables.size());
        for (std::size_t e = 0; e < inst.events.size(); ++e)
            for (int v : inst.events[e].scope)
                events_of_var[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
        std::vector<std::vector<int>> adj(inst.events.size());
        for (const auto& evs : events_of_var)
            for (int e : evs)
                for (int f : evs)
                    if (e != f)
                        adj[static_cast<std::size_t>(e)].push_back(f);
        for (auto& nbrs : adj) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        return adj;
    }

} // namespace

bool event_violated(const LLLInstance& inst, int event_index, const std::vector<VarValue>& values)
{
    const Event& ev = inst.events[static_cast<std::size_t>(event_index)];
    return ev.violated(scoped(ev.scope, values));
}

int dependency_degree(const LLLInstance& inst)
{
    auto adj = event_adjacency(inst);
    std::size_t d = 0;
    for (const auto& nbrs : adj)
        d = std::max(d, nbrs.size());
    return static_cast<int>(d);
}

CriterionReport check_criterion(
    const LLLInstance& inst, const Criterion& crit, std::uint64_t seed, int samples)
{
    CriterionReport rep;
    rep.d_raw = dependency_degree(inst);
    rep.d = std::max(rep.d_raw, 2);
    for (std::size_t e = 0; e < inst.events.size(); ++e) {
        const Event& ev = inst.events[e];
        double p;
        if (ev.exact_p) {
            p = *ev.exact_p;
        } else {
            if (samples <= 0)
                throw PreconditionError(
                    "event '" + ev.label + "' has no exact probability and sampling is disabled");
            rep.p_estimated = true;
            Rng rng(derive_seed(seed, 0x9e57ULL, e));
            std::vector<VarValue> vals(inst.variables.size());
            int hits = 0;
            for (int s = 0; s < samples; ++s) {
                for (int idx : ev.scope)
                    vals[static_cast<std::size_t>(idx)]
                        = sample_variable(inst.variables[static_cast<std::size_t>(idx)], rng);
                if (ev.violated(scoped(ev.scope, vals)))
                    ++hits;
            }
            p = static_cast<double>(hits) / samples;
        }
        rep.p = std::max(rep.p, p);
    }
    rep.value = crit.a * rep.p * std::pow(static_cast<double>(rep.d), crit.c_exp);
    rep.holds = rep.value < 1.0;
    return rep;
}

SolveResult solve(const LLLInstance& inst, const SolveOptions& opts)
{
    SolveResult res;
    res.assignment.resize(inst.variables.size());
    for (std::size_t v = 0; v < inst.variables.size(); ++v) {
        Rng rng(derive_seed(opts.seed, v, 0));
        res.assignment[v] = sample_variable(inst.variables[v], rng);
    }
    if (inst.events.empty()) {
        res.success = true;
        return res;
    }

    auto adj = event_adjacency(inst);
    bool host_embedded = inst.host != nullptr;
    for (const Event& ev : inst.events)
        host_embedded = host_embedded && ev.host_anchor > 0;

    for (int phase = 0; phase < opts.max_phases; ++phase) {
        std::vector<int> violated;
        for (std::size_t e = 0; e < inst.events.size(); ++e)
            if (event_violated(inst, static_cast<int>(e), res.assignment))
                violated.push_back(static_cast<int>(e));
        if (violated.empty()) {
            res.success = true;
            if (opts.stats)
                opts.stats->add_phase("lll-phases", res.phases);
            return res;
        }
        res.phases = phase + 1;

        // Maximal independent set of violated events in the dependency graph.
        std::vector<int> selected;
        if (host_embedded && violated.size() > 1) {
            // Dependency subgraph on the violated events, solved distributively.
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < violated.size(); ++i) {
                const auto& nbrs = adj[static_cast<std::size_t>(violated[i])];
                for (std::size_t j = i + 1; j < violated.size(); ++j)
                    if (std::binary_search(nbrs.begin(), nbrs.end(), violated[j]))
                        edges.push_back({ static_cast<int>(i) + 1, static_cast<int>(j) + 1 });
            }
            Graph dep = Graph::from_edges(static_cast<int>(violated.size()), edges);
            VertexSet mis = sim::luby_mis(dep, VertexSet::range(1, dep.n()),
                derive_seed(opts.seed, 0x6d69ULL, static_cast<std::uint64_t>(phase)), opts.stats);
            for (int i : mis)
                selected.push_back(violated[static_cast<std::size_t>(i) - 1]);
        } else {
            std::vector<bool> blocked(inst.events.size(), false);
            for (int e : violated) {
                if (blocked[static_cast<std::size_t>(e)])
                    continue;
                selected.push_back(e);
                for (int f : adj[static_cast<std::size_t>(e)])
                    blocked[static_cast<std::size_t>(f)] = true;
            }
        }

        // Resample exactly the scoped variables of the selected events.
        std::vector<int> to_resample;
        for (int e : selected)
            for (int v : inst.events[static_cast<std::size_t>(e)].scope)
                to_resample.push_back(v);
        std::sort(to_resample.begin(), to_resample.end());
        to_resample.erase(std::unique(to_resample.begin(), to_resample.end()), to_resample.end());
        for (int v : to_resample) {
            Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(v),
                static_cast<std::uint64_t>(phase) + 1));
            res.assignment[static_cast<std::size_t>(v)]
                = sample_variable(inst.variables[static_cast<std::size_t>(v)], rng);
        }
    }

    for (std::size_t e = 0; e < inst.events.size(); ++e)
        if (event_violated(inst, static_cast<int>(e), res.assignment))
            res.violated.push_back(static_cast<int>(e));
    res.success = res.violated.empty();
    if (opts.stats)
        opts.stats->add_phase("lll-phases", res.phases);
    return res;
}

std::string instance_to_json(const LLLInstance& inst)
{
    nlohmann::ordered_json j;
    j["variables"] = nlohmann::json::array();
    for (const Variable& v : inst.variables)
        j["variables"].push_back({ { "sampler", v.sampler }, { "param", v.param } });
    j["events"] = nlohmann::json::array();
    for (const Event& e : inst.events) {
        nlohmann::ordered_json je;
        je["scope"] = e.scope;
        if (e.host_anchor > 0) {
            je["host_anchor"] = e.host_anchor;
            je["host_radius"] = e.host_radius;
        }
        if (e.exact_p)
            je["p"] = *e.exact_p;
        if (!e.label.empty())
            je["label"] = e.label;
        j["events"].push_back(je);
    }
    return j.dump(2);
}

} // namespace dgc::lll
