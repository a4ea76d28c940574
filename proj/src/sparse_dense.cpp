#include "dgc/sparse_dense.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

#include "dgc/error.hpp"
#include "dgc/list_coloring.hpp"
#include "dgc/lll.hpp"

namespace dgc {

namespace {

    constexpr std::uint64_t kDrawStream = 0x77a57e'f01ULL;

    std::vector<int> retained_colors(const Graph& g, const VertexSet& draw,
        const std::vector<int>& var_of, const std::vector<lll::VarValue>& assignment)
    {
        std::vector<int> color(static_cast<std::size_t>(g.n()) + 1, 0);
        auto draw_of = [&](int v) {
            return static_cast<int>(assignment[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])][0]);
        };
        for (int v : draw) {
            int c = draw_of(v);
            bool keep = true;
            for (int u : g.neighbors(v))
                if (draw.contains(u) && draw_of(u) == c) {
                    keep = false;
                    break;
                }
            if (keep)
                color[static_cast<std::size_t>(v)] = c;
        }
        return color;
    }

} // namespace

PartialColoring wasteful_round(const Graph& g, const VertexSet& targets, int C, std::uint64_t seed)
{
    if (C < 1)
        throw PreconditionError("wasteful round needs a palette of at least 1 color");
    std::vector<int> draw(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v : targets)
        draw[static_cast<std::size_t>(v)]
            = static_cast<int>(Rng(derive_seed(seed, static_cast<std::uint64_t>(v), kDrawStream))
                    .uniform_int(1, C));
    PartialColoring out = PartialColoring::empty(g.n(), C);
    for (int v : targets) {
        bool keep = true;
        for (int u : g.neighbors(v))
            if (draw[static_cast<std::size_t>(u)] == draw[static_cast<std::size_t>(v)]) {
                keep = false;
                break;
            }
        if (keep)
            out.set(v, draw[static_cast<std::size_t>(v)]);
    }
    return out;
}

PartialColoring sparse_color(
    const Graph& g, const VertexSet& targets, std::int64_t ell, const SparseColorOptions& opts)
{
    if (!opts.constants)
        throw PreconditionError("sparse_color needs a constants profile");
    const ConstantsProfile& cp = *opts.constants;
    const int delta = g.delta();
    const int C = opts.palette > 0 ? opts.palette : std::max(1, delta / 2);
    const VertexSet& draw = opts.draw_set.empty() ? targets : opts.draw_set;

    if (ell < cp.ell_min(delta) && opts.breaches)
        opts.breaches->add("sparse_color: ell=" + std::to_string(ell) + " below profile minimum "
            + std::to_string(cp.ell_min(delta)));

    for (int v : targets) {
        std::int64_t pairs = non_adjacent_pairs_in_neighborhood(g, v, &draw);
        if (pairs < ell * delta)
            throw PreconditionError("sparse_color: vertex " + std::to_string(v) + " has only "
                + std::to_string(pairs) + " non-adjacent neighbor pairs, needs "
                + std::to_string(ell * delta));
    }

    std::vector<std::int64_t> need(static_cast<std::size_t>(g.n()) + 1, 0);
    if (!opts.required_repeats.empty()) {
        for (int v : targets)
            need[static_cast<std::size_t>(v)] = opts.required_repeats[static_cast<std::size_t>(v)];
    } else {
        for (int v : targets)
            need[static_cast<std::size_t>(v)] = cp.required_repeats(ell);
    }

    // Variables: one color draw per draw-set vertex.
    std::vector<int> var_of(static_cast<std::size_t>(g.n()) + 1, -1);
    lll::LLLInstance inst;
    inst.host = &g;
    for (int v : draw) {
        var_of[static_cast<std::size_t>(v)] = static_cast<int>(inst.variables.size());
        inst.variables.push_back({ "uniform-color", C });
    }

    // One bad event per target: "still uncolored with too few repeated
    // colors", scoped to the draws within distance two (retention of a
    // neighbor depends on that neighbor's own neighborhood).
    for (int v : targets) {
        if (need[static_cast<std::size_t>(v)] < 1)
            continue;
        std::vector<int> ball_ids;
        sim::gather_ball(g, v, 2, &ball_ids);
        std::vector<int> scope_vertices;
        for (int u : ball_ids)
            if (draw.contains(u))
                scope_vertices.push_back(u);
        std::sort(scope_vertices.begin(), scope_vertices.end());
        std::map<int, int> pos;
        lll::Event ev;
        for (int u : scope_vertices) {
            pos[u] = static_cast<int>(ev.scope.size());
            ev.scope.push_back(var_of[static_cast<std::size_t>(u)]);
        }
        // Precompute, per closed-neighborhood member, its scope position and
        // the positions of its draw-neighbors, so the predicate reads nothing
        // but its scoped values.
        struct Member {
            int vertex;
            int self_pos; // -1 when not drawing
            std::vector<int> nbr_pos;
        };
        std::vector<Member> members;
        auto make_member = [&](int u) {
            Member m;
            m.vertex = u;
            auto it = pos.find(u);
            m.self_pos = it == pos.end() ? -1 : it->second;
            for (int w : g.neighbors(u))
                if (auto jt = pos.find(w); jt != pos.end())
                    m.nbr_pos.push_back(jt->second);
            return m;
        };
        Member self = make_member(v);
        for (int u : g.neighbors(v))
            members.push_back(make_member(u));
        const std::int64_t need_v = need[static_cast<std::size_t>(v)];
        ev.violated = [self, members, need_v](const std::vector<const lll::VarValue*>& vals) {
            auto retained = [&vals](const Member& m) -> int {
                if (m.self_pos < 0)
                    return 0;
                std::int64_t c = (*vals[static_cast<std::size_t>(m.self_pos)])[0];
                for (int p : m.nbr_pos)
                    if ((*vals[static_cast<std::size_t>(p)])[0] == c)
                        return 0;
                return static_cast<int>(c);
            };
            if (retained(self) != 0)
                return false; // v kept its color: not a bad event
            std::map<int, int> counts;
            for (const Member& m : members)
                if (int c = retained(m); c != 0)
                    ++counts[c];
            std::int64_t repeated = 0;
            for (const auto& [c, cnt] : counts)
                if (cnt >= 2)
                    ++repeated;
            return repeated < need_v;
        };
        ev.host_anchor = v;
        ev.host_radius = 2;
        ev.label = "B_" + std::to_string(v);
        inst.events.push_back(std::move(ev));
    }

    lll::SolveResult best;
    for (int restart = 0; restart <= cp.lll_restarts; ++restart) {
        lll::SolveOptions sopts;
        sopts.seed = derive_seed(opts.seed, 0x5eedULL, static_cast<std::uint64_t>(restart));
        sopts.max_phases = cp.lll_max_phases;
        sopts.stats = opts.stats;
        lll::SolveResult sr = lll::solve(inst, sopts);
        if (opts.stats) {
            // the draw is one exchange; each repair phase reads a radius-2
            // ball and writes it back
            opts.stats->add_phase("sparse-color-rounds", 1 + 4 * sr.phases);
        }
        if (sr.success) {
            best = std::move(sr);
            break;
        }
        if (best.assignment.empty() || sr.violated.size() < best.violated.size())
            best = std::move(sr);
        if (opts.breaches)
            opts.breaches->add("sparse_color: repair restart " + std::to_string(restart + 1)
                + " after phase limit with " + std::to_string(best.violated.size())
                + " bad events");
    }

    std::vector<int> colors = retained_colors(g, draw, var_of, best.assignment);
    PartialColoring out = PartialColoring::empty(g.n(), C);
    for (int v = 1; v <= g.n(); ++v)
        if (colors[static_cast<std::size_t>(v)] != 0)
            out.set(v, colors[static_cast<std::size_t>(v)]);

    if (!best.success) {
        std::vector<int> bad;
        for (int e : best.violated)
            bad.push_back(inst.events[static_cast<std::size_t>(e)].host_anchor);
        if (opts.violated_out)
            *opts.violated_out = bad;
        else
            throw RoundLimitExceeded(
                "sparse_color: repair did not converge within the phase and restart budget",
                std::move(bad));
    } else if (opts.violated_out) {
        opts.violated_out->clear();
    }
    assert(is_proper(g, out));
    return out;
}

DenseExtensionPlan plan_dense_extension(
    const Graph& g, const VertexSet& x, int k, BreachLog* breaches)
{
    if (k < 1)
        throw PreconditionError("plan_dense_extension needs k >= 1");
    const int delta = g.delta();
    DenseExtensionPlan plan;

    Matching full = greedy_complement_matching(g, x);
    // ceil(k/4) pairs: the rounded-down count would vanish for k < 4 and with
    // it the repeated-color slack every later stage leans on.
    const int pair_count = (k + 3) / 4;
    if (full.size() < pair_count)
        throw PreconditionError("insufficient antimatching: component has a complement matching of "
            + std::to_string(full.size()) + " pairs, needs " + std::to_string(pair_count));
    plan.M.pairs.assign(full.pairs.begin(), full.pairs.begin() + pair_count);

    std::vector<int> u_ids;
    {
        VertexSet endpoints;
        for (auto [a, b] : plan.M.pairs) {
            endpoints.add(a);
            endpoints.add(b);
        }
        for (int v : x)
            if (!endpoints.contains(v))
                u_ids.push_back(v);
    }
    plan.U = VertexSet(u_ids);

    if (plan.U.size() < delta - k || 4 * plan.U.size() > 4 * delta - k) {
        if (breaches)
            breaches->add("dense plan: |U|=" + std::to_string(plan.U.size())
                + " outside [Delta-k, Delta-k/4] = [" + std::to_string(delta - k) + ", "
                + std::to_string(delta - k / 4) + "]");
    }

    // Dominators of at least |M|/6 pairs, lowest ids first, capped at
    // ceil(|U|/5).
    std::vector<int> qualifying;
    for (int u : plan.U) {
        int dom = 0;
        for (auto [a, b] : plan.M.pairs)
            if (g.adjacent(u, a) && g.adjacent(u, b))
                ++dom;
        if (6 * dom >= plan.M.size())
            qualifying.push_back(u);
    }
    const int z_cap = (plan.U.size() + 4) / 5;
    if (static_cast<int>(qualifying.size()) < z_cap && breaches)
        breaches->add("dense plan: only " + std::to_string(qualifying.size())
            + " dominators, below |U|/5 = " + std::to_string(z_cap));
    qualifying.resize(std::min<std::size_t>(qualifying.size(), static_cast<std::size_t>(z_cap)));
    plan.Z = VertexSet(qualifying);

    for (int u : plan.U) {
        if (plan.Z.contains(u))
            continue;
        if (g.degree(u) <= delta - k) {
            plan.W0.add(u);
            continue;
        }
        int in_z = 0;
        for (int w : g.neighbors(u))
            if (plan.Z.contains(w))
                ++in_z;
        if (4 * in_z >= plan.Z.size())
            plan.Wplus.add(u);
        else
            plan.Wminus.add(u);
    }
    if (plan.Wminus.size() > 6 * k && breaches)
        breaches->add("dense plan: |W-|=" + std::to_string(plan.Wminus.size()) + " exceeds 6k="
            + std::to_string(6 * k));
    return plan;
}

PartialColoring extend_components(const Graph& g, const std::vector<VertexSet>& comps,
    const PartialColoring& outer, int c, int k, std::uint64_t seed, sim::RoundStats* stats,
    BreachLog* breaches)
{
    PartialColoring result = outer;
    result.palette = std::max(result.palette, c);
    if (comps.empty())
        return result;

    std::vector<DenseExtensionPlan> plans;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        DenseExtensionPlan plan = plan_dense_extension(g, comps[i], k, breaches);
        plan.component = static_cast<int>(i);
        plans.push_back(std::move(plan));
    }

    // Stage 1: identify each antimatching pair into one vertex and color the
    // merged vertices, so both pair members land on the same color.
    {
        std::vector<int> rep(static_cast<std::size_t>(g.n()) + 1);
        for (int v = 1; v <= g.n(); ++v)
            rep[static_cast<std::size_t>(v)] = v;
        for (const auto& plan : plans)
            for (auto [a, b] : plan.M.pairs)
                rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);

        std::vector<int> kept;
        for (int v = 1; v <= g.n(); ++v)
            if (rep[static_cast<std::size_t>(v)] == v)
                kept.push_back(v);
        std::vector<int> new_of_old(static_cast<std::size_t>(g.n()) + 1, 0);
        for (std::size_t i = 0; i < kept.size(); ++i)
            new_of_old[static_cast<std::size_t>(kept[i])] = static_cast<int>(i) + 1;

        std::vector<std::pair<int, int>> edges;
        for (auto [u, w] : g.edges()) {
            int a = new_of_old[static_cast<std::size_t>(rep[static_cast<std::size_t>(u)])];
            int b = new_of_old[static_cast<std::size_t>(rep[static_cast<std::size_t>(w)])];
            if (a != b)
                edges.push_back({ a, b });
        }
        Graph h1 = Graph::from_edges(static_cast<int>(kept.size()), edges);

        PartialColoring h1_colored = PartialColoring::empty(h1.n(), c);
        for (int v : kept)
            if (result.colored(v))
                h1_colored.set(new_of_old[static_cast<std::size_t>(v)], result.at(v));

        std::vector<int> merged;
        for (const auto& plan : plans)
            for (auto [a, b] : plan.M.pairs)
                merged.push_back(new_of_old[static_cast<std::size_t>(std::min(a, b))]);

        PartialColoring h1_result = color_subset(
            h1, h1_colored, merged, c, 1, derive_seed(seed, 1), "dense-pairs", stats);
        for (const auto& plan : plans)
            for (auto [a, b] : plan.M.pairs) {
                int col = h1_result.at(new_of_old[static_cast<std::size_t>(std::min(a, b))]);
                result.set(a, col);
                result.set(b, col);
            }
    }

    // Stages 2-5 in mandatory order: each stage's slack counts on the later
    // sets still being uncolored.
    auto stage = [&](int index, const char* name, auto pick) {
        std::vector<int> subset;
        for (const auto& plan : plans)
            for (int v : pick(plan))
                subset.push_back(v);
        result = color_subset(g, result, subset, c, 1,
            derive_seed(seed, static_cast<std::uint64_t>(index)), name, stats);
    };
    stage(2, "dense-Wminus", [](const DenseExtensionPlan& p) -> const VertexSet& { return p.Wminus; });
    stage(3, "dense-Wplus", [](const DenseExtensionPlan& p) -> const VertexSet& { return p.Wplus; });
    stage(4, "dense-Z", [](const DenseExtensionPlan& p) -> const VertexSet& { return p.Z; });
    stage(5, "dense-W0", [](const DenseExtensionPlan& p) -> const VertexSet& { return p.W0; });

    assert(is_proper(g, result));
    return result;
}

PartialColoring dense_extend(const Graph& g, const DenseDecomposition& dec,
    const PartialColoring& s_coloring, int c, int k, std::uint64_t seed, sim::RoundStats* stats,
    BreachLog* breaches)
{
    if (auto conflict = find_conflict_edge(g, s_coloring))
        throw PreconditionError("dense_extend: input coloring improper on edge "
            + std::to_string(conflict->first) + "-" + std::to_string(conflict->second));
    for (int v : dec.sparse)
        if (!s_coloring.colored(v))
            throw PreconditionError(
                "dense_extend: sparse vertex " + std::to_string(v) + " is uncolored");
    const int delta = g.delta();
    if (breaches) {
        if (48 * c < 48 * delta - k)
            breaches->add("dense_extend: c=" + std::to_string(c) + " below Delta - k/48");
        if (delta < 30 * k)
            breaches->add("dense_extend: Delta=" + std::to_string(delta) + " below 30k");
    }
    return extend_components(g, dec.components, s_coloring, c, k, seed, stats, breaches);
}

Theorem1Result theorem1_run(
    const Graph& g, int k, const ConstantsProfile& constants, std::uint64_t seed)
{
    if (k < 1)
        throw PreconditionError("theorem1_run needs k >= 1");
    Theorem1Result res;
    const int delta = g.delta();
    if (delta < 2)
        throw PreconditionError("theorem1_run needs Delta >= 2");
    if (100 * static_cast<std::int64_t>(k) > delta)
        res.breaches.add("k=" + std::to_string(k) + " above Delta/100");
    if (constants.name == "paper") {
        double lo = std::ldexp(1.0, 59) * (delta >= 2 ? std::log2(static_cast<double>(delta)) : 1);
        if (static_cast<double>(k) < lo)
            res.breaches.add("k below the 2^59 log Delta regime");
    }

    // (a) clique certificate
    const int threshold = delta - k;
    if (threshold < 1) {
        res.certificate = { 1, VertexSet({ 1 }) };
        return res;
    }
    if (auto cert = find_clique_above(g, threshold)) {
        res.certificate = *cert;
        return res;
    }

    // (b) dense decomposition at d = k/16
    int d = k / 16;
    if (100 * static_cast<std::int64_t>(d) > delta) {
        d = delta / 100;
        res.breaches.add("decomposition density clamped to Delta/100");
    }
    res.decomposition = build_decomposition(g, d, &res.stats);
    const DenseDecomposition& dec = res.decomposition;

    const int c = delta - constants.palette_drop(k);
    if (c < 1)
        throw PreconditionError("palette collapsed: Delta - floor(eps k) < 1");
    res.palette = c;

    // (c) high-degree sparse vertices: everything whose extension slack will
    // depend on repeated colors
    std::vector<int> deg_s(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v : dec.sparse)
        for (int u : g.neighbors(v))
            if (dec.sparse.contains(u))
                ++deg_s[static_cast<std::size_t>(v)];
    const int t_slack = std::max(k / 32, delta - c);
    std::vector<int> t_ids;
    for (int v : dec.sparse)
        if (deg_s[static_cast<std::size_t>(v)] >= delta - t_slack)
            t_ids.push_back(v);
    VertexSet T(t_ids);

    // (d) wasteful coloring of S with repair targeted at T
    const std::int64_t ell = std::max(constants.ell_min(delta), std::int64_t { k / 32 });
    PartialColoring partial = PartialColoring::empty(g.n(), std::max(1, delta / 2));
    if (!T.empty()) {
        std::vector<std::int64_t> need(static_cast<std::size_t>(g.n()) + 1, 0);
        for (int v : T) {
            std::int64_t crit = deg_s[static_cast<std::size_t>(v)] - c + 1;
            if (constants.critical_events_only)
                need[static_cast<std::size_t>(v)] = std::max<std::int64_t>(crit, 0);
            else
                need[static_cast<std::size_t>(v)]
                    = std::max(crit, constants.required_repeats(ell));
        }
        SparseColorOptions sopts;
        sopts.seed = derive_seed(seed, 0xd);
        sopts.constants = &constants;
        sopts.required_repeats = std::move(need);
        sopts.draw_set = dec.sparse;
        sopts.stats = &res.stats;
        sopts.breaches = &res.breaches;
        partial = sparse_color(g, T, ell, sopts);
    }

    // (e) extend the coloring over all of S
    PartialColoring s_colored = color_subset(
        g, partial, dec.sparse.ids(), c, 1, derive_seed(seed, 0xe), "extend-S", &res.stats);

    // (f) dense components
    PartialColoring total
        = dense_extend(g, dec, s_colored, c, k, derive_seed(seed, 0xf), &res.stats, &res.breaches);

    if (!total.total(g.n()) || !is_proper(g, total) || total.max_color() > c)
        throw ModelViolation("theorem1_run produced an invalid coloring (internal error)");
    res.coloring = std::move(total);
    return res;
}

} // namespace dgc
