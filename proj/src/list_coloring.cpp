#include "dgc/list_coloring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace dgc {

int repeated_colors(const Graph& g, int v, const PartialColoring& coloring)
{
    std::map<int, int> counts;
    for (int u : g.neighbors(v))
        if (coloring.colored(u))
            ++counts[coloring.at(u)];
    // every occurrence beyond the first is a repeat: it shrinks the list by
    // one less than it shrinks the residual degree
    int repeated = 0;
    for (const auto& [color, count] : counts)
        repeated += count - 1;
    return repeated;
}

ResidualLists residual_lists(const Graph& g, const PartialColoring& colored, int palette)
{
    if (auto conflict = find_conflict_edge(g, colored))
        throw PreconditionError("input coloring is improper on edge "
            + std::to_string(conflict->first) + "-" + std::to_string(conflict->second));

    std::vector<int> uncolored;
    for (int v = 1; v <= g.n(); ++v)
        if (!colored.colored(v))
            uncolored.push_back(v);

    ResidualLists res;
    res.uncolored_subgraph = g.induced(uncolored, &res.old_of_new);
    int k = res.uncolored_subgraph.n();
    res.lists.assign(static_cast<std::size_t>(k) + 1, {});
    res.slack.assign(static_cast<std::size_t>(k) + 1, 0);
    res.repeated.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        int v = res.old_of_new[static_cast<std::size_t>(i)];
        std::vector<bool> seen(static_cast<std::size_t>(palette) + 1, false);
        int distinct = 0;
        for (int u : g.neighbors(v))
            if (colored.colored(u) && !seen[static_cast<std::size_t>(colored.at(u))]) {
                seen[static_cast<std::size_t>(colored.at(u))] = true;
                ++distinct;
            }
        auto& list = res.lists[static_cast<std::size_t>(i)];
        for (int c = 1; c <= palette; ++c)
            if (!seen[static_cast<std::size_t>(c)])
                list.push_back(c);
        res.slack[static_cast<std::size_t>(i)] = static_cast<int>(list.size()) - res.uncolored_subgraph.degree(i);
        res.repeated[static_cast<std::size_t>(i)] = repeated_colors(g, v, colored);
        // |L(u)| + (distinct colors in N(u)) = c, and each repeated color buys
        // one unit over c - d_G(u).
        assert(static_cast<int>(list.size()) + distinct == palette);
        assert(res.slack[static_cast<std::size_t>(i)]
            >= palette + res.repeated[static_cast<std::size_t>(i)] - g.degree(v));
    }
    return res;
}

namespace {

    constexpr std::int64_t kTagPropose = 1;
    constexpr std::int64_t kTagCommit = 2;

    struct DegPlusState {
        std::vector<int> list;
        int color = 0;
        int proposal = 0;
    };

} // namespace

PartialColoring solve_deg_plus(
    const Graph& gU, const std::vector<std::vector<int>>& lists, const DegPlusOptions& opts)
{
    int palette = 0;
    for (int v = 1; v <= gU.n(); ++v) {
        const auto& l = lists[static_cast<std::size_t>(v)];
        if (static_cast<int>(l.size()) < gU.degree(v) + 1)
            throw SlackViolation("deg+1-list-coloring", v, static_cast<int>(l.size()),
                gU.degree(v), gU.degree(v), false);
        for (int c : l)
            palette = std::max(palette, c);
    }

    sim::NodeProgram prog;
    prog.init = [&lists](const sim::NodeEnv& env, Rng&) {
        DegPlusState s;
        s.list = lists[static_cast<std::size_t>(env.id)];
        return std::any(s);
    };
    int num = opts.proposal_num, den = opts.proposal_den;
    prog.step = [num, den](std::any& state, const sim::NodeEnv& env, int round,
                    const std::vector<sim::Incoming>& in, sim::StepIo& io, Rng& rng) {
        auto& s = std::any_cast<DegPlusState&>(state);
        (void)env;
        if (round % 2 == 0) {
            // Commits from the previous resolve step shrink the list; the
            // committed neighbor also drops out of the residual degree, so
            // |L| >= deg+1 is preserved round to round.
            for (const auto& msg : in)
                if (msg.payload.size() == 2 && msg.payload[0] == kTagCommit) {
                    auto it = std::find(s.list.begin(), s.list.end(), static_cast<int>(msg.payload[1]));
                    if (it != s.list.end())
                        s.list.erase(it);
                }
            s.proposal = 0;
            if (rng.chance(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den))) {
                s.proposal = s.list[rng.below(s.list.size())];
                for (int u : *env.neighbors)
                    io.outbox.push_back({ u, { kTagPropose, s.proposal } });
            }
        } else {
            if (s.proposal != 0) {
                bool conflict = false;
                for (const auto& msg : in)
                    if (msg.payload.size() == 2 && msg.payload[0] == kTagPropose
                        && static_cast<int>(msg.payload[1]) == s.proposal) {
                        conflict = true;
                        break;
                    }
                if (!conflict) {
                    s.color = s.proposal;
                    for (int u : *env.neighbors)
                        io.outbox.push_back({ u, { kTagCommit, s.color } });
                    io.halt = true;
                }
            }
        }
    };
    prog.output = [](const std::any& state) -> std::int64_t {
        return std::any_cast<const DegPlusState&>(state).color;
    };
    prog.fingerprint = [](const std::any& state) {
        const auto& s = std::any_cast<const DegPlusState&>(state);
        std::ostringstream ss;
        ss << s.color << '/' << s.proposal << '/';
        for (int c : s.list)
            ss << c << ',';
        return ss.str();
    };

    sim::RunOptions ropts;
    ropts.seed = opts.seed;
    ropts.max_rounds = 2 * opts.max_trial_rounds + 1;
    ropts.phase = "deg+1-sim";
    sim::RunResult res;
    try {
        res = sim::run(gU, prog, ropts);
    } catch (const RoundLimitExceeded& e) {
        std::ostringstream ss;
        ss << "deg+1 list coloring stuck after " << opts.max_trial_rounds
           << " trial rounds on " << e.unhalted().size() << " vertices";
        throw RoundLimitExceeded(ss.str(), e.unhalted());
    }
    if (opts.stats) {
        opts.stats->merge(res.stats);
        opts.stats->add_phase("deg+1-trials", (res.stats.rounds + 1) / 2);
    }

    PartialColoring out = PartialColoring::empty(gU.n(), palette);
    for (int v = 1; v <= gU.n(); ++v)
        out.set(v, static_cast<int>(res.outputs[static_cast<std::size_t>(v)]));
    return out;
}

PartialColoring color_subset(const Graph& g, const PartialColoring& colored,
    const std::vector<int>& subset, int c, int required_slack, std::uint64_t seed,
    const std::string& stage, sim::RoundStats* stats)
{
    if (required_slack < 1)
        throw PreconditionError("required_slack must be >= 1");
    std::vector<int> targets;
    for (int v : subset)
        if (!colored.colored(v))
            targets.push_back(v);
    PartialColoring out = colored;
    out.palette = std::max(out.palette, c);
    if (targets.empty())
        return out;

    std::vector<int> old_of_new;
    Graph sub = g.induced(targets, &old_of_new);
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(sub.n()) + 1);
    for (int i = 1; i <= sub.n(); ++i) {
        int v = old_of_new[static_cast<std::size_t>(i)];
        std::vector<bool> seen(static_cast<std::size_t>(c) + 1, false);
        for (int u : g.neighbors(v))
            if (colored.colored(u)) {
                int col = colored.at(u);
                if (col <= c)
                    seen[static_cast<std::size_t>(col)] = true;
            }
        auto& list = lists[static_cast<std::size_t>(i)];
        for (int col = 1; col <= c; ++col)
            if (!seen[static_cast<std::size_t>(col)])
                list.push_back(col);
        int slack = static_cast<int>(list.size()) - sub.degree(i);
        if (slack < required_slack)
            throw SlackViolation(stage, v, static_cast<int>(list.size()), sub.degree(i),
                g.degree(v), true);
    }

    DegPlusOptions dopts;
    dopts.seed = derive_seed(seed, 0xc01075e7ULL);
    dopts.stats = stats;
    PartialColoring sub_coloring = solve_deg_plus(sub, lists, dopts);
    for (int i = 1; i <= sub.n(); ++i)
        out.set(old_of_new[static_cast<std::size_t>(i)], sub_coloring.at(i));
    return out;
}

PartialColoring extend(const Graph& g, const PartialColoring& colored, int c, int required_slack,
    std::uint64_t seed, sim::RoundStats* stats)
{
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 1; v <= g.n(); ++v)
        all[static_cast<std::size_t>(v) - 1] = v;
    return color_subset(g, colored, all, c, required_slack, seed, "extend", stats);
}

} // namespace dgc
