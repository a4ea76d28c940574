#include "dgc/sim.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

namespace dgc::sim {

void RoundStats::add_phase(const std::string& name, int rounds_in_phase)
{
    phase_rounds[name] += rounds_in_phase;
}

void RoundStats::merge(const RoundStats& other)
{
    rounds += other.rounds;
    messages += other.messages;
    for (const auto& [name, r] : other.phase_rounds)
        phase_rounds[name] += r;
}

namespace {

    struct StepOutcome {
        std::vector<std::pair<int, Message>> outbox;
        bool halt = false;
        std::string fingerprint;
    };

    bool same_outcome(const StepOutcome& a, const StepOutcome& b)
    {
        return a.halt == b.halt && a.outbox == b.outbox && a.fingerprint == b.fingerprint;
    }

} // namespace

namespace {
    std::ostream* g_default_trace = nullptr;
}

void set_default_trace(std::ostream* trace) { g_default_trace = trace; }

RunResult run(const Graph& g, const NodeProgram& prog, const RunOptions& opts)
{
    std::ostream* trace = opts.trace ? opts.trace : g_default_trace;
    const int n = g.n();
    std::vector<std::any> states(static_cast<std::size_t>(n) + 1);
    std::vector<bool> halted(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<Incoming>> inbox(static_cast<std::size_t>(n) + 1);
    std::vector<NodeEnv> envs(static_cast<std::size_t>(n) + 1);

    RunResult result;
    result.stats.halted_round.assign(static_cast<std::size_t>(n) + 1, -1);

    for (int v = 1; v <= n; ++v) {
        envs[static_cast<std::size_t>(v)] = NodeEnv { v, g.degree(v), n, g.delta(), &g.neighbors(v) };
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(v), 0xfeedULL));
        states[static_cast<std::size_t>(v)] = prog.init(envs[static_cast<std::size_t>(v)], rng);
    }

    int steps = 0;
    int live = n;
    while (live > 0) {
        if (steps > opts.max_rounds) {
            std::vector<int> unhalted;
            for (int v = 1; v <= n; ++v)
                if (!halted[static_cast<std::size_t>(v)])
                    unhalted.push_back(v);
            throw RoundLimitExceeded(
                "round limit " + std::to_string(opts.max_rounds) + " exceeded with "
                    + std::to_string(unhalted.size()) + " unhalted vertices",
                std::move(unhalted));
        }
        const int round = steps;

        auto eval_node = [&](int v, std::any& state) {
            Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(v),
                static_cast<std::uint64_t>(round) + 1));
            StepIo io;
            prog.step(state, envs[static_cast<std::size_t>(v)], round,
                inbox[static_cast<std::size_t>(v)], io, rng);
            StepOutcome out { std::move(io.outbox), io.halt, {} };
            if (prog.fingerprint)
                out.fingerprint = prog.fingerprint(state);
            return out;
        };

        std::vector<StepOutcome> outcomes(static_cast<std::size_t>(n) + 1);
        if (opts.check_order_independence) {
            // Evaluate the round in descending order on copied states first;
            // any divergence from the ascending pass means hidden shared state.
            std::vector<std::any> copies = states;
            std::vector<StepOutcome> reversed(static_cast<std::size_t>(n) + 1);
            for (int v = n; v >= 1; --v)
                if (!halted[static_cast<std::size_t>(v)])
                    reversed[static_cast<std::size_t>(v)] = eval_node(v, copies[static_cast<std::size_t>(v)]);
            for (int v = 1; v <= n; ++v)
                if (!halted[static_cast<std::size_t>(v)]) {
                    outcomes[static_cast<std::size_t>(v)] = eval_node(v, states[static_cast<std::size_t>(v)]);
                    if (!same_outcome(outcomes[static_cast<std::size_t>(v)], reversed[static_cast<std::size_t>(v)]))
                        throw ModelViolation("node " + std::to_string(v)
                            + " behaves differently under a different evaluation order at round "
                            + std::to_string(round));
                }
        } else {
            for (int v = 1; v <= n; ++v)
                if (!halted[static_cast<std::size_t>(v)])
                    outcomes[static_cast<std::size_t>(v)] = eval_node(v, states[static_cast<std::size_t>(v)]);
        }

        // Round boundary: deliver messages, apply halts.
        for (int v = 1; v <= n; ++v)
            inbox[static_cast<std::size_t>(v)].clear();
        bool any_message = false;
        for (int v = 1; v <= n; ++v) {
            if (halted[static_cast<std::size_t>(v)])
                continue;
            auto& out = outcomes[static_cast<std::size_t>(v)];
            if (trace)
                *trace << "{\"round\":" << round << ",\"vertex\":" << v
                       << ",\"sent\":" << out.outbox.size() << "}\n";
            for (auto& [to, payload] : out.outbox) {
                if (!g.adjacent(v, to))
                    throw ModelViolation("node " + std::to_string(v)
                        + " addressed a message to non-neighbor " + std::to_string(to));
                result.stats.messages++;
                any_message = true;
                inbox[static_cast<std::size_t>(to)].push_back(Incoming { v, std::move(payload) });
            }
            if (out.halt) {
                halted[static_cast<std::size_t>(v)] = true;
                result.stats.halted_round[static_cast<std::size_t>(v)] = round;
                --live;
            }
        }
        // Deterministic inbox order regardless of delivery order above.
        for (int v = 1; v <= n; ++v)
            std::sort(inbox[static_cast<std::size_t>(v)].begin(), inbox[static_cast<std::size_t>(v)].end(),
                [](const Incoming& a, const Incoming& b) { return a.from < b.from; });
        ++steps;
        (void)any_message;
    }

    // Communication rounds = exchanges completed before the last node halted.
    result.stats.rounds = std::max(0, steps - 1);
    result.stats.add_phase(opts.phase, result.stats.rounds);
    result.outputs.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        result.outputs[static_cast<std::size_t>(v)] = prog.output(states[static_cast<std::size_t>(v)]);
    return result;
}

Graph gather_ball(const Graph& g, int v, int radius, std::vector<int>* ids_out)
{
    g.check_vertex(v);
    if (radius < 0)
        throw PreconditionError("radius must be >= 0");
    std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
    std::deque<int> queue { v };
    dist[static_cast<std::size_t>(v)] = 0;
    std::vector<int> ball { v };
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] == radius)
            continue;
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                ball.push_back(w);
                queue.push_back(w);
            }
    }
    return g.induced(ball, ids_out);
}

namespace {

    // Message tags for the Luby program.
    constexpr std::int64_t kTagValue = 0;
    constexpr std::int64_t kTagJoined = 1;

    struct LubyState {
        bool active = false;
        int decided = 0; // 0 undecided, 1 in MIS, 2 out
        std::uint64_t value = 0;
    };

} // namespace

VertexSet luby_mis(const Graph& g, const VertexSet& active, std::uint64_t seed, RoundStats* stats)
{
    NodeProgram prog;
    prog.init = [active](const NodeEnv& env, Rng&) {
        LubyState s;
        s.active = active.contains(env.id);
        return std::any(s);
    };
    prog.step = [](std::any& state, const NodeEnv& env, int round,
                    const std::vector<Incoming>& in, StepIo& io, Rng& rng) {
        auto& s = std::any_cast<LubyState&>(state);
        if (!s.active) {
            io.halt = true;
            return;
        }
        if (round % 2 == 0) {
            // A neighbor that joined the MIS in the previous resolve step
            // knocks this node out.
            for (const auto& msg : in)
                if (!msg.payload.empty() && msg.payload[0] == kTagJoined) {
                    s.decided = 2;
                    io.halt = true;
                    return;
                }
            s.value = rng.next();
            for (int u : *env.neighbors)
                io.outbox.push_back({ u, { kTagValue, static_cast<std::int64_t>(s.value >> 1), env.id } });
        } else {
            bool smallest = true;
            for (const auto& msg : in) {
                if (msg.payload.empty() || msg.payload[0] != kTagValue)
                    continue;
                auto other_value = static_cast<std::uint64_t>(msg.payload[1]);
                int other_id = static_cast<int>(msg.payload[2]);
                std::uint64_t mine = s.value >> 1;
                if (other_value < mine || (other_value == mine && other_id < env.id)) {
                    smallest = false;
                    break;
                }
            }
            if (smallest) {
                s.decided = 1;
                for (int u : *env.neighbors)
                    io.outbox.push_back({ u, { kTagJoined } });
                io.halt = true;
            }
        }
    };
    prog.output = [](const std::any& state) -> std::int64_t {
        const auto& s = std::any_cast<const LubyState&>(state);
        return s.decided == 1 ? 1 : 0;
    };
    prog.fingerprint = [](const std::any& state) {
        const auto& s = std::any_cast<const LubyState&>(state);
        std::ostringstream ss;
        ss << s.active << ':' << s.decided << ':' << s.value;
        return ss.str();
    };

    RunOptions opts;
    opts.seed = derive_seed(seed, 0x4d495355ULL); // distinct stream per call
    opts.phase = "luby-mis";
    opts.max_rounds = 64 * (2 + g.n());
    RunResult res = run(g, prog, opts);
    if (stats)
        stats->merge(res.stats);
    std::vector<int> mis;
    for (int v = 1; v <= g.n(); ++v)
        if (res.outputs[static_cast<std::size_t>(v)] == 1)
            mis.push_back(v);
    return VertexSet(std::move(mis));
}

} // namespace dgc::sim
