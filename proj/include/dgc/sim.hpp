#ifndef DGC_SIM_HPP
#define DGC_SIM_HPP

#include <any>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dgc/graph.hpp"
#include "dgc/rng.hpp"

namespace dgc::sim {

// Unbounded message payload; the model places no restriction on size.
using Message = std::vector<std::int64_t>;

struct Incoming {
    int from;
    Message payload;
};

struct StepIo {
    std::vector<std::pair<int, Message>> outbox; // (neighbor id, payload)
    bool halt = false;
};

struct NodeEnv {
    int id = 0;
    int degree = 0;
    int n = 0;
    int delta = 0;
    const std::vector<int>* neighbors = nullptr;
};

// A node program is a pure function of its arguments plus the node's private
// random substream; once halted, a node emits nothing and its output is frozen.
struct NodeProgram {
    std::function<std::any(const NodeEnv&, Rng&)> init;
    std::function<void(std::any& state, const NodeEnv&, int round, const std::vector<Incoming>&,
        StepIo&, Rng&)>
        step;
    std::function<std::int64_t(const std::any&)> output;
    // Optional canonical serialization of a node state, used by the debug
    // order-independence check. Programs without one are compared on their
    // observable behavior (outbox, halt flag) only.
    std::function<std::string(const std::any&)> fingerprint;
};

struct RoundStats {
    int rounds = 0;
    std::uint64_t messages = 0;
    std::vector<int> halted_round; // index 0 unused; -1 = never halted
    std::map<std::string, int> phase_rounds;

    void add_phase(const std::string& name, int rounds_in_phase);
    void merge(const RoundStats& other);
};

struct RunOptions {
    int max_rounds = 1'000'000;
    std::uint64_t seed = 0;
    bool check_order_independence = false;
    std::string phase = "run";
    std::ostream* trace = nullptr; // JSON-lines, one record per (round, vertex)
};

struct RunResult {
    std::vector<std::int64_t> outputs; // index 0 unused
    RoundStats stats;
};

// Process-wide fallback trace sink, used by run() whenever RunOptions.trace is
// unset (how the CLI --trace flag reaches nested node programs).
void set_default_trace(std::ostream* trace);

// Executes synchronous rounds until every node halts or max_rounds is hit
// (RoundLimitExceeded carries the unhalted set). Messages addressed to
// non-neighbors are rejected as a model violation.
RunResult run(const Graph& g, const NodeProgram& prog, const RunOptions& opts);

// Subgraph induced by vertices at distance <= radius from v, original ids in
// ids_out (new id -> original id, 1-based).
Graph gather_ball(const Graph& g, int v, int radius, std::vector<int>* ids_out = nullptr);

// Maximal independent set of g[active], computed as a node program through
// run(). Inactive vertices halt immediately.
VertexSet luby_mis(
    const Graph& g, const VertexSet& active, std::uint64_t seed, RoundStats* stats = nullptr);

} // namespace dgc::sim

#endif
