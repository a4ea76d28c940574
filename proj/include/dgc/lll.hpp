#ifndef DGC_LLL_HPP
#define DGC_LLL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgc/graph.hpp"
#include "dgc/rng.hpp"
#include "dgc/sim.hpp"

namespace dgc::lll {

// A variable's value: single-element vector for scalar samplers, a full
// permutation for the permutation sampler.
using VarValue = std::vector<std::int64_t>;

// Samplers come from a fixed registry so instances can be serialized without
// shipping code: "uniform-color" (param = palette, value in 1..param),
// "fair-coin" (value 0/1), "permutation" (param = length, values a permutation
// of 0..param-1).
struct Variable {
    std::string sampler = "fair-coin";
    std::int64_t param = 0;
};

struct Event {
    std::vector<int> scope; // variable indices, 0-based, ascending
    // Bad-event predicate over the scoped values, in scope order. Must read
    // nothing else; returns true when the event occurs (is violated).
    std::function<bool(const std::vector<const VarValue*>&)> violated;
    int host_anchor = 0; // vertex id when embedded in a host graph, else 0
    int host_radius = 0;
    std::optional<double> exact_p; // omitted -> Monte-Carlo estimate
    std::string label;
};

struct LLLInstance {
    std::vector<Variable> variables;
    std::vector<Event> events;
    const Graph* host = nullptr; // set when events are anchored at vertices
};

struct Criterion {
    double a = 0.0;
    double c_exp = 0.0;
    static Criterion cps() { return { 2.718281828459045, 2.0 }; } // e p d^2 < 1
    static Criterion ghk() { return { 32768.0, 8.0 }; } // 2^15 p d^8 < 1
};

struct CriterionReport {
    bool holds = false;
    double p = 0.0;
    bool p_estimated = false;
    int d = 0; // max(raw dependency degree, 2)
    int d_raw = 0;
    double value = 0.0; // a * p * d^c
};

struct SolveOptions {
    std::uint64_t seed = 0;
    int max_phases = 1000;
    sim::RoundStats* stats = nullptr;
};

struct SolveResult {
    std::vector<VarValue> assignment;
    int phases = 0;
    bool success = false;
    std::vector<int> violated; // event indices still violated (on failure)
};

VarValue sample_variable(const Variable& var, Rng& rng);

// Raw maximum over events of the number of other events sharing a variable.
int dependency_degree(const LLLInstance& inst);

// a * p * d^c < 1 with p the max event probability (exact where registered,
// otherwise Monte-Carlo with `samples` draws per event).
CriterionReport check_criterion(const LLLInstance& inst, const Criterion& crit,
    std::uint64_t seed = 0, int samples = 100'000);

// Parallel Moser-Tardos: sample everything, then repeatedly resample the
// scopes of a maximal independent set of violated events (Luby through the
// host graph when embedded, greedy by index otherwise) until nothing is
// violated. On phase exhaustion returns the best-effort assignment plus the
// violated events.
SolveResult solve(const LLLInstance& inst, const SolveOptions& opts);

bool event_violated(const LLLInstance& inst, int event_index, const std::vector<VarValue>& values);

std::string instance_to_json(const LLLInstance& inst);

} // namespace dgc::lll

#endif
