#ifndef DGC_CONSTANTS_HPP
#define DGC_CONSTANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dgc {

// Every numeric threshold of the coloring pipeline as a named, overridable
// parameter. The "paper" preset keeps the published constants, which are
// astronomically out of reach on desk-sized graphs; the "desk" preset scales
// them down so every code path runs on Delta in the tens. Whenever a desk run
// crosses a threshold the published analysis relies on, the breach is recorded
// (never silently ignored).
struct ConstantsProfile {
    std::string name = "desk";

    // Repeated-color fraction beta = beta_num/beta_den: an uncolored target is
    // bad when it has <= beta * ell repeated colors in its neighborhood.
    std::int64_t beta_num = 1;
    std::int64_t beta_den = 4;

    // Palette shrink eps = eps_num/eps_den: the pipeline targets
    // Delta - floor(eps * k) colors.
    std::int64_t eps_num = 1;
    std::int64_t eps_den = 10;

    // Minimal ell: max(ell_floor, ell_scale * log2(delta)).
    double ell_scale = 0.0;
    std::int64_t ell_floor = 2;

    // Desk mode: only enforce bad events at vertices whose slack actually
    // depends on repeated colors (the ones with residual degree >= palette).
    bool critical_events_only = true;

    int lll_max_phases = 1000;
    int lll_restarts = 20;

    static ConstantsProfile paper();
    static ConstantsProfile desk();
    static ConstantsProfile from_json(const std::string& text);
    static ConstantsProfile load(const std::string& name_or_path);
    std::string to_json() const;

    std::int64_t ell_min(int delta) const;
    int palette_drop(int k) const; // floor(eps * k)
    // Smallest repeated-color count satisfying "more than beta * ell".
    std::int64_t required_repeats(std::int64_t ell) const;
};

// Append-only log of desk-scale deviations from published preconditions.
struct BreachLog {
    std::vector<std::string> items;
    void add(const std::string& what) { items.push_back(what); }
    bool empty() const { return items.empty(); }
};

} // namespace dgc

#endif
