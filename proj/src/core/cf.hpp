#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dominance.hpp"  // Mask
#include "graph.hpp"

namespace homcolor {

// Abstract hypergraph handle for the iterated largest-class-removal
// framework: a polychromatic colorer for any vertex subset with a
// guaranteed palette bound, plus a hyperedge enumerator for verification.
struct CFInstance {
    std::vector<std::string> labels;
    int palette_bound = 4;  // c: guaranteed bound of the callback
    // Colors the induced sub-hypergraph on `subset` (indices into labels).
    std::function<Coloring(const std::vector<std::size_t>&)> polychromatic;
    // All hyperedges over the full vertex set, as bitmasks.
    std::function<std::vector<Mask>()> hyperedges;
};

struct CFRound {
    std::size_t before = 0;      // vertices remaining at round start
    std::size_t removed = 0;     // size of the removed class
    int callback_palette = 0;    // colors the callback used
};

struct CFResult {
    Coloring coloring;            // final color = removal round index
    std::vector<CFRound> audit;   // one entry per round
};

// Conflict-free coloring: every hyperedge has a vertex whose color is
// unique within it; at most ceil(log_{c/(c-1)} n) colors.
CFResult cf_color(const CFInstance& instance);

// k-strong variant over a k-polychromatic callback.
CFResult k_strong_cf_color(const CFInstance& instance, int k);

struct CFVerifyReport {
    bool pass = true;
    std::string message;
    std::optional<Mask> violating_edge;
};

// Every hyperedge must contain min(|e|, k) vertices whose colors appear
// exactly once in it; k = 1 is the plain conflict-free condition.
CFVerifyReport verify_cf(const CFInstance& instance, const Coloring& coloring, int k);

// Palette bound ceil(log_base n) with base c/(c-1); at least 1 for n >= 1.
int cf_round_bound(std::size_t n, int c);
// Paper-facing bound ceil(log_{1+1/(6(k-1))} n) for the k-strong variant.
int k_strong_round_bound(std::size_t n, int k);

}  // namespace homcolor
