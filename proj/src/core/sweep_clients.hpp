#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sweep.hpp"

namespace homcolor {

// Sweep client shared by the primal and dual builders: finds a state whose
// covered set is exactly the swept pair, and records covered sets of size
// >= 4 with more than three boundary points for the lexicographic tie rule.
struct PairBuildClient final : SweepClient {
    std::size_t a = 0, b = 0;
    const std::vector<std::size_t>* rank = nullptr;  // tie-rule vertex order

    std::vector<char> active;
    std::size_t count = 0;
    bool a_active = false, b_active = false;

    std::optional<Vec3> pair_witness;  // raw parameter-space sample
    struct RuleHit {
        std::array<std::size_t, 3> tri;       // three rank-smallest covered
        Vec3 sample;                          // raw parameter-space sample
        std::vector<std::size_t> covered;
    };
    std::vector<RuleHit> rule_hits;

    void begin(std::size_t pa, std::size_t pb, std::size_t n) {
        a = pa;
        b = pb;
        active.assign(n, 0);
        count = 0;
        a_active = b_active = false;
    }

    void open(std::size_t r) override {
        active[r] = 1;
        ++count;
        if (r == a) a_active = true;
        if (r == b) b_active = true;
    }
    void close(std::size_t r) override {
        active[r] = 0;
        --count;
        if (r == a) a_active = false;
        if (r == b) b_active = false;
    }

    bool state(const SweepStateView& view) override {
        if (!pair_witness && count == 2 && a_active && b_active) {
            if (auto u = view.sample()) pair_witness = *u;
        }
        if (count >= 4) {
            std::size_t boundary = 0;
            for (std::size_t r = 0; r < active.size() && boundary <= 3; ++r)
                if (active[r] && view.on_boundary(r)) ++boundary;
            if (boundary > 3) {
                RuleHit hit;
                for (std::size_t r = 0; r < active.size(); ++r)
                    if (active[r]) hit.covered.push_back(r);
                hit.tri = {SIZE_MAX, SIZE_MAX, SIZE_MAX};
                auto better = [&](std::size_t x, std::size_t y) {
                    return y == SIZE_MAX || (*rank)[x] < (*rank)[y];
                };
                for (std::size_t r : hit.covered) {
                    if (better(r, hit.tri[0])) {
                        hit.tri[2] = hit.tri[1];
                        hit.tri[1] = hit.tri[0];
                        hit.tri[0] = r;
                    } else if (better(r, hit.tri[1])) {
                        hit.tri[2] = hit.tri[1];
                        hit.tri[1] = r;
                    } else if (better(r, hit.tri[2])) {
                        hit.tri[2] = r;
                    }
                }
                if (auto u = view.sample()) {
                    hit.sample = *u;
                    rule_hits.push_back(std::move(hit));
                }
            }
        }
        return false;
    }
};

template <class Client>
void sweep_pair_all_lines(const ConeSystem& sys, std::size_t a, std::size_t b, Client& client) {
    const std::size_t F = sys.facets();
    for (std::size_t i = 0; i < F; ++i)
        for (std::size_t j = 0; j < F; ++j)
            if (i != j) sweep_pair_line(sys, a, b, i, j, client);
}

inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out.push_back({a, b});
    return out;
}

}  // namespace homcolor
