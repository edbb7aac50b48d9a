#include "cf.hpp"

#include <algorithm>
#include <cmath>

#include "rational.hpp"

namespace homcolor {

namespace {

CFResult run_rounds(const CFInstance& instance) {
    const std::size_t n = instance.labels.size();
    if (n == 0) throw validation_error("conflict-free coloring needs a nonempty instance");
    const int c = instance.palette_bound;
    if (c < 2) throw validation_error("callback palette bound must be at least 2");

    CFResult result;
    result.coloring.color.assign(n, -1);

    std::vector<std::size_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

    int round = 0;
    while (!remaining.empty()) {
        Coloring sub = instance.polychromatic(remaining);
        if (sub.color.size() != remaining.size())
            throw internal_fault("polychromatic callback returned a partial coloring");
        if (sub.palette > c)
            throw internal_fault("polychromatic callback exceeded its palette bound");

        // Largest class; ties to the smallest color index.
        std::vector<std::size_t> class_size(std::max(sub.palette, 1), 0);
        for (int col : sub.color) ++class_size[col];
        std::size_t best = 0;
        for (std::size_t col = 1; col < class_size.size(); ++col)
            if (class_size[col] > class_size[best]) best = col;

        // The largest of <= c classes holds at least a 1/c fraction.
        if (class_size[best] * static_cast<std::size_t>(c) < remaining.size())
            throw internal_fault("largest color class below the guaranteed 1/c fraction");

        CFRound audit;
        audit.before = remaining.size();
        audit.removed = class_size[best];
        audit.callback_palette = sub.palette;
        result.audit.push_back(audit);

        std::vector<std::size_t> next;
        next.reserve(remaining.size() - class_size[best]);
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (sub.color[i] == static_cast<int>(best))
                result.coloring.color[remaining[i]] = round;
            else
                next.push_back(remaining[i]);
        }
        remaining = std::move(next);
        ++round;
    }
    result.coloring.palette = round;
    return result;
}

}  // namespace

int cf_round_bound(std::size_t n, int c) {
    if (n <= 1) return 1;
    double base = static_cast<double>(c) / (c - 1);
    return static_cast<int>(std::ceil(std::log(static_cast<double>(n)) / std::log(base) - 1e-9));
}

int k_strong_round_bound(std::size_t n, int k) {
    if (n <= 1) return 1;
    double base = 1.0 + 1.0 / (6.0 * (k - 1));
    return static_cast<int>(std::ceil(std::log(static_cast<double>(n)) / std::log(base) - 1e-9));
}

CFResult cf_color(const CFInstance& instance) {
    CFResult result = run_rounds(instance);
    // For c >= 3 the base c/(c-1) has no integral powers, so the ceiling of
    // the logarithm bounds the exact worst-case round count.
    if (instance.palette_bound >= 3 &&
        result.coloring.palette > cf_round_bound(instance.labels.size(), instance.palette_bound))
        throw internal_fault("conflict-free rounds exceeded the logarithmic bound");
    return result;
}

CFResult k_strong_cf_color(const CFInstance& instance, int k) {
    if (k < 1) throw validation_error("k must be at least 1");
    CFResult result = run_rounds(instance);
    if (instance.palette_bound >= 3 &&
        result.coloring.palette > cf_round_bound(instance.labels.size(), instance.palette_bound))
        throw internal_fault("k-strong rounds exceeded the logarithmic bound");
    return result;
}

CFVerifyReport verify_cf(const CFInstance& instance, const Coloring& coloring, int k) {
    CFVerifyReport report;
    const std::size_t n = instance.labels.size();
    if (coloring.color.size() != n) throw validation_error("coloring must cover every vertex");

    std::vector<int> times_seen(std::max(coloring.palette, 1), 0);
    for (const Mask& e : instance.hyperedges()) {
        std::fill(times_seen.begin(), times_seen.end(), 0);
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i / 64] >> (i % 64) & 1) {
                ++size;
                ++times_seen[coloring.color[i]];
            }
        if (size == 0) continue;
        std::size_t unique = 0;
        for (int t : times_seen)
            if (t == 1) ++unique;
        std::size_t need = std::min<std::size_t>(size, static_cast<std::size_t>(k));
        if (unique < need) {
            report.pass = false;
            report.violating_edge = e;
            report.message = "hyperedge of size " + std::to_string(size) + " has " +
                             std::to_string(unique) + " uniquely colored vertices, needs " +
                             std::to_string(need) + ":";
            for (std::size_t i = 0; i < n; ++i)
                if (e[i / 64] >> (i % 64) & 1) report.message += " " + instance.labels[i];
            return report;
        }
    }
    return report;
}

}  // namespace homcolor
