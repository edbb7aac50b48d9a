#include "sweep.hpp"

#include <algorithm>
#include <vector>

namespace homcolor {

namespace {

Int cpp_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
    Int hi = static_cast<std::uint64_t>(m >> 64);
    Int out = (hi << 64) + static_cast<std::uint64_t>(m);
    return neg ? -out : out;
}

__int128 i128_from_cpp(const Int& v) { return static_cast<__int128>(v); }

template <class T>
Int to_cpp(const T& v) {
    if constexpr (std::is_same_v<T, __int128>)
        return cpp_from_i128(v);
    else
        return v;
}

template <class T>
struct Frac {
    T num;
    T den;  // > 0
};

template <class T>
int frac_cmp(const Frac<T>& a, const Frac<T>& b) {
    T lhs = a.num * b.den, rhs = b.num * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// Extended value: finite fraction or +/- infinity.
template <class T>
struct Ext {
    int inf = 0;  // -1, 0, +1
    Frac<T> f{};
};

template <class T>
int ext_cmp(const Ext<T>& a, const Ext<T>& b) {
    if (a.inf != b.inf) return a.inf < b.inf ? -1 : 1;
    if (a.inf != 0) return 0;
    return frac_cmp(a.f, b.f);
}

template <class T>
struct LineData {
    std::array<T, 3> d;   // line direction
    std::array<T, 3> n;   // particular solution numerator
    T det;                // common denominator, > 0
    std::vector<T> beta;  // per facet: mu_k . d
    std::vector<T> cn;    // per facet: mu_k . n
};

template <class T>
struct EngineView final : SweepStateView {
    const LineData<T>* line = nullptr;
    const std::vector<std::vector<T>>* rhs = nullptr;
    Frac<T> s{};                    // representative parameter
    bool have_sample = true;        // false when positive_z unattainable

    std::optional<Vec3> sample() const override {
        if (!have_sample) return std::nullopt;
        Int den = to_cpp(line->det) * to_cpp(s.den);
        Vec3 u;
        Rat* out[3] = {&u.x, &u.y, &u.z};
        for (int c = 0; c < 3; ++c)
            *out[c] = make_rat(to_cpp(line->n[c]) * to_cpp(s.den) + to_cpp(s.num) * to_cpp(line->d[c]),
                               den);
        return u;
    }

    bool on_boundary(std::size_t r) const override {
        if (!have_sample) return false;
        // max_k (alpha_rk + s beta_k) == 0 with alpha = cn_k - rhs * det
        bool any_zero = false;
        for (std::size_t k = 0; k < line->beta.size(); ++k) {
            T alpha = line->cn[k] - (*rhs)[r][k] * line->det;
            T val = alpha * s.den + s.num * line->beta[k];
            if (val > 0) return false;
            if (val == 0) any_zero = true;
        }
        return any_zero;
    }
};

template <class T>
struct Event {
    Ext<T> at;
    bool is_close;
    std::uint32_t r;
};

// Picks a parameter strictly inside the open interval (lo, hi), nonempty.
template <class T>
Frac<T> inner_sample(const Ext<T>& lo, const Ext<T>& hi) {
    if (lo.inf < 0 && hi.inf > 0) return Frac<T>{T(0), T(1)};
    if (lo.inf < 0) return Frac<T>{hi.f.num - hi.f.den, hi.f.den};
    if (hi.inf > 0) return Frac<T>{lo.f.num + lo.f.den, lo.f.den};
    return Frac<T>{lo.f.num * hi.f.den + hi.f.num * lo.f.den, 2 * lo.f.den * hi.f.den};
}

template <class T>
void run_line(const std::vector<std::array<T, 3>>& mu, const std::vector<std::vector<T>>& rhs,
              bool positive_z, std::size_t a, std::size_t b, std::size_t fi, std::size_t fj,
              SweepClient& client) {
    const std::size_t n = rhs.size();
    const std::size_t F = mu.size();

    const auto& r1 = mu[fi];
    const auto& r2 = mu[fj];
    LineData<T> line;
    line.d = {r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
              r1[0] * r2[1] - r1[1] * r2[0]};
    if (line.d[0] == 0 && line.d[1] == 0 && line.d[2] == 0) return;
    line.det = line.d[0] * line.d[0] + line.d[1] * line.d[1] + line.d[2] * line.d[2];

    // Cramer on rows (r1, r2, d) with right side (rhs[a][fi], rhs[b][fj], 0).
    const T& g1 = rhs[a][fi];
    const T& g2 = rhs[b][fj];
    auto det2 = [](const T& p, const T& q, const T& r, const T& s) { return p * s - q * r; };
    for (int c = 0; c < 3; ++c) {
        int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        // Expand along the replaced column c; the third entry of the right
        // side is zero, so only two cofactors contribute.
        // Cyclic column order (c+1, c+2) keeps the cofactor parity uniform.
        T m1 = det2(r2[c1], r2[c2], line.d[c1], line.d[c2]);
        T m2 = det2(r1[c1], r1[c2], line.d[c1], line.d[c2]);
        line.n[c] = g1 * m1 - g2 * m2;
    }

    line.beta.resize(F);
    line.cn.resize(F);
    for (std::size_t k = 0; k < F; ++k) {
        line.beta[k] = mu[k][0] * line.d[0] + mu[k][1] * line.d[1] + mu[k][2] * line.d[2];
        line.cn[k] = mu[k][0] * line.n[0] + mu[k][1] * line.n[1] + mu[k][2] * line.n[2];
    }

    // Interval per point.
    std::vector<Event<T>> events;
    events.reserve(2 * n);
    std::vector<char> open_at_start(n, 0);
    std::size_t start_count = 0;
    for (std::uint32_t r = 0; r < n; ++r) {
        Ext<T> lo{-1, {}}, hi{+1, {}};
        bool dead = false;
        for (std::size_t k = 0; k < F && !dead; ++k) {
            T alpha = line.cn[k] - rhs[r][k] * line.det;
            const T& beta = line.beta[k];
            if (beta == 0) {
                if (alpha > 0) dead = true;
            } else if (beta > 0) {
                Ext<T> bound{0, Frac<T>{-alpha, beta}};
                if (ext_cmp(bound, hi) < 0) hi = bound;
            } else {
                Ext<T> bound{0, Frac<T>{alpha, -beta}};
                if (ext_cmp(bound, lo) > 0) lo = bound;
            }
        }
        if (dead || ext_cmp(lo, hi) > 0) continue;
        if (lo.inf < 0) {
            open_at_start[r] = 1;
            ++start_count;
        } else {
            events.push_back({lo, false, r});
        }
        if (hi.inf == 0) events.push_back({hi, true, r});
    }

    std::sort(events.begin(), events.end(), [](const Event<T>& x, const Event<T>& y) {
        int c = ext_cmp(x.at, y.at);
        if (c != 0) return c < 0;
        return x.is_close < y.is_close;  // opens first
    });

    // z > 0 restriction: z(s) = (n[2] + s d[2]) / det.
    // d[2] > 0: s > zcut; d[2] < 0: s < zcut; d[2] == 0: sign of n[2].
    Ext<T> zlo{-1, {}}, zhi{+1, {}};
    bool z_never = false;
    if (positive_z) {
        if (line.d[2] > 0)
            zlo = Ext<T>{0, Frac<T>{-line.n[2], line.d[2]}};
        else if (line.d[2] < 0)
            zhi = Ext<T>{0, Frac<T>{line.n[2], -line.d[2]}};
        else if (line.n[2] <= 0)
            z_never = true;
    }
    if (z_never) return;

    EngineView<T> view;
    view.line = &line;
    view.rhs = &rhs;

    for (std::uint32_t r = 0; r < n; ++r)
        if (open_at_start[r]) client.open(r);

    // Reports the interval state (lo, hi); open bounds. Returns early-stop.
    auto interval_state = [&](const Ext<T>& lo, const Ext<T>& hi) -> bool {
        if (ext_cmp(lo, hi) >= 0) return false;  // empty gap
        Ext<T> slo = (ext_cmp(lo, zlo) >= 0) ? lo : zlo;
        Ext<T> shi = (ext_cmp(hi, zhi) <= 0) ? hi : zhi;
        view.at_event = false;
        if (ext_cmp(slo, shi) >= 0) {
            if (positive_z) return false;  // no valid representative: skip
            view.have_sample = false;
        } else {
            view.have_sample = true;
            view.s = inner_sample<T>(slo, shi);
        }
        return client.state(view);
    };

    std::size_t i = 0;
    Ext<T> prev{-1, {}};
    if (start_count == 0 && events.empty()) return;
    while (i < events.size()) {
        Ext<T> at = events[i].at;
        if (interval_state(prev, at)) return;
        // opens at `at`
        while (i < events.size() && !events[i].is_close && ext_cmp(events[i].at, at) == 0)
            client.open(events[i++].r);
        // event-point state
        bool z_ok = !positive_z ||
                    (ext_cmp(Ext<T>{0, at.f}, zlo) > 0 && ext_cmp(Ext<T>{0, at.f}, zhi) < 0);
        if (z_ok) {
            view.at_event = true;
            view.have_sample = true;
            view.s = at.f;
            if (client.state(view)) return;
        }
        // closes at `at`
        while (i < events.size() && events[i].is_close && ext_cmp(events[i].at, at) == 0)
            client.close(events[i++].r);
        prev = at;
    }
    interval_state(prev, Ext<T>{+1, {}});
}

}  // namespace

void ConeSystem::finalize() {
    // Conservative magnitude analysis for the __int128 kernel. Follows the
    // operation chain of run_line with worst-case magnitudes.
    Int mf = 1, mr = 1;
    for (const auto& m : mu)
        for (const auto& v : m) mf = std::max(mf, Int(abs(v)));
    for (const auto& row : rhs)
        for (const auto& v : row) mr = std::max(mr, Int(abs(v)));
    Int d = 2 * mf * mf;
    Int det = 3 * d * d;
    Int cof = 2 * mf * d;
    Int nmax = 2 * mr * cof;
    Int alpha = 3 * mf * nmax + mr * det;
    Int beta = 3 * mf * d;
    Int smax_num = 2 * alpha * beta, smax_den = 2 * beta * beta;
    // on_boundary / interval compares: alpha * s.den + s.num * beta
    Int worst = alpha * smax_den + smax_num * beta;
    // sample numerators: n[c] * s.den + s.num * d[c]
    worst = std::max(worst, Int(nmax * smax_den + smax_num * d));
    worst = std::max(worst, Int(smax_num * smax_den));  // fraction comparisons
    Int limit = Int(1) << 126;
    int128_safe = worst < limit;

    if (int128_safe) {
        mu128.assign(mu.size(), {});
        for (std::size_t k = 0; k < mu.size(); ++k)
            for (int c = 0; c < 3; ++c) mu128[k][c] = i128_from_cpp(mu[k][c]);
        rhs128.assign(rhs.size(), {});
        for (std::size_t r = 0; r < rhs.size(); ++r) {
            rhs128[r].resize(rhs[r].size());
            for (std::size_t k = 0; k < rhs[r].size(); ++k)
                rhs128[r][k] = i128_from_cpp(rhs[r][k]);
        }
    }
}

void sweep_pair_line(const ConeSystem& sys, std::size_t a, std::size_t b, std::size_t fi,
                     std::size_t fj, SweepClient& client) {
    if (sys.int128_safe)
        run_line<__int128>(sys.mu128, sys.rhs128, sys.positive_z, a, b, fi, fj, client);
    else
        run_line<Int>(sys.mu, sys.rhs, sys.positive_z, a, b, fi, fj, client);
}

}  // namespace homcolor
