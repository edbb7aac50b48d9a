#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "rational.hpp"

namespace homcolor {

// A cone system captures the parameter-space view shared by the primal and
// dual witness searches. Each of n points induces F halfspace constraints
// on an unknown u in R^3 (homothet parameters (t, lambda), or a cone apex):
//
//     mu_k . u <= rhs[point][k]      for k = 0..F-1
//
// A point is covered by u when all F constraints hold. Witness candidates
// live on the lines where one point is tight on facet i and another on
// facet j; along such a line every point is covered on a closed interval,
// so the distinct covered sets are enumerated exactly by an interval sweep.
struct ConeSystem {
    std::vector<std::array<Int, 3>> mu;   // F facet functionals
    std::vector<std::vector<Int>> rhs;    // n x F offsets
    bool positive_z = false;              // skip states with u.z <= 0

    std::size_t points() const { return rhs.size(); }
    std::size_t facets() const { return mu.size(); }

    // Decides whether the fast fixed-width integer kernel is safe for this
    // system's magnitudes and materializes the mirror if so; call after
    // filling mu/rhs.
    void finalize();
    bool int128_safe = false;
    std::vector<std::array<__int128, 3>> mu128;
    std::vector<std::vector<__int128>> rhs128;
};

struct SweepStateView {
    bool at_event = false;
    // Exact parameter of a representative of this state, or nullopt when
    // positive_z is requested and the state has no z > 0 representative.
    virtual std::optional<Vec3> sample() const = 0;
    // Whether point r sits on the cone boundary at the representative.
    virtual bool on_boundary(std::size_t r) const = 0;

  protected:
    ~SweepStateView() = default;
};

// Client interface for one line sweep. open/close arrive in parameter
// order; state() is called for every maximal uniform interval and for
// every event point, after the opens and before the closes at that point.
class SweepClient {
  public:
    virtual ~SweepClient() = default;
    virtual void open(std::size_t r) = 0;
    virtual void close(std::size_t r) = 0;
    // Return true to stop sweeping the current line early.
    virtual bool state(const SweepStateView& view) = 0;
};

// Sweeps the contact line "point a tight on facet fi, point b tight on
// facet fj". No-op when the two contact constraints are not independent.
void sweep_pair_line(const ConeSystem& sys, std::size_t a, std::size_t b, std::size_t fi,
                     std::size_t fj, SweepClient& client);

}  // namespace homcolor
