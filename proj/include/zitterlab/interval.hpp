#pragma once

#include <algorithm>
#include <cmath>

#include "zitterlab/errors.hpp"

namespace zitterlab {

/// Lengths of a poset interval projected onto two coordinated chains.
struct IntervalPair {
  double dp = 0.0;
  double dq = 0.0;
  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

/// The same interval in the emergent (t, x) variables.
struct SpacetimeInterval {
  double dt = 0.0;
  double dx = 0.0;
  friend bool operator==(const SpacetimeInterval&,
                         const SpacetimeInterval&) = default;
};

enum class IntervalClass { ChainLike, AntichainLike, ProjectionLike };

inline double interval_scalar(IntervalPair p) { return p.dp * p.dq; }

// Integer-tick valuations make the scalar exact, so the projection-like test
// is exact there; for real valuations the zero band scales with the pair.
inline IntervalClass classify_interval(IntervalPair p) {
  const double scalar = interval_scalar(p);
  const double tol =
      1e-12 * std::max({1.0, p.dp * p.dp, p.dq * p.dq});
  if (scalar > tol) return IntervalClass::ChainLike;
  if (scalar < -tol) return IntervalClass::AntichainLike;
  return IntervalClass::ProjectionLike;
}

inline const char* to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::ChainLike:
      return "ChainLike";
    case IntervalClass::AntichainLike:
      return "AntichainLike";
    case IntervalClass::ProjectionLike:
      return "ProjectionLike";
  }
  return "?";
}

inline SpacetimeInterval to_spacetime(IntervalPair p) {
  return {(p.dp + p.dq) / 2.0, (p.dp - p.dq) / 2.0};
}

inline IntervalPair from_spacetime(SpacetimeInterval s) {
  return {s.dt + s.dx, s.dt - s.dx};
}

// Poset analogue of speed, dx/dt.
inline double beta(IntervalPair p) {
  const double dur = p.dp + p.dq;
  if (dur == 0.0) {
    throw ZeroDuration("beta undefined: dp + dq = 0");
  }
  return (p.dp - p.dq) / dur;
}

}  // namespace zitterlab
