#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "zitterlab/errors.hpp"
#include "zitterlab/poset.hpp"

namespace zitterlab {

// Interaction sequences are strings over {P, Q}: which observer the particle
// influenced at each step. P-moves step to the upper-right of the space-time
// diagram, Q-moves to the upper-left, one lattice unit per tick.

inline constexpr std::size_t kDefaultEnumerationCap = 24;

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t t = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePath {
  std::vector<LatticePoint> points;
};

/// Exact binomial coefficient; throws std::overflow_error if it cannot be
/// represented in 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

/// Number of adjacent unequal pairs (reversals / zig-zags / corners).
int count_corners(std::string_view seq);

LatticePath seq_to_path(std::string_view seq, LatticePoint origin = {});

/// Visits every string with exactly n_p P's and n_q Q's in lexicographic
/// order without materializing the whole set. Throws CapExceeded when
/// n_p + n_q > cap.
void for_each_sequence(unsigned n_p, unsigned n_q,
                       const std::function<void(const std::string&)>& visit,
                       std::size_t cap = kDefaultEnumerationCap);

std::vector<std::string> enumerate_sequences(
    unsigned n_p, unsigned n_q, std::size_t cap = kDefaultEnumerationCap);

/// Poset realization of a free particle executing `seq` between two observer
/// chains. Observer chains carry one event per tick 0..n+1 with the tick as
/// valuation; move k influences the corresponding observer's tick-k event
/// (the detection). Each step's events are also covered by the previous
/// observer ticks, and both observers share a closing detection of the final
/// particle event, which bounds the coordinated segment so that every
/// particle event is situated between the chains.
struct FreeParticleFixture {
  Poset poset;
  Chain observer_p;
  Chain observer_q;
  Chain particle;
  std::vector<EventId> detections_p;  // ascending tick order
  std::vector<EventId> detections_q;
};

FreeParticleFixture build_free_particle_poset(std::string_view seq);

/// All interaction sequences consistent with the given detection series.
/// Only the counts carry information: the per-chain orders say nothing about
/// cross-chain order.
std::vector<std::string> sequences_consistent_with(
    const std::vector<EventId>& detections_p,
    const std::vector<EventId>& detections_q,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace zitterlab
