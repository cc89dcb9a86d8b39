#include "zitterlab/sequences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace zitterlab {

namespace {

void validate_moves(std::string_view seq) {
  for (char c : seq) {
    if (c != 'P' && c != 'Q') {
      throw std::invalid_argument("move sequence may contain only P and Q");
    }
  }
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step; guard the multiply.
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw std::overflow_error("binomial coefficient overflows 64 bits");
    }
    r = r * num / i;
  }
  return r;
}

int count_corners(std::string_view seq) {
  validate_moves(seq);
  int corners = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] != seq[i + 1]) ++corners;
  }
  return corners;
}

LatticePath seq_to_path(std::string_view seq, LatticePoint origin) {
  validate_moves(seq);
  LatticePath path;
  path.points.reserve(seq.size() + 1);
  path.points.push_back(origin);
  LatticePoint at = origin;
  for (char c : seq) {
    at.x += (c == 'P') ? 1 : -1;
    at.t += 1;
    path.points.push_back(at);
  }
  return path;
}

namespace {

void check_sequence_cap(unsigned n_p, unsigned n_q, std::size_t cap) {
  const std::size_t total = std::size_t{n_p} + n_q;
  if (total > cap) {
    throw CapExceeded("sequence length " + std::to_string(total) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

void for_each_sequence(unsigned n_p, unsigned n_q,
                       const std::function<void(const std::string&)>& visit,
                       std::size_t cap) {
  check_sequence_cap(n_p, n_q, cap);
  std::string seq(n_p, 'P');
  seq.append(n_q, 'Q');
  do {
    visit(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

std::vector<std::string> enumerate_sequences(unsigned n_p, unsigned n_q,
                                             std::size_t cap) {
  check_sequence_cap(n_p, n_q, cap);
  std::vector<std::string> out;
  out.reserve(binomial(n_p + n_q, n_p));
  for_each_sequence(
      n_p, n_q, [&](const std::string& s) { out.push_back(s); }, cap);
  return out;
}

FreeParticleFixture build_free_particle_poset(std::string_view seq) {
  validate_moves(seq);
  if (seq.empty()) {
    throw std::invalid_argument("free-particle sequence must be nonempty");
  }
  const std::size_t n = seq.size();

  FreeParticleFixture fx;
  Poset& poset = fx.poset;

  // Observer ticks 0..n+1 and particle events 1..n.
  std::vector<EventId> p_tick(n + 2), q_tick(n + 2), pi(n + 1);
  for (std::size_t t = 0; t <= n + 1; ++t) {
    p_tick[t] = poset.add_event("P" + std::to_string(t));
  }
  for (std::size_t t = 0; t <= n + 1; ++t) {
    q_tick[t] = poset.add_event("Q" + std::to_string(t));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    pi[k] = poset.add_event("pi" + std::to_string(k));
  }

  for (std::size_t t = 0; t <= n; ++t) {
    poset.add_relation(p_tick[t], p_tick[t + 1]);
    poset.add_relation(q_tick[t], q_tick[t + 1]);
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    poset.add_relation(pi[k], pi[k + 1]);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    // Detection: move k influences the tick-k event of the named observer.
    const bool to_p = seq[k - 1] == 'P';
    poset.add_relation(pi[k], to_p ? p_tick[k] : q_tick[k]);
    if (to_p) {
      fx.detections_p.push_back(p_tick[k]);
    } else {
      fx.detections_q.push_back(q_tick[k]);
    }
    // Both observers' previous ticks cover the step, which keeps the
    // backward projections of the particle tracking its history.
    poset.add_relation(p_tick[k - 1], pi[k]);
    poset.add_relation(q_tick[k - 1], pi[k]);
  }
  // Joint closing detection: the final particle event is seen by both
  // chains one tick after the last move.
  poset.add_relation(pi[n], p_tick[n + 1]);
  poset.add_relation(pi[n], q_tick[n + 1]);

  std::vector<double> tick_val(n + 2);
  for (std::size_t t = 0; t <= n + 1; ++t) tick_val[t] = double(t);
  fx.observer_p = Chain::create(poset, p_tick, tick_val, "P");
  fx.observer_q = Chain::create(poset, q_tick, tick_val, "Q");

  std::vector<EventId> particle(pi.begin() + 1, pi.end());
  std::vector<double> particle_val(n);
  for (std::size_t k = 0; k < n; ++k) particle_val[k] = double(k + 1);
  fx.particle = Chain::create(poset, particle, particle_val, "Pi");
  return fx;
}

std::vector<std::string> sequences_consistent_with(
    const std::vector<EventId>& detections_p,
    const std::vector<EventId>& detections_q, std::size_t cap) {
  return enumerate_sequences(static_cast<unsigned>(detections_p.size()),
                             static_cast<unsigned>(detections_q.size()), cap);
}

}  // namespace zitterlab
