#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zitterlab/errors.hpp"
#include "zitterlab/interval.hpp"

namespace zitterlab {

struct EventId {
  std::int32_t value = -1;
  friend bool operator==(const EventId&, const EventId&) = default;
  friend auto operator<=>(const EventId&, const EventId&) = default;
};

/// Finite set of events with a reflexive, antisymmetric, transitive order.
/// The full closure is stored as a boolean matrix, which keeps comparability
/// queries O(1); the library targets desk-scale posets, not large causal sets.
///
/// A poset is immutable once built: all const queries are pure and safe to
/// call concurrently. Mutation requires exclusive access.
class Poset {
 public:
  EventId add_event(std::string label = {});

  /// Declares a <= b and re-closes the order transitively.
  /// Throws CycleError if b < a already holds.
  void add_relation(EventId a, EventId b);

  bool leq(EventId a, EventId b) const;
  bool comparable(EventId a, EventId b) const;

  std::size_t size() const { return labels_.size(); }
  const std::string& label(EventId e) const;

  /// Relations inserted via add_relation, in insertion order (the generator
  /// set, not the closure).
  const std::vector<std::pair<EventId, EventId>>& relations() const {
    return relations_;
  }

 private:
  std::size_t index(EventId e) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> closure_;  // closure_[a][b] == (a <= b)
  std::vector<std::pair<EventId, EventId>> relations_;
};

/// Totally ordered subset of a poset carrying a monotone real valuation.
/// Elements are kept in ascending order.
class Chain {
 public:
  Chain() = default;  // empty chain
  static Chain create(const Poset& poset, std::vector<EventId> elements,
                      std::vector<double> valuation, std::string name = {});

  std::size_t size() const { return elements_.size(); }
  EventId element(std::size_t i) const { return elements_.at(i); }
  double valuation_at(std::size_t i) const { return valuation_.at(i); }
  double valuation_of(EventId e) const;
  std::optional<std::size_t> index_of(EventId e) const;
  bool contains(EventId e) const { return index_of(e).has_value(); }
  const std::vector<EventId>& elements() const { return elements_; }
  const std::vector<double>& valuations() const { return valuation_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::vector<EventId> elements_;
  std::vector<double> valuation_;
  std::unordered_map<std::int32_t, std::size_t> index_;
};

/// Least chain element that includes x, i.e. min { e on chain : x <= e }.
/// Absence is a value (the dots of a quantified-poset diagram), not an error.
std::optional<EventId> forward_project(const Poset& poset, const Chain& chain,
                                       EventId x);

/// Greatest chain element included by x, i.e. max { e on chain : e <= x }.
std::optional<EventId> backward_project(const Poset& poset, const Chain& chain,
                                        EventId x);

/// Valuations of the two projections of x; either may be absent.
struct ElementQuant {
  std::optional<double> forward;   // v(Px)
  std::optional<double> backward;  // v(P̄x)
};

ElementQuant quantify_element(const Poset& poset, const Chain& chain,
                              EventId x);

/// True iff Qx = Q(P̄x) and Px = P(Q̄x). Throws ProjectionUndefined when any
/// projection the condition needs does not exist.
bool check_betweenness(const Poset& poset, const Chain& chain_p,
                       const Chain& chain_q, EventId x);

/// Interval pair (v_P(Py) − v_P(Px), v_Q(Qy) − v_Q(Qx)) for two events
/// situated between the chains. Throws NotBetween / ProjectionUndefined.
IntervalPair quantify_interval(const Poset& poset, const Chain& chain_p,
                               const Chain& chain_q, EventId x, EventId y);

}  // namespace zitterlab
