#include "zitterlab/poset.hpp"

#include <limits>
#include <stdexcept>

namespace zitterlab {

EventId Poset::add_event(std::string label) {
  const auto n = labels_.size();
  if (n >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw std::length_error("poset too large");
  }
  labels_.push_back(std::move(label));
  for (auto& row : closure_) row.push_back(false);
  closure_.emplace_back(n + 1, false);
  closure_[n][n] = true;  // reflexivity
  return EventId{static_cast<std::int32_t>(n)};
}

std::size_t Poset::index(EventId e) const {
  if (e.value < 0 || static_cast<std::size_t>(e.value) >= labels_.size()) {
    throw std::out_of_range("event id not in poset");
  }
  return static_cast<std::size_t>(e.value);
}

const std::string& Poset::label(EventId e) const { return labels_[index(e)]; }

bool Poset::leq(EventId a, EventId b) const {
  return closure_[index(a)][index(b)];
}

bool Poset::comparable(EventId a, EventId b) const {
  return leq(a, b) || leq(b, a);
}

void Poset::add_relation(EventId a, EventId b) {
  const std::size_t ia = index(a);
  const std::size_t ib = index(b);
  if (ia != ib && closure_[ib][ia]) {
    throw CycleError("adding " + labels_[ia] + " <= " + labels_[ib] +
                     " would create a cycle");
  }
  relations_.emplace_back(a, b);
  if (closure_[ia][ib]) return;  // already implied
  // Close transitively: everything below a is now below everything above b.
  const std::size_t n = labels_.size();
  std::vector<std::size_t> ups;
  for (std::size_t v = 0; v < n; ++v) {
    if (closure_[ib][v]) ups.push_back(v);
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!closure_[u][ia]) continue;
    for (std::size_t v : ups) closure_[u][v] = true;
  }
}

Chain Chain::create(const Poset& poset, std::vector<EventId> elements,
                    std::vector<double> valuation, std::string name) {
  if (elements.size() != valuation.size()) {
    throw std::invalid_argument("chain valuation size mismatch");
  }
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    if (elements[i] == elements[i + 1] ||
        !poset.leq(elements[i], elements[i + 1])) {
      throw std::invalid_argument("chain elements are not totally ordered");
    }
    if (valuation[i] > valuation[i + 1]) {
      throw std::invalid_argument("chain valuation is not monotone");
    }
  }
  Chain c;
  c.name_ = std::move(name);
  c.elements_ = std::move(elements);
  c.valuation_ = std::move(valuation);
  for (std::size_t i = 0; i < c.elements_.size(); ++i) {
    if (!c.index_.emplace(c.elements_[i].value, i).second) {
      throw std::invalid_argument("duplicate element on chain");
    }
  }
  return c;
}

std::optional<std::size_t> Chain::index_of(EventId e) const {
  auto it = index_.find(e.value);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Chain::valuation_of(EventId e) const {
  auto i = index_of(e);
  if (!i) throw std::out_of_range("event not on chain");
  return valuation_[*i];
}

std::optional<EventId> forward_project(const Poset& poset, const Chain& chain,
                                       EventId x) {
  // The elements including x form an up-set of the chain, so the first hit
  // in ascending order is the least one.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (poset.leq(x, chain.element(i))) return chain.element(i);
  }
  return std::nullopt;
}

std::optional<EventId> backward_project(const Poset& poset, const Chain& chain,
                                        EventId x) {
  for (std::size_t i = chain.size(); i-- > 0;) {
    if (poset.leq(chain.element(i), x)) return chain.element(i);
  }
  return std::nullopt;
}

ElementQuant quantify_element(const Poset& poset, const Chain& chain,
                              EventId x) {
  ElementQuant q;
  if (auto f = forward_project(poset, chain, x)) {
    q.forward = chain.valuation_of(*f);
  }
  if (auto b = backward_project(poset, chain, x)) {
    q.backward = chain.valuation_of(*b);
  }
  return q;
}

namespace {

EventId require(std::optional<EventId> e, const char* what) {
  if (!e) throw ProjectionUndefined(what);
  return *e;
}

}  // namespace

bool check_betweenness(const Poset& poset, const Chain& chain_p,
                       const Chain& chain_q, EventId x) {
  const EventId qx =
      require(forward_project(poset, chain_q, x), "Qx undefined");
  const EventId px =
      require(forward_project(poset, chain_p, x), "Px undefined");
  const EventId pbx =
      require(backward_project(poset, chain_p, x), "P̄x undefined");
  const EventId qbx =
      require(backward_project(poset, chain_q, x), "Q̄x undefined");
  const EventId q_of_pbx =
      require(forward_project(poset, chain_q, pbx), "Q(P̄x) undefined");
  const EventId p_of_qbx =
      require(forward_project(poset, chain_p, qbx), "P(Q̄x) undefined");
  return qx == q_of_pbx && px == p_of_qbx;
}

IntervalPair quantify_interval(const Poset& poset, const Chain& chain_p,
                               const Chain& chain_q, EventId x, EventId y) {
  if (!check_betweenness(poset, chain_p, chain_q, x)) {
    throw NotBetween("interval endpoint x is not between the chains");
  }
  if (!check_betweenness(poset, chain_p, chain_q, y)) {
    throw NotBetween("interval endpoint y is not between the chains");
  }
  // Betweenness implies all four forward projections exist.
  const EventId px = *forward_project(poset, chain_p, x);
  const EventId py = *forward_project(poset, chain_p, y);
  const EventId qx = *forward_project(poset, chain_q, x);
  const EventId qy = *forward_project(poset, chain_q, y);
  return {chain_p.valuation_of(py) - chain_p.valuation_of(px),
          chain_q.valuation_of(qy) - chain_q.valuation_of(qx)};
}

}  // namespace zitterlab
