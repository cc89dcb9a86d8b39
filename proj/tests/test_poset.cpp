#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "zitterlab/poset.hpp"

using namespace zitterlab;

namespace {

// Exhaustive projection oracle: no ordering assumptions about the chain,
// just min/max valuation over all comparable elements.
std::optional<EventId> oracle_forward(const Poset& p, const Chain& c,
                                      EventId x) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (p.leq(x, c.element(i)) && (!best || i < *best)) best = i;
  }
  if (!best) return std::nullopt;
  return c.element(*best);
}

std::optional<EventId> oracle_backward(const Poset& p, const Chain& c,
                                       EventId x) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (p.leq(c.element(i), x) && (!best || i > *best)) best = i;
  }
  if (!best) return std::nullopt;
  return c.element(*best);
}

// Two observer chains exchanging a signal every tick; every interior tick of
// either chain is situated between them.
struct Ladder {
  Poset poset;
  std::vector<EventId> p, q;
  Chain chain_p, chain_q;
};

Ladder make_ladder(std::size_t ticks) {
  Ladder l;
  std::vector<double> val;
  for (std::size_t t = 0; t < ticks; ++t) {
    l.p.push_back(l.poset.add_event("p" + std::to_string(t)));
    l.q.push_back(l.poset.add_event("q" + std::to_string(t)));
    val.push_back(double(t));
  }
  for (std::size_t t = 0; t + 1 < ticks; ++t) {
    l.poset.add_relation(l.p[t], l.p[t + 1]);
    l.poset.add_relation(l.q[t], l.q[t + 1]);
    l.poset.add_relation(l.p[t], l.q[t + 1]);
    l.poset.add_relation(l.q[t], l.p[t + 1]);
  }
  l.chain_p = Chain::create(l.poset, l.p, val, "P");
  l.chain_q = Chain::create(l.poset, l.q, val, "Q");
  return l;
}

}  // namespace

TEST_CASE("add_event starts reflexive and incomparable") {
  Poset poset;
  const EventId x = poset.add_event("x");
  CHECK(poset.size() == 1);
  CHECK(poset.leq(x, x));

  const EventId y = poset.add_event("y");
  CHECK_FALSE(poset.leq(x, y));
  CHECK_FALSE(poset.leq(y, x));

  poset.add_relation(x, y);
  const EventId z = poset.add_event("z");
  CHECK_FALSE(poset.comparable(x, z));
  CHECK_FALSE(poset.comparable(y, z));
}

TEST_CASE("add_relation closes transitively and rejects cycles") {
  Poset poset;
  const EventId x = poset.add_event("x");
  const EventId y = poset.add_event("y");
  const EventId z = poset.add_event("z");
  poset.add_relation(x, y);
  poset.add_relation(y, z);
  CHECK(poset.leq(x, z));
  CHECK_THROWS_AS(poset.add_relation(y, x), CycleError);
  CHECK_THROWS_AS(poset.add_relation(z, x), CycleError);
  // a <= a is harmless
  CHECK_NOTHROW(poset.add_relation(x, x));

  Poset chain3;
  const EventId p1 = chain3.add_event("p1");
  const EventId p2 = chain3.add_event("p2");
  const EventId p3 = chain3.add_event("p3");
  chain3.add_relation(p1, p2);
  chain3.add_relation(p2, p3);
  CHECK(chain3.leq(p1, p3));
}

TEST_CASE("order closure is transitive and antisymmetric on random posets") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Poset poset;
    const int n = 30;
    std::vector<EventId> ev;
    for (int i = 0; i < n; ++i) ev.push_back(poset.add_event());
    // relations only from lower to higher index stay acyclic
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < 2 * n; ++e) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      poset.add_relation(ev[a], ev[b]);
    }
    for (int a = 0; a < n; ++a) {
      CHECK(poset.leq(ev[a], ev[a]));
      for (int b = 0; b < n; ++b) {
        if (a != b && poset.leq(ev[a], ev[b])) {
          CHECK_FALSE(poset.leq(ev[b], ev[a]));
        }
        for (int c = 0; c < n; ++c) {
          if (poset.leq(ev[a], ev[b]) && poset.leq(ev[b], ev[c])) {
            CHECK(poset.leq(ev[a], ev[c]));
          }
        }
      }
    }
  }
}

TEST_CASE("chain construction validates order, valuation and duplicates") {
  Poset poset;
  const EventId a = poset.add_event("a");
  const EventId b = poset.add_event("b");
  const EventId c = poset.add_event("c");
  poset.add_relation(a, b);

  CHECK_NOTHROW(Chain::create(poset, {a, b}, {0, 1}));
  CHECK_THROWS_AS(Chain::create(poset, {a, c}, {0, 1}),
                  std::invalid_argument);  // incomparable
  CHECK_THROWS_AS(Chain::create(poset, {a, b}, {1, 0}),
                  std::invalid_argument);  // valuation not monotone
  CHECK_THROWS_AS(Chain::create(poset, {a, a}, {0, 0}),
                  std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Chain::create(poset, {a, b}, {0}),
                  std::invalid_argument);  // size mismatch
}

TEST_CASE("projections onto a simple chain") {
  Poset poset;
  std::vector<EventId> p;
  std::vector<double> val;
  for (int i = 1; i <= 3; ++i) {
    p.push_back(poset.add_event("p" + std::to_string(i)));
    val.push_back(double(i));
  }
  poset.add_relation(p[0], p[1]);
  poset.add_relation(p[1], p[2]);
  const Chain chain = Chain::create(poset, p, val, "P");

  const EventId below = poset.add_event("below");
  poset.add_relation(below, p[0]);
  const EventId above = poset.add_event("above");
  poset.add_relation(p[2], above);
  const EventId lone = poset.add_event("lone");

  CHECK(forward_project(poset, chain, below) == p[0]);   // chain minimum
  CHECK(forward_project(poset, chain, above) == std::nullopt);
  CHECK(forward_project(poset, chain, p[1]) == p[1]);

  CHECK(backward_project(poset, chain, above) == p[2]);  // chain maximum
  CHECK(backward_project(poset, chain, below) == std::nullopt);
  CHECK(backward_project(poset, chain, p[1]) == p[1]);

  CHECK(forward_project(poset, chain, lone) == std::nullopt);
  CHECK(backward_project(poset, chain, lone) == std::nullopt);
}

TEST_CASE("quantify_element pairs the projection valuations") {
  Poset poset;
  std::vector<EventId> p;
  std::vector<double> val;
  for (int i = 1; i <= 5; ++i) {
    p.push_back(poset.add_event("p" + std::to_string(i)));
    val.push_back(double(i));
  }
  for (int i = 0; i < 4; ++i) poset.add_relation(p[i], p[i + 1]);
  const Chain chain = Chain::create(poset, p, val, "P");

  // on-chain element quantifies as (v, v)
  const ElementQuant on_chain = quantify_element(poset, chain, p[2]);
  CHECK(on_chain.forward == 3.0);
  CHECK(on_chain.backward == 3.0);

  // 6-element fixture: x sits above p2 and below p5 only
  const EventId x = poset.add_event("x");
  poset.add_relation(p[1], x);
  poset.add_relation(x, p[4]);
  const ElementQuant q = quantify_element(poset, chain, x);
  CHECK(q.forward == 5.0);
  CHECK(q.backward == 2.0);

  const EventId lone = poset.add_event("lone");
  const ElementQuant absent = quantify_element(poset, chain, lone);
  CHECK_FALSE(absent.forward.has_value());
  CHECK_FALSE(absent.backward.has_value());
}

TEST_CASE("projection monotonicity on random layered posets") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Poset poset;
    const int n = 40;
    std::vector<EventId> ev;
    for (int i = 0; i < n; ++i) ev.push_back(poset.add_event());
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < 3 * n; ++e) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      poset.add_relation(ev[a], ev[b]);
    }
    // grow a chain greedily from a random start
    std::vector<EventId> chain_elems{ev[pick(rng)]};
    for (int i = 0; i < n; ++i) {
      if (poset.leq(chain_elems.back(), ev[i]) && chain_elems.back() != ev[i]) {
        chain_elems.push_back(ev[i]);
      }
    }
    std::vector<double> val(chain_elems.size());
    for (std::size_t i = 0; i < val.size(); ++i) val[i] = double(i);
    const Chain chain = Chain::create(poset, chain_elems, val);

    for (int a = 0; a < n; ++a) {
      CHECK(forward_project(poset, chain, ev[a]) ==
            oracle_forward(poset, chain, ev[a]));
      CHECK(backward_project(poset, chain, ev[a]) ==
            oracle_backward(poset, chain, ev[a]));
      for (int b = 0; b < n; ++b) {
        if (!poset.leq(ev[a], ev[b])) continue;
        const auto fa = forward_project(poset, chain, ev[a]);
        const auto fb = forward_project(poset, chain, ev[b]);
        if (fa && fb) CHECK(poset.leq(*fa, *fb));
        const auto ba = backward_project(poset, chain, ev[a]);
        const auto bb = backward_project(poset, chain, ev[b]);
        if (ba && bb) CHECK(poset.leq(*ba, *bb));
      }
    }
  }
}

TEST_CASE("betweenness on the coordinated ladder") {
  const Ladder l = make_ladder(5);
  // interior ticks of either chain are between; boundary ticks lack the
  // projections the condition needs
  for (std::size_t t = 1; t + 1 < 5; ++t) {
    CHECK(check_betweenness(l.poset, l.chain_p, l.chain_q, l.p[t]));
    CHECK(check_betweenness(l.poset, l.chain_p, l.chain_q, l.q[t]));
  }
  CHECK_THROWS_AS(check_betweenness(l.poset, l.chain_p, l.chain_q, l.p[0]),
                  ProjectionUndefined);

  // an event with no projection onto Q at all
  Ladder iso = make_ladder(4);
  const EventId lone = iso.poset.add_event("lone");
  CHECK_THROWS_AS(
      check_betweenness(iso.poset, iso.chain_p, iso.chain_q, lone),
      ProjectionUndefined);
}

TEST_CASE("quantify_interval on the coordinated ladder") {
  const Ladder l = make_ladder(5);

  // identity interval
  CHECK(quantify_interval(l.poset, l.chain_p, l.chain_q, l.p[1], l.p[1]) ==
        IntervalPair{0, 0});

  // two ticks apart along chain P with aligned Q projections:
  // Q(p1) = q2, Q(p3) = q4, so (dp, dq) = (2, 2)
  const IntervalPair pair =
      quantify_interval(l.poset, l.chain_p, l.chain_q, l.p[1], l.p[3]);
  CHECK(pair == IntervalPair{2, 2});
  CHECK(interval_scalar(pair) == 4.0);
  CHECK(classify_interval(pair) == IntervalClass::ChainLike);
  CHECK(beta(pair) == 0.0);

  // boundary tick is not between
  CHECK_THROWS_AS(
      quantify_interval(l.poset, l.chain_p, l.chain_q, l.p[1], l.p[0]),
      ProjectionUndefined);

  // an event with all projections defined but failing the condition:
  // Q(stray) = q3 while Q(P̄ stray) = Q(p0) = q1
  Ladder mod = make_ladder(5);
  const EventId stray = mod.poset.add_event("stray");
  mod.poset.add_relation(mod.p[0], stray);
  mod.poset.add_relation(mod.q[0], stray);
  mod.poset.add_relation(stray, mod.p[2]);
  CHECK_FALSE(check_betweenness(mod.poset, mod.chain_p, mod.chain_q, stray));
  CHECK_THROWS_AS(quantify_interval(mod.poset, mod.chain_p, mod.chain_q,
                                    stray, mod.p[2]),
                  NotBetween);
}
