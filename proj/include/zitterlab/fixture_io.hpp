#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zitterlab/poset.hpp"
#include "zitterlab/seqlang.hpp"
#include "zitterlab/sequences.hpp"

namespace zitterlab::io {

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A poset plus named chains as loaded from a fixture document:
///   {"events":[{"id":"x","label":"..."}],
///    "covers":[["a","b"]],
///    "chains":[{"name":"P","elements":["a",...],"valuation":[0,...]}]}
/// The loader validates every poset and chain invariant.
struct PosetFixture {
  Poset poset;
  std::vector<Chain> chains;
  std::vector<std::string> event_names;            // insertion order
  std::unordered_map<std::string, EventId> by_name;

  const Chain& chain(const std::string& name) const;
};

PosetFixture parse_poset_fixture(const std::string& json_text);
PosetFixture load_poset_fixture(const std::string& path);

std::string fixture_to_json(const FreeParticleFixture& fx);
PosetFixture to_poset_fixture(const FreeParticleFixture& fx);

/// {"links":[{"from":"m1","to":"m2","a1":0.0,"a2":1.0}]}
seqlang::AmplitudeEnv parse_amplitude_env(const std::string& json_text);
seqlang::AmplitudeEnv load_amplitude_env(const std::string& path);

/// Shortest-width decimal rendering with 17 significant digits; all CSV and
/// JSON emitters share it so identical runs are byte-identical.
std::string format_double(double v);

/// Interval table over all ordered event pairs situated between the chains;
/// columns x,y,dp,dq,dt,dx,scalar,class,beta (beta empty when undefined).
std::string interval_table_csv(const PosetFixture& fx, const Chain& chain_p,
                               const Chain& chain_q);

/// Per-event projection valuations onto the two chains; absent projections
/// are empty cells.
std::string element_table_csv(const PosetFixture& fx, const Chain& chain_p,
                              const Chain& chain_q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace zitterlab::io
