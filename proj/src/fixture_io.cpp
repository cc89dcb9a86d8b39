#include "zitterlab/fixture_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zitterlab::io {

using nlohmann::json;

const Chain& PosetFixture::chain(const std::string& name) const {
  for (const auto& c : chains) {
    if (c.name() == name) return c;
  }
  throw FixtureError("fixture has no chain named '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

PosetFixture parse_poset_fixture(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("events")) {
    throw FixtureError("fixture must be an object with an 'events' array");
  }

  PosetFixture fx;
  for (const auto& ev : doc.at("events")) {
    if (!ev.is_object() || !ev.contains("id") || !ev.at("id").is_string()) {
      throw FixtureError("every event needs a string 'id'");
    }
    const std::string id = ev.at("id").get<std::string>();
    if (id.empty()) throw FixtureError("event ids must be nonempty");
    if (fx.by_name.count(id)) {
      throw FixtureError("duplicate event id '" + id + "'");
    }
    std::string label = id;
    if (ev.contains("label")) label = ev.at("label").get<std::string>();
    fx.by_name[id] = fx.poset.add_event(label);
    fx.event_names.push_back(id);
  }

  auto lookup = [&](const std::string& id) {
    auto it = fx.by_name.find(id);
    if (it == fx.by_name.end()) {
      throw FixtureError("unknown event id '" + id + "'");
    }
    return it->second;
  };

  if (doc.contains("covers")) {
    for (const auto& cov : doc.at("covers")) {
      if (!cov.is_array() || cov.size() != 2) {
        throw FixtureError("covers must be [below, above] pairs");
      }
      fx.poset.add_relation(lookup(cov.at(0).get<std::string>()),
                            lookup(cov.at(1).get<std::string>()));
    }
  }

  if (doc.contains("chains")) {
    for (const auto& ch : doc.at("chains")) {
      std::string name;
      if (ch.contains("name")) name = ch.at("name").get<std::string>();
      std::vector<EventId> elements;
      for (const auto& id : ch.at("elements")) {
        elements.push_back(lookup(id.get<std::string>()));
      }
      std::vector<double> valuation;
      for (const auto& v : ch.at("valuation")) {
        valuation.push_back(v.get<double>());
      }
      try {
        fx.chains.push_back(
            Chain::create(fx.poset, elements, valuation, name));
      } catch (const std::invalid_argument& e) {
        throw FixtureError("chain '" + name + "': " + e.what());
      }
    }
  }
  return fx;
}

PosetFixture load_poset_fixture(const std::string& path) {
  return parse_poset_fixture(read_file(path));
}

std::string fixture_to_json(const FreeParticleFixture& fx) {
  json doc;
  doc["events"] = json::array();
  for (std::size_t i = 0; i < fx.poset.size(); ++i) {
    const EventId e{static_cast<std::int32_t>(i)};
    doc["events"].push_back({{"id", fx.poset.label(e)}});
  }
  doc["covers"] = json::array();
  for (const auto& [a, b] : fx.poset.relations()) {
    doc["covers"].push_back({fx.poset.label(a), fx.poset.label(b)});
  }
  doc["chains"] = json::array();
  for (const Chain* c : {&fx.observer_p, &fx.observer_q, &fx.particle}) {
    json jc;
    jc["name"] = c->name();
    jc["elements"] = json::array();
    for (EventId e : c->elements()) {
      jc["elements"].push_back(fx.poset.label(e));
    }
    jc["valuation"] = c->valuations();
    doc["chains"].push_back(jc);
  }
  return doc.dump(2) + "\n";
}

PosetFixture to_poset_fixture(const FreeParticleFixture& fx) {
  return parse_poset_fixture(fixture_to_json(fx));
}

seqlang::AmplitudeEnv parse_amplitude_env(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FixtureError(std::string("environment is not valid JSON: ") +
                       e.what());
  }
  if (!doc.is_object() || !doc.contains("links") ||
      !doc.at("links").is_array()) {
    throw FixtureError("environment must be an object with a 'links' array");
  }
  seqlang::AmplitudeEnv env;
  for (const auto& link : doc.at("links")) {
    env.set(link.at("from").get<std::string>(),
            link.at("to").get<std::string>(),
            Amplitude(link.at("a1").get<double>(),
                      link.at("a2").get<double>()));
  }
  return env;
}

seqlang::AmplitudeEnv load_amplitude_env(const std::string& path) {
  return parse_amplitude_env(read_file(path));
}

namespace {

bool is_between(const PosetFixture& fx, const Chain& p, const Chain& q,
                EventId e) {
  try {
    return check_betweenness(fx.poset, p, q, e);
  } catch (const ProjectionUndefined&) {
    return false;
  }
}

}  // namespace

std::string interval_table_csv(const PosetFixture& fx, const Chain& chain_p,
                               const Chain& chain_q) {
  std::string out = "x,y,dp,dq,dt,dx,scalar,class,beta\n";
  std::vector<char> between(fx.event_names.size());
  for (std::size_t i = 0; i < fx.event_names.size(); ++i) {
    between[i] = is_between(fx, chain_p, chain_q,
                            fx.by_name.at(fx.event_names[i]));
  }
  for (std::size_t i = 0; i < fx.event_names.size(); ++i) {
    if (!between[i]) continue;
    for (std::size_t j = 0; j < fx.event_names.size(); ++j) {
      if (!between[j]) continue;
      const IntervalPair pair =
          quantify_interval(fx.poset, chain_p, chain_q,
                            fx.by_name.at(fx.event_names[i]),
                            fx.by_name.at(fx.event_names[j]));
      const SpacetimeInterval st = to_spacetime(pair);
      out += fx.event_names[i];
      out += ',';
      out += fx.event_names[j];
      out += ',';
      out += format_double(pair.dp);
      out += ',';
      out += format_double(pair.dq);
      out += ',';
      out += format_double(st.dt);
      out += ',';
      out += format_double(st.dx);
      out += ',';
      out += format_double(interval_scalar(pair));
      out += ',';
      out += to_string(classify_interval(pair));
      out += ',';
      if (pair.dp + pair.dq != 0.0) out += format_double(beta(pair));
      out += '\n';
    }
  }
  return out;
}

std::string element_table_csv(const PosetFixture& fx, const Chain& chain_p,
                              const Chain& chain_q) {
  std::string out = "event,label,p_forward,p_backward,q_forward,q_backward\n";
  for (const auto& name : fx.event_names) {
    const EventId e = fx.by_name.at(name);
    const ElementQuant qp = quantify_element(fx.poset, chain_p, e);
    const ElementQuant qq = quantify_element(fx.poset, chain_q, e);
    out += name;
    out += ',';
    out += fx.poset.label(e);
    for (const auto& v :
         {qp.forward, qp.backward, qq.forward, qq.backward}) {
      out += ',';
      if (v) out += format_double(*v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace zitterlab::io
