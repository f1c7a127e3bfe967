#include "revccs/serialize/export.hpp"

#include <json.hpp>
#include <sstream>

#include "revccs/errors.hpp"

namespace revccs {

using json = nlohmann::ordered_json;

namespace {

std::string event_id(std::size_t e) { return "e" + std::to_string(e); }

json config_json(const EventSet& x) {
  json a = json::array();
  for (auto e : x.elements()) a.push_back(event_id(e));
  return a;
}

std::size_t parse_event_id(const json& j, std::size_t count) {
  const std::string s = j.get<std::string>();
  std::size_t e = 0;
  std::size_t used = 0;
  try {
    if (s.size() < 2 || s[0] != 'e') throw std::invalid_argument(s);
    e = std::stoul(s.substr(1), &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad event id '" + s + "'");
  }
  if (used + 1 != s.size() || e >= count) throw Error(ErrorKind::InvalidArgument, "bad event id '" + s + "'");
  return e;
}

json structure_json(const ConfStruct& c) {
  json events = json::array();
  for (std::size_t e = 0; e < c.event_count(); ++e) {
    events.push_back({{"id", event_id(e)}, {"label", c.label(e).to_string()}});
  }
  json configs = json::array();
  for (const auto& x : c.configurations()) configs.push_back(config_json(x));
  return {{"events", events}, {"configurations", configs}};
}

std::string node_name(const EventSet& x) {
  std::string s = "c";
  for (auto e : x.elements()) s += "_" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_json(const ConfStruct& c) { return structure_json(c).dump(); }

ConfStruct confstruct_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad structure JSON: ") + e.what());
  }
  std::vector<ConfStruct::Event> events;
  std::vector<EventSet> configs;
  try {
    const std::size_t n = j.at("events").size();
    for (const auto& e : j.at("events")) {
      if (parse_event_id(e.at("id"), n) != events.size()) {
        throw Error(ErrorKind::InvalidArgument, "event ids must be e0..e(n-1) in order");
      }
      events.push_back({event_id(events.size()), parse_action(e.at("label").get<std::string>())});
    }
    for (const auto& x : j.at("configurations")) {
      EventSet s;
      for (const auto& e : x) s.insert(parse_event_id(e, n));
      configs.push_back(s);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad structure JSON: ") + e.what());
  }
  return ConfStruct(std::move(events), std::move(configs));
}

std::string to_dot(const ConfStruct& c) {
  std::ostringstream out;
  out << "digraph configurations {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& x : c.configurations()) {
    std::string label = "{";
    bool first = true;
    for (auto e : x.elements()) {
      if (!first) label += ",";
      label += "e" + std::to_string(e);
      first = false;
    }
    out << "  " << node_name(x) << " [label=\"" << label << "}\"];\n";
  }
  for (const auto& x : c.configurations()) {
    for (auto e : c.extensions(x)) {
      out << "  " << node_name(x) << " -> " << node_name(x.with(e)) << " [label=\""
          << c.label(e).to_string() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const ConfStruct& c) {
  std::ostringstream out;
  out << "events:";
  for (std::size_t e = 0; e < c.event_count(); ++e) {
    out << " e" << e << ":" << c.label(e).to_string();
  }
  out << "\nconfigurations (" << c.config_count() << "):\n";
  for (const auto& x : c.configurations()) out << "  " << format_config(x) << "\n";
  return out.str();
}

std::string to_json(const Address& a) {
  return json{{"origin", structure_json(a.origin)}, {"current", config_json(a.current)}}.dump();
}

std::string to_json(const EquivalenceVerdict& v) {
  json witness;
  if (v.related) {
    json rel = json::array();
    for (const auto& t : v.relation) {
      json f = json::array();
      for (const auto& [a, b] : t.f) f.push_back({event_id(a), event_id(b)});
      rel.push_back({config_json(t.x1), config_json(t.x2), f});
    }
    witness = {{"relation", rel}};
  } else {
    witness = json::object();
    if (v.failing_kind) witness["kind"] = std::string(1, *v.failing_kind);
    if (v.unmatched) witness["unmatched"] = config_json(*v.unmatched);
  }
  if (!v.note.empty()) witness["note"] = v.note;
  json j{{"related", v.related},
         {"failing_stratum", v.failing_stratum ? json(*v.failing_stratum) : json(nullptr)},
         {"witness", witness},
         {"context", v.context ? json(*v.context) : json(nullptr)}};
  return j.dump();
}

}  // namespace revccs
