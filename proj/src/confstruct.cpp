#include "revccs/confstruct.hpp"

namespace revccs {

std::string label_string(const Action& a) { return a.to_string(); }

std::string label_string(const SyncLabel& a) { return a ? a->to_string() : "0"; }

std::string label_string(const PairLabel& a) {
  return "(" + (a.first ? a.first->to_string() : std::string("*")) + "," +
         (a.second ? a.second->to_string() : std::string("*")) + ")";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Range: return "range";
    case Axiom::Finiteness: return "finiteness";
    case Axiom::CoincidenceFreeness: return "coincidence-freeness";
    case Axiom::FiniteCompleteness: return "finite-completeness";
    case Axiom::Stability: return "stability";
  }
  return "axiom";
}

std::string format_config(const EventSet& x) {
  std::string s = "{";
  bool first = true;
  x.for_each([&](std::size_t e) {
    if (!first) s += ",";
    s += "e" + std::to_string(e);
    first = false;
  });
  return s + "}";
}

Restricted<Action> restrict_name(const ConfStruct& c, const std::string& name) {
  EventSet keep;
  for (std::size_t e = 0; e < c.event_count(); ++e) {
    const Action& a = c.label(e);
    if (a.is_tau() || a.channel != name) keep.insert(e);
  }
  // Events whose causes were all removed occur in no configuration; drop them.
  Restricted<Action> r = restrict_events(c, keep);
  EventSet live;
  for (const auto& x : r.structure.configurations()) live = live | x;
  if (live.size() == r.structure.event_count()) return r;
  Restricted<Action> pruned = restrict_events(r.structure, live);
  for (auto& e : pruned.original) e = r.original[e];
  return pruned;
}

ConfStruct prefix(const Action& action, const ConfStruct& c) {
  std::vector<ConfStruct::Event> events;
  events.push_back({"h", action});
  for (const auto& e : c.events()) events.push_back({"h." + e.tag, e.label});
  std::vector<EventSet> configs{EventSet{}};
  for (const auto& x : c.configurations()) {
    EventSet y;
    y.insert(0);
    x.for_each([&](std::size_t e) { y.insert(e + 1); });
    configs.push_back(y);
  }
  return ConfStruct(std::move(events), std::move(configs));
}

SyncLabel sync_label(const PairLabel& label) {
  const auto& [l, r] = label;
  if (l && !r) return *l;
  if (!l && r) return *r;
  if (l && r && !l->is_tau() && !r->is_tau() && *r == l->dual()) return Action::tau();
  return std::nullopt;
}

ParallelResult parallel(const ConfStruct& a, const ConfStruct& b) {
  std::vector<ConfStruct::Event> events;
  std::vector<EventSet> configs;
  ParallelResult result;
  detail::generate_product<Action, Action, Action>(
      a, b,
      [](const Action* l1, const Action* l2) -> std::optional<Action> {
        return sync_label(PairLabel{l1 ? std::optional<Action>(*l1) : std::nullopt,
                                    l2 ? std::optional<Action>(*l2) : std::nullopt});
      },
      events, configs, result.first, result.second);
  result.structure = ConfStruct(std::move(events), std::move(configs));
  return result;
}

ParallelResult parallel_by_definition(const ConfStruct& a, const ConfStruct& b) {
  auto prod = product(a, b);
  auto relabelled = relabel(prod.structure, [](const PairLabel& l) { return sync_label(l); });
  EventSet keep;
  for (std::size_t e = 0; e < relabelled.event_count(); ++e) {
    if (relabelled.label(e)) keep.insert(e);
  }
  auto kept = restrict_events(relabelled, keep);
  ParallelResult result;
  result.structure = relabel(kept.structure, [](const SyncLabel& l) { return *l; });
  for (auto old : kept.original) {
    result.first.push_back(prod.first[old]);
    result.second.push_back(prod.second[old]);
  }
  return result;
}

}  // namespace revccs
