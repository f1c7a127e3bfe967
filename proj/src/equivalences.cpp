#include "revccs/equivalences.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "revccs/errors.hpp"

namespace revccs {

namespace {

std::optional<std::size_t> image(const EventMap& f, std::size_t e) {
  auto it = std::lower_bound(f.begin(), f.end(), std::make_pair(e, std::size_t{0}));
  if (it != f.end() && it->first == e) return it->second;
  return std::nullopt;
}

EventMap extend(const EventMap& f, std::size_t e1, std::size_t e2) {
  EventMap g = f;
  g.insert(std::upper_bound(g.begin(), g.end(), std::make_pair(e1, e2)), {e1, e2});
  return g;
}

EventMap shrink(const EventMap& f, std::size_t e1) {
  EventMap g;
  for (const auto& p : f) {
    if (p.first != e1) g.push_back(p);
  }
  return g;
}

bool is_bijection_onto(const EventMap& f, const EventSet& x1, const EventSet& x2) {
  EventSet dom, cod;
  for (const auto& [a, b] : f) {
    if (dom.contains(a) || cod.contains(b)) return false;
    dom.insert(a);
    cod.insert(b);
  }
  return dom == x1 && cod == x2;
}

bool order_check(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                 const EventSet& x2, const EventMap& f, bool both_ways) {
  if (!is_bijection_onto(f, x1, x2)) return false;
  for (const auto& [a, b] : f) {
    if (!(c1.label(a) == c2.label(b))) return false;
  }
  const CausalOrder o1 = causal_order(c1, x1);
  const CausalOrder o2 = causal_order(c2, x2);
  for (const auto& [a, fa] : f) {
    for (const auto& [b, fb] : f) {
      const bool l = o1.leq(a, b);
      const bool r = o2.leq(fa, fb);
      if (l && !r) return false;
      if (both_ways && r && !l) return false;
    }
  }
  return true;
}

// Greatest set of nodes such that each alive node is locally fine and every
// obligation of it has an alive successor.
std::vector<bool> greatest_fixpoint(const std::vector<bool>& local_ok,
                                    const std::vector<std::vector<std::vector<std::size_t>>>& obligations) {
  std::vector<bool> alive = local_ok;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t n = 0; n < alive.size(); ++n) {
      if (!alive[n]) continue;
      for (const auto& ob : obligations[n]) {
        if (std::none_of(ob.begin(), ob.end(), [&](std::size_t s) { return alive[s]; })) {
          alive[n] = false;
          changed = true;
          break;
        }
      }
    }
  }
  return alive;
}

// Alive nodes reachable from node 0 through alive successors.
std::vector<std::size_t> alive_from_root(
    const std::vector<bool>& alive, const std::vector<std::vector<std::vector<std::size_t>>>& obligations) {
  std::vector<std::size_t> out;
  if (alive.empty() || !alive[0]) return out;
  std::vector<bool> seen(alive.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t n = queue.front();
    queue.pop_front();
    out.push_back(n);
    for (const auto& ob : obligations[n]) {
      for (auto s : ob) {
        if (alive[s] && !seen[s]) {
          seen[s] = true;
          queue.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All label preserving bijections x1 -> x2 accepted by `keep`.
template <class Keep>
std::vector<EventMap> bijections(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                                 const EventSet& x2, Keep keep) {
  std::vector<EventMap> out;
  const auto left = x1.elements();
  const auto right = x2.elements();
  if (left.size() != right.size()) return out;
  EventMap f;
  std::vector<bool> used(right.size(), false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == left.size()) {
      if (keep(f)) out.push_back(f);
      return;
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j] || !(c1.label(left[i]) == c2.label(right[j]))) continue;
      used[j] = true;
      f.emplace_back(left[i], right[j]);
      go(i + 1);
      f.pop_back();
      used[j] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace

bool is_order_iso(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                  const EventSet& x2, const EventMap& f) {
  return order_check(c1, x1, c2, x2, f, true);
}

bool is_monotone(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                 const EventSet& x2, const EventMap& f) {
  return order_check(c1, x1, c2, x2, f, false);
}

// ---------------------------------------------------------------- stratification

StratifiedRelation build_stratification(const ConfStruct& c1, const ConfStruct& c2) {
  StratifiedRelation s;
  s.k = c1.max_cardinality();
  s.F.assign(s.k + 1, {});
  s.B.assign(s.k + 1, {});
  using Key = std::tuple<EventSet, EventSet, EventMap>;
  auto key_less = [](const Key& a, const Key& b) {
    const auto& [a1, a2, af] = a;
    const auto& [b1, b2, bf] = b;
    if (a1 != b1) return a1 < b1;
    if (a2 != b2) return a2 < b2;
    return af < bf;
  };
  using KeySet = std::set<Key, decltype(key_less)>;
  std::vector<KeySet> fset(s.k + 2, KeySet(key_less));
  std::vector<KeySet> bset(s.k + 1, KeySet(key_less));

  for (std::size_t i = s.k + 1; i-- > 0;) {
    for (const auto& x1 : c1.configurations()) {
      if (x1.size() != i) continue;
      for (const auto& x2 : c2.configurations()) {
        if (x2.size() != i) continue;
        for (auto& f : bijections(c1, x1, c2, x2, [&](const EventMap& g) {
               return is_monotone(c1, x1, c2, x2, g);
             })) {
          bool ok = true;
          if (i < s.k) {
            const auto& up = fset[i + 1];
            for (auto e1 : c1.extensions(x1)) {
              bool matched = false;
              for (auto e2 : c2.extensions(x2)) {
                matched = matched || (c1.label(e1) == c2.label(e2) &&
                                      up.count({x1.with(e1), x2.with(e2), extend(f, e1, e2)}));
              }
              ok = ok && matched;
            }
            for (auto e2 : c2.extensions(x2)) {
              bool matched = false;
              for (auto e1 : c1.extensions(x1)) {
                matched = matched || (c1.label(e1) == c2.label(e2) &&
                                      up.count({x1.with(e1), x2.with(e2), extend(f, e1, e2)}));
              }
              ok = ok && matched;
            }
          }
          if (ok) {
            fset[i].insert({x1, x2, f});
            s.F[i].push_back({x1, x2, f});
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i <= s.k; ++i) {
    for (const auto& t : s.F[i]) {
      bool ok = true;
      if (i > 0) {
        const auto& down = bset[i - 1];
        auto back_ok = [&](std::size_t e1, std::size_t e2) {
          return c1.label(e1) == c2.label(e2) && image(t.f, e1) == e2 &&
                 down.count({t.x1.without(e1), t.x2.without(e2), shrink(t.f, e1)});
        };
        for (auto e1 : c1.retractions(t.x1)) {
          bool matched = false;
          for (auto e2 : c2.retractions(t.x2)) matched = matched || back_ok(e1, e2);
          ok = ok && matched;
        }
        for (auto e2 : c2.retractions(t.x2)) {
          bool matched = false;
          for (auto e1 : c1.retractions(t.x1)) matched = matched || back_ok(e1, e2);
          ok = ok && matched;
        }
      }
      if (ok) {
        bset[i].insert({t.x1, t.x2, t.f});
        s.B[i].push_back(t);
      }
    }
  }
  return s;
}

std::optional<StratumFailure> first_failing_stratum(const ConfStruct& c1,
                                                    const StratifiedRelation& s) {
  for (std::size_t n = 0; n <= s.k; ++n) {
    for (const auto& x1 : c1.configurations()) {
      if (x1.size() != n) continue;
      auto has = [&](const std::vector<Triple>& ts) {
        return std::any_of(ts.begin(), ts.end(), [&](const Triple& t) { return t.x1 == x1; });
      };
      if (!has(s.F[n])) return StratumFailure{n, 'F', x1};
      if (!has(s.B[n])) return StratumFailure{n, 'B', x1};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- hhpb

namespace {

struct TripleGraph {
  std::vector<Triple> nodes;
  std::vector<std::vector<std::vector<std::size_t>>> obligations;
};

TripleGraph explore_triples(const ConfStruct& c1, const ConfStruct& c2) {
  TripleGraph g;
  std::map<std::tuple<std::size_t, std::size_t, EventMap>, std::size_t> index;
  auto add = [&](Triple t) -> std::size_t {
    auto key = std::make_tuple(c1.index_of(t.x1), c2.index_of(t.x2), t.f);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const std::size_t id = g.nodes.size();
    g.nodes.push_back(std::move(t));
    g.obligations.emplace_back();
    index.emplace(std::move(key), id);
    return id;
  };
  add({EventSet{}, EventSet{}, {}});
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const Triple t = g.nodes[n];
    std::vector<std::vector<std::size_t>> obs;
    const auto ext1 = c1.extensions(t.x1);
    const auto ext2 = c2.extensions(t.x2);
    // forward pairs, shared by both sides' obligations
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> fwd;
    for (auto e1 : ext1) {
      for (auto e2 : ext2) {
        if (!(c1.label(e1) == c2.label(e2))) continue;
        Triple u{t.x1.with(e1), t.x2.with(e2), extend(t.f, e1, e2)};
        if (!is_order_iso(c1, u.x1, c2, u.x2, u.f)) continue;
        fwd[{e1, e2}] = add(std::move(u));
      }
    }
    for (auto e1 : ext1) {
      std::vector<std::size_t> ob;
      for (const auto& [p, id] : fwd) {
        if (p.first == e1) ob.push_back(id);
      }
      obs.push_back(ob);
    }
    for (auto e2 : ext2) {
      std::vector<std::size_t> ob;
      for (const auto& [p, id] : fwd) {
        if (p.second == e2) ob.push_back(id);
      }
      obs.push_back(ob);
    }
    const auto ret2 = c2.retractions(t.x2);
    std::vector<std::pair<std::size_t, std::size_t>> bwd;  // (e1, node)
    for (auto e1 : c1.retractions(t.x1)) {
      std::vector<std::size_t> ob;
      const auto e2 = image(t.f, e1);
      if (e2 && std::find(ret2.begin(), ret2.end(), *e2) != ret2.end()) {
        Triple u{t.x1.without(e1), t.x2.without(*e2), shrink(t.f, e1)};
        if (is_order_iso(c1, u.x1, c2, u.x2, u.f)) ob.push_back(add(std::move(u)));
      }
      obs.push_back(ob);
      if (!ob.empty()) bwd.emplace_back(*e2, ob[0]);
    }
    for (auto e2 : ret2) {
      std::vector<std::size_t> ob;
      for (const auto& [f2, id] : bwd) {
        if (f2 == e2) ob.push_back(id);
      }
      obs.push_back(ob);
    }
    g.obligations[n] = std::move(obs);
  }
  return g;
}

}  // namespace

EquivalenceVerdict hhpb(const ConfStruct& c1, const ConfStruct& c2) {
  const TripleGraph g = explore_triples(c1, c2);
  const std::vector<bool> local(g.nodes.size(), true);
  const auto alive = greatest_fixpoint(local, g.obligations);
  EquivalenceVerdict v;
  v.related = alive[0];
  if (v.related) {
    for (auto n : alive_from_root(alive, g.obligations)) v.relation.push_back(g.nodes[n]);
    return v;
  }
  const auto strat = build_stratification(c1, c2);
  if (auto fail = first_failing_stratum(c1, strat)) {
    v.failing_stratum = fail->stratum;
    v.failing_kind = fail->kind;
    v.unmatched = fail->x1;
  } else {
    v.note = "stratification keeps every configuration of the left structure";
  }
  v.relation.push_back(g.nodes[0]);
  return v;
}

bool replay_hhpb_witness(const ConfStruct& c1, const ConfStruct& c2,
                         const std::vector<Triple>& relation) {
  auto in = [&](const Triple& t) {
    return std::find(relation.begin(), relation.end(), t) != relation.end();
  };
  if (!in(Triple{})) return false;
  for (const auto& t : relation) {
    if (!c1.contains(t.x1) || !c2.contains(t.x2)) return false;
    if (!is_order_iso(c1, t.x1, c2, t.x2, t.f)) return false;
    for (auto e1 : c1.extensions(t.x1)) {
      bool ok = false;
      for (auto e2 : c2.extensions(t.x2)) {
        ok = ok || in({t.x1.with(e1), t.x2.with(e2), extend(t.f, e1, e2)});
      }
      if (!ok) return false;
    }
    for (auto e2 : c2.extensions(t.x2)) {
      bool ok = false;
      for (auto e1 : c1.extensions(t.x1)) {
        ok = ok || in({t.x1.with(e1), t.x2.with(e2), extend(t.f, e1, e2)});
      }
      if (!ok) return false;
    }
    for (auto e1 : c1.retractions(t.x1)) {
      const auto e2 = image(t.f, e1);
      if (!e2 || !in({t.x1.without(e1), t.x2.without(*e2), shrink(t.f, e1)})) return false;
    }
    for (auto e2 : c2.retractions(t.x2)) {
      bool ok = false;
      for (const auto& [a, b] : t.f) {
        ok = ok || (b == e2 && in({t.x1.without(a), t.x2.without(b), shrink(t.f, a)}));
      }
      if (!ok) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- barbed game

namespace {

std::set<Action> visible_barbs(const ConfStruct& c, const EventSet& x) {
  std::set<Action> out;
  for (auto e : c.extensions(x)) {
    if (!c.label(e).is_tau()) out.insert(c.label(e));
  }
  return out;
}

std::vector<std::size_t> tau_only(const ConfStruct& c, std::vector<std::size_t> events) {
  events.erase(std::remove_if(events.begin(), events.end(),
                              [&](std::size_t e) { return !c.label(e).is_tau(); }),
               events.end());
  return events;
}

}  // namespace

EquivalenceVerdict barbed_bf_bisim_structs(const ConfStruct& c1, const ConfStruct& c2) {
  std::vector<std::pair<EventSet, EventSet>> nodes;
  std::unordered_map<std::size_t, std::size_t> index;  // i1 * n2 + i2
  std::vector<std::vector<std::vector<std::size_t>>> obligations;
  std::vector<bool> local;
  const std::size_t n2 = c2.config_count();
  auto add = [&](const EventSet& x1, const EventSet& x2) {
    const std::size_t key = c1.index_of(x1) * n2 + c2.index_of(x2);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const std::size_t id = nodes.size();
    nodes.emplace_back(x1, x2);
    obligations.emplace_back();
    local.push_back(true);
    index.emplace(key, id);
    return id;
  };
  add(EventSet{}, EventSet{});
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto [x1, x2] = nodes[n];
    local[n] = visible_barbs(c1, x1) == visible_barbs(c2, x2);
    if (!local[n]) continue;
    std::vector<std::vector<std::size_t>> obs;
    for (bool forward : {true, false}) {
      const auto m1 = tau_only(c1, forward ? c1.extensions(x1) : c1.retractions(x1));
      const auto m2 = tau_only(c2, forward ? c2.extensions(x2) : c2.retractions(x2));
      auto step = [&](const EventSet& x, std::size_t e) { return forward ? x.with(e) : x.without(e); };
      std::vector<std::vector<std::size_t>> right(m2.size());
      for (auto e1 : m1) {
        std::vector<std::size_t> ob;
        for (std::size_t j = 0; j < m2.size(); ++j) {
          const std::size_t id = add(step(x1, e1), step(x2, m2[j]));
          ob.push_back(id);
          right[j].push_back(id);
        }
        obs.push_back(std::move(ob));
      }
      for (auto& r : right) obs.push_back(std::move(r));
    }
    obligations[n] = std::move(obs);
  }
  const auto alive = greatest_fixpoint(local, obligations);
  EquivalenceVerdict v;
  v.related = alive[0];
  if (v.related) {
    for (auto n : alive_from_root(alive, obligations)) {
      v.relation.push_back({nodes[n].first, nodes[n].second, {}});
    }
  } else {
    v.relation.push_back({EventSet{}, EventSet{}, {}});
    const auto b1 = visible_barbs(c1, EventSet{});
    const auto b2 = visible_barbs(c2, EventSet{});
    if (b1 != b2) v.note = "barbs differ at the empty configuration";
  }
  return v;
}

EquivalenceVerdict barbed_bf_bisim_terms(const RccsTerm& r, const RccsTerm& s,
                                         std::size_t max_states) {
  const StateGraph g1 = reachable_states(r, max_states);
  const StateGraph g2 = reachable_states(s, max_states);
  struct Info {
    std::set<Action> barbs;
    std::vector<std::size_t> fwd_tau, bwd_tau;
  };
  auto summarise = [](const StateGraph& g) {
    std::vector<Info> out(g.states.size());
    for (const auto& e : g.edges) {
      const bool fwd = e.label.direction == Direction::Forward;
      if (!e.label.action.is_tau()) {
        if (fwd) out[e.from].barbs.insert(e.label.action);
      } else {
        (fwd ? out[e.from].fwd_tau : out[e.from].bwd_tau).push_back(e.to);
      }
    }
    return out;
  };
  const auto i1 = summarise(g1);
  const auto i2 = summarise(g2);

  std::vector<std::pair<std::size_t, std::size_t>> nodes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::vector<std::vector<std::size_t>>> obligations;
  std::vector<bool> local;
  auto add = [&](std::size_t a, std::size_t b) {
    auto it = index.find({a, b});
    if (it != index.end()) return it->second;
    const std::size_t id = nodes.size();
    nodes.emplace_back(a, b);
    obligations.emplace_back();
    local.push_back(true);
    index.emplace(std::make_pair(a, b), id);
    return id;
  };
  add(0, 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto [a, b] = nodes[n];
    local[n] = i1[a].barbs == i2[b].barbs;
    if (!local[n]) continue;
    std::vector<std::vector<std::size_t>> obs;
    for (bool fwd : {true, false}) {
      const auto& m1 = fwd ? i1[a].fwd_tau : i1[a].bwd_tau;
      const auto& m2 = fwd ? i2[b].fwd_tau : i2[b].bwd_tau;
      for (auto t1 : m1) {
        std::vector<std::size_t> ob;
        for (auto t2 : m2) ob.push_back(add(t1, t2));
        obs.push_back(std::move(ob));
      }
      for (auto t2 : m2) {
        std::vector<std::size_t> ob;
        for (auto t1 : m1) ob.push_back(add(t1, t2));
        obs.push_back(std::move(ob));
      }
    }
    obligations[n] = std::move(obs);
  }
  const auto alive = greatest_fixpoint(local, obligations);
  EquivalenceVerdict v;
  v.related = alive[0];
  return v;
}

bool forward_strong_bisim(const CcsTerm& p1, const CcsTerm& p2, std::size_t max_states) {
  struct Lts {
    std::vector<std::vector<std::pair<Action, std::size_t>>> steps;
  };
  auto explore = [&](const CcsTerm& p) {
    Lts lts;
    std::vector<CcsTerm> states;
    std::map<std::string, std::size_t> index;
    auto add = [&](const CcsTerm& t) {
      const CcsTerm nf = ccs_normal_form(t);
      std::string key = print(nf);
      auto it = index.find(key);
      if (it != index.end()) return it->second;
      if (states.size() >= max_states) {
        throw Error(ErrorKind::BoundExceeded, "CCS state space exceeds bound");
      }
      states.push_back(nf);
      lts.steps.emplace_back();
      index.emplace(std::move(key), states.size() - 1);
      return states.size() - 1;
    };
    add(p);
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& s : ccs_steps(states[i])) {
        const std::size_t to = add(s.target);
        lts.steps[i].emplace_back(s.action, to);
      }
    }
    return lts;
  };
  const Lts l1 = explore(p1);
  const Lts l2 = explore(p2);

  std::vector<std::pair<std::size_t, std::size_t>> nodes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::vector<std::vector<std::size_t>>> obligations;
  auto add = [&](std::size_t a, std::size_t b) {
    auto it = index.find({a, b});
    if (it != index.end()) return it->second;
    nodes.emplace_back(a, b);
    obligations.emplace_back();
    index.emplace(std::make_pair(a, b), nodes.size() - 1);
    return nodes.size() - 1;
  };
  add(0, 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto [a, b] = nodes[n];
    std::vector<std::vector<std::size_t>> obs;
    for (const auto& [act, t1] : l1.steps[a]) {
      std::vector<std::size_t> ob;
      for (const auto& [act2, t2] : l2.steps[b]) {
        if (act == act2) ob.push_back(add(t1, t2));
      }
      obs.push_back(std::move(ob));
    }
    for (const auto& [act2, t2] : l2.steps[b]) {
      std::vector<std::size_t> ob;
      for (const auto& [act, t1] : l1.steps[a]) {
        if (act == act2) ob.push_back(add(t1, t2));
      }
      obs.push_back(std::move(ob));
    }
    obligations[n] = std::move(obs);
  }
  return greatest_fixpoint(std::vector<bool>(nodes.size(), true), obligations)[0];
}

}  // namespace revccs
