#pragma once

// Labelled configuration structures <E, C, l> over a finite event set.
// Events are indices 0..n-1; each carries a provenance tag that records how
// it was built (prefix head "h", sum injections "1(..)"/"2(..)", product
// pairs "(x,y)" with "*" for the missing side).

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revccs/event_set.hpp"
#include "revccs/syntax.hpp"

namespace revccs {

template <class L>
class Structure {
 public:
  using Label = L;
  struct Event {
    std::string tag;
    L label;
  };

  // <{}, {{}}>, the denotation of 0.
  Structure() : configs_{EventSet{}} { build_index(); }

  Structure(std::vector<Event> events, std::vector<EventSet> configs)
      : events_(std::move(events)), configs_(std::move(configs)) {
    std::sort(configs_.begin(), configs_.end());
    configs_.erase(std::unique(configs_.begin(), configs_.end()), configs_.end());
    build_index();
  }

  const std::vector<Event>& events() const { return events_; }
  const std::vector<EventSet>& configurations() const { return configs_; }
  std::size_t event_count() const { return events_.size(); }
  std::size_t config_count() const { return configs_.size(); }
  const L& label(std::size_t e) const { return events_[e].label; }
  const std::string& tag(std::size_t e) const { return events_[e].tag; }

  bool contains(const EventSet& x) const { return index_.count(x) != 0; }
  // Position of x in configurations(), or npos.
  std::size_t index_of(const EventSet& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? npos : it->second;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  EventSet all_events() const {
    EventSet s;
    for (std::size_t e = 0; e < events_.size(); ++e) s.insert(e);
    return s;
  }

  // Events e not in x with x + {e} a configuration.
  std::vector<std::size_t> extensions(const EventSet& x) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < events_.size(); ++e) {
      if (!x.contains(e) && contains(x.with(e))) out.push_back(e);
    }
    return out;
  }

  // Events e in x with x - {e} a configuration.
  std::vector<std::size_t> retractions(const EventSet& x) const {
    std::vector<std::size_t> out;
    x.for_each([&](std::size_t e) {
      if (contains(x.without(e))) out.push_back(e);
    });
    return out;
  }

  std::size_t max_cardinality() const {
    std::size_t k = 0;
    for (const auto& x : configs_) k = std::max(k, x.size());
    return k;
  }

  std::optional<std::size_t> find_tag(const std::string& tag) const {
    for (std::size_t e = 0; e < events_.size(); ++e) {
      if (events_[e].tag == tag) return e;
    }
    return std::nullopt;
  }

 private:
  void build_index() {
    index_.clear();
    index_.reserve(configs_.size() * 2);
    for (std::size_t i = 0; i < configs_.size(); ++i) index_.emplace(configs_[i], i);
  }

  std::vector<Event> events_;
  std::vector<EventSet> configs_;
  std::unordered_map<EventSet, std::size_t, EventSetHash> index_;
};

using ConfStruct = Structure<Action>;
using PairLabel = std::pair<std::optional<Action>, std::optional<Action>>;
// nullopt is the "0" label of the synchronisation table.
using SyncLabel = std::optional<Action>;

std::string label_string(const Action& a);
std::string label_string(const SyncLabel& a);
std::string label_string(const PairLabel& a);

// ------------------------------------------------------------- validation

enum class Axiom { Range, Finiteness, CoincidenceFreeness, FiniteCompleteness, Stability };
const char* to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  std::string detail;
  std::vector<EventSet> witness;
};

std::string format_config(const EventSet& x);

template <class L>
std::vector<AxiomViolation> validate(const Structure<L>& c) {
  std::vector<AxiomViolation> out;
  const auto& configs = c.configurations();
  const EventSet all = c.all_events();
  for (const auto& x : configs) {
    if (!x.subset_of(all)) {
      out.push_back({Axiom::Range, "configuration mentions unknown events " + format_config(x - all), {x}});
    }
  }
  if (!out.empty()) return out;
  if (!configs.empty() && !c.contains(EventSet{})) {
    out.push_back({Axiom::FiniteCompleteness, "the empty family is compatible but {} is missing", {}});
  }

  std::vector<std::vector<std::size_t>> below(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = 0; j < configs.size(); ++j) {
      if (configs[j].subset_of(configs[i])) below[i].push_back(j);
    }
  }

  for (std::size_t i = 0; i < configs.size(); ++i) {
    const EventSet& x = configs[i];
    const auto elems = x.elements();
    // finiteness: some finite sub-configuration contains e
    for (auto e : elems) {
      bool found = false;
      for (auto j : below[i]) found = found || configs[j].contains(e);
      if (!found) {
        out.push_back({Axiom::Finiteness, "no sub-configuration of " + format_config(x) +
                                              " contains e" + std::to_string(e), {x}});
      }
    }
    // coincidence freeness: membership signatures over sub-configurations
    std::vector<std::vector<bool>> sig(elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto j : below[i]) sig[k].push_back(configs[j].contains(elems[k]));
    }
    for (std::size_t p = 0; p < elems.size(); ++p) {
      for (std::size_t q = p + 1; q < elems.size(); ++q) {
        if (sig[p] == sig[q]) {
          out.push_back({Axiom::CoincidenceFreeness,
                         "events e" + std::to_string(elems[p]) + " and e" +
                             std::to_string(elems[q]) + " are not separated inside " +
                             format_config(x),
                         {x}});
        }
      }
    }
  }

  // Completeness and stability only concern bounded pairs, so it suffices to
  // look at pairs of sub-configurations of each configuration.
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& sub = below[i];
    for (std::size_t p = 0; p < sub.size(); ++p) {
      for (std::size_t q = p + 1; q < sub.size(); ++q) {
        const EventSet& x = configs[sub[p]];
        const EventSet& y = configs[sub[q]];
        const EventSet u = x | y;
        if (!c.contains(u)) {
          out.push_back({Axiom::FiniteCompleteness,
                         format_config(x) + " and " + format_config(y) + " are bounded by " +
                             format_config(configs[i]) + " but their union is missing",
                         {x, y}});
        } else if (!c.contains(x & y)) {
          out.push_back({Axiom::Stability,
                         "union of " + format_config(x) + " and " + format_config(y) +
                             " is a configuration but the intersection is not",
                         {x, y}});
        }
      }
    }
  }
  // the same pair may be reported under several bounds
  std::sort(out.begin(), out.end(), [](const AxiomViolation& a, const AxiomViolation& b) {
    if (a.axiom != b.axiom) return a.axiom < b.axiom;
    return a.witness < b.witness;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const AxiomViolation& a, const AxiomViolation& b) {
                          return a.axiom == b.axiom && a.witness == b.witness;
                        }),
            out.end());
  return out;
}

// ------------------------------------------------------------- product

template <class L1, class L2>
struct ProductResult {
  Structure<std::pair<std::optional<L1>, std::optional<L2>>> structure;
  // Projections: component events, nullopt for the star.
  std::vector<std::optional<std::size_t>> first;
  std::vector<std::optional<std::size_t>> second;
};

namespace detail {

inline std::string pair_tag(const std::string* a, const std::string* b) {
  return "(" + (a ? *a : std::string("*")) + "," + (b ? *b : std::string("*")) + ")";
}

// Grows configurations from {} by single events whose projections extend
// the projected configurations. `make` returns the label of a candidate pair
// or nullopt to exclude it.
template <class L1, class L2, class Out, class Make>
void generate_product(const Structure<L1>& a, const Structure<L2>& b, Make make,
                      std::vector<typename Structure<Out>::Event>& events,
                      std::vector<EventSet>& configs,
                      std::vector<std::optional<std::size_t>>& first,
                      std::vector<std::optional<std::size_t>>& second) {
  const std::size_t n1 = a.event_count();
  const std::size_t n2 = b.event_count();
  auto key = [&](std::optional<std::size_t> e1, std::optional<std::size_t> e2) {
    return (e1 ? *e1 + 1 : 0) * (n2 + 1) + (e2 ? *e2 + 1 : 0);
  };
  std::unordered_map<std::size_t, std::size_t> event_of;
  std::unordered_map<std::size_t, bool> excluded;

  auto event_for = [&](std::optional<std::size_t> e1,
                       std::optional<std::size_t> e2) -> std::optional<std::size_t> {
    const std::size_t k = key(e1, e2);
    if (auto it = event_of.find(k); it != event_of.end()) return it->second;
    if (excluded.count(k)) return std::nullopt;
    std::optional<Out> label = make(e1 ? &a.label(*e1) : nullptr, e2 ? &b.label(*e2) : nullptr);
    if (!label) {
      excluded.emplace(k, true);
      return std::nullopt;
    }
    const std::size_t idx = events.size();
    EventSet::check_index(idx);
    events.push_back({pair_tag(e1 ? &a.tag(*e1) : nullptr, e2 ? &b.tag(*e2) : nullptr),
                      std::move(*label)});
    first.push_back(e1);
    second.push_back(e2);
    event_of.emplace(k, idx);
    return idx;
  };

  struct Node {
    EventSet x, y1, y2;
  };
  std::unordered_map<EventSet, bool, EventSetHash> seen;
  std::deque<Node> queue;
  queue.push_back({EventSet{}, EventSet{}, EventSet{}});
  seen.emplace(EventSet{}, true);
  (void)n1;

  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    configs.push_back(node.x);
    const auto ext1 = a.extensions(node.y1);
    const auto ext2 = b.extensions(node.y2);
    auto visit = [&](std::optional<std::size_t> e1, std::optional<std::size_t> e2) {
      auto e = event_for(e1, e2);
      if (!e || node.x.contains(*e)) return;
      EventSet nx = node.x.with(*e);
      if (seen.emplace(nx, true).second) {
        queue.push_back({nx, e1 ? node.y1.with(*e1) : node.y1, e2 ? node.y2.with(*e2) : node.y2});
      }
    };
    for (auto e1 : ext1) visit(e1, std::nullopt);
    for (auto e2 : ext2) visit(std::nullopt, e2);
    for (auto e1 : ext1) {
      for (auto e2 : ext2) visit(e1, e2);
    }
  }
}

}  // namespace detail

template <class L1, class L2>
ProductResult<L1, L2> product(const Structure<L1>& a, const Structure<L2>& b) {
  using Out = std::pair<std::optional<L1>, std::optional<L2>>;
  std::vector<typename Structure<Out>::Event> events;
  std::vector<EventSet> configs;
  ProductResult<L1, L2> result;
  detail::generate_product<L1, L2, Out>(
      a, b,
      [](const L1* l1, const L2* l2) -> std::optional<Out> {
        return Out{l1 ? std::optional<L1>(*l1) : std::nullopt,
                   l2 ? std::optional<L2>(*l2) : std::nullopt};
      },
      events, configs, result.first, result.second);
  result.structure = Structure<Out>(std::move(events), std::move(configs));
  return result;
}

// ------------------------------------------------------------- coproduct

template <class L>
Structure<L> coproduct(const Structure<L>& a, const Structure<L>& b) {
  std::vector<typename Structure<L>::Event> events;
  for (const auto& e : a.events()) events.push_back({"1(" + e.tag + ")", e.label});
  for (const auto& e : b.events()) events.push_back({"2(" + e.tag + ")", e.label});
  const std::size_t shift = a.event_count();
  std::vector<EventSet> configs(a.configurations().begin(), a.configurations().end());
  for (const auto& x : b.configurations()) {
    EventSet y;
    x.for_each([&](std::size_t e) { y.insert(e + shift); });
    configs.push_back(y);
  }
  return Structure<L>(std::move(events), std::move(configs));
}

// ------------------------------------------------------------- restriction

template <class L>
struct Restricted {
  Structure<L> structure;
  std::vector<std::size_t> original;  // new event index -> old index
};

template <class L>
Restricted<L> restrict_events(const Structure<L>& c, const EventSet& keep) {
  Restricted<L> r;
  std::vector<std::size_t> renumber(c.event_count(), Structure<L>::npos);
  std::vector<typename Structure<L>::Event> events;
  for (std::size_t e = 0; e < c.event_count(); ++e) {
    if (keep.contains(e)) {
      renumber[e] = events.size();
      events.push_back(c.events()[e]);
      r.original.push_back(e);
    }
  }
  std::vector<EventSet> configs;
  for (const auto& x : c.configurations()) {
    if (!x.subset_of(keep)) continue;
    EventSet y;
    x.for_each([&](std::size_t e) { y.insert(renumber[e]); });
    configs.push_back(y);
  }
  r.structure = Structure<L>(std::move(events), std::move(configs));
  return r;
}

// Drops events on the channel `name` and the events left in no configuration.
Restricted<Action> restrict_name(const ConfStruct& c, const std::string& name);

// ------------------------------------------------------------- prefix, relabel

ConfStruct prefix(const Action& action, const ConfStruct& c);

template <class L, class F>
auto relabel(const Structure<L>& c, F&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const L&>()))>;
  std::vector<typename Structure<Out>::Event> events;
  for (const auto& e : c.events()) events.push_back({e.tag, f(e.label)});
  return Structure<Out>(std::move(events), c.configurations());
}

// ------------------------------------------------------------- parallel

// The synchronisation table: l(a)=a, l(tau)=tau, l(a,'a)=tau, other pairs 0.
SyncLabel sync_label(const PairLabel& label);

struct ParallelResult {
  ConfStruct structure;
  std::vector<std::optional<std::size_t>> first;
  std::vector<std::optional<std::size_t>> second;
};

// Product, relabelling by the synchronisation table, and restriction to the
// events with a non-0 label. Generation skips 0-labelled pairs directly.
ParallelResult parallel(const ConfStruct& a, const ConfStruct& b);

// The same composition assembled literally from product, relabel and
// restrict_events. Kept as an independent route for cross-checking.
ParallelResult parallel_by_definition(const ConfStruct& a, const ConfStruct& b);

// ------------------------------------------------------------- residual

template <class L>
Restricted<L> residual(const Structure<L>& c, const EventSet& x) {
  if (!c.contains(x)) {
    throw Error(ErrorKind::NotAConfiguration, format_config(x) + " is not a configuration");
  }
  EventSet used;
  std::vector<EventSet> futures;
  for (const auto& y : c.configurations()) {
    if (x.subset_of(y)) {
      futures.push_back(y - x);
      used = used | (y - x);
    }
  }
  Restricted<L> r;
  std::vector<std::size_t> renumber(c.event_count(), Structure<L>::npos);
  std::vector<typename Structure<L>::Event> events;
  used.for_each([&](std::size_t e) {
    renumber[e] = events.size();
    events.push_back(c.events()[e]);
    r.original.push_back(e);
  });
  std::vector<EventSet> configs;
  for (const auto& f : futures) {
    EventSet z;
    f.for_each([&](std::size_t e) { z.insert(renumber[e]); });
    configs.push_back(z);
  }
  r.structure = Structure<L>(std::move(events), std::move(configs));
  return r;
}

// ------------------------------------------------------------- causality

class CausalOrder {
 public:
  CausalOrder(EventSet x, std::vector<EventSet> down) : x_(x), down_(std::move(down)) {}
  const EventSet& configuration() const { return x_; }
  // e1 <= e2 inside the configuration.
  bool leq(std::size_t e1, std::size_t e2) const { return down_[e2].contains(e1); }
  bool less(std::size_t e1, std::size_t e2) const { return e1 != e2 && leq(e1, e2); }
  // All events below e (e included).
  const EventSet& down(std::size_t e) const { return down_[e]; }

 private:
  EventSet x_;
  std::vector<EventSet> down_;  // indexed by event, meaningful for e in x
};

template <class L>
CausalOrder causal_order(const Structure<L>& c, const EventSet& x) {
  if (!c.contains(x)) {
    throw Error(ErrorKind::NotAConfiguration, format_config(x) + " is not a configuration");
  }
  std::vector<EventSet> down(c.event_count());
  std::vector<bool> first(c.event_count(), true);
  for (const auto& z : c.configurations()) {
    if (!z.subset_of(x)) continue;
    z.for_each([&](std::size_t e) {
      down[e] = first[e] ? z : (down[e] & z);
      first[e] = false;
    });
  }
  return CausalOrder(x, std::move(down));
}

// ------------------------------------------------------------- transitions

struct StructTransition {
  std::size_t event;
  bool forward;
  EventSet target;
};

template <class L>
std::vector<StructTransition> transitions(const Structure<L>& c, const EventSet& x) {
  if (!c.contains(x)) {
    throw Error(ErrorKind::NotAConfiguration, format_config(x) + " is not a configuration");
  }
  std::vector<StructTransition> out;
  for (auto e : c.extensions(x)) out.push_back({e, true, x.with(e)});
  for (auto e : c.retractions(x)) out.push_back({e, false, x.without(e)});
  return out;
}

template <class L>
EventSet minimal_events(const Structure<L>& c) {
  EventSet out;
  for (std::size_t e = 0; e < c.event_count(); ++e) {
    if (c.contains(EventSet{}.with(e))) out.insert(e);
  }
  return out;
}

// ------------------------------------------------------------- morphisms

// E1 subset E2, C1 subset C2 and labels agree, under the alignment mapping
// events of `small` to events of `big`.
template <class L>
bool is_substructure(const Structure<L>& small, const Structure<L>& big,
                     const std::vector<std::size_t>& alignment) {
  if (alignment.size() != small.event_count()) return false;
  EventSet image;
  for (std::size_t e = 0; e < alignment.size(); ++e) {
    const std::size_t f = alignment[e];
    if (f >= big.event_count() || image.contains(f)) return false;
    if (!(small.label(e) == big.label(f))) return false;
    image.insert(f);
  }
  for (const auto& x : small.configurations()) {
    EventSet y;
    x.for_each([&](std::size_t e) { y.insert(alignment[e]); });
    if (!big.contains(y)) return false;
  }
  return true;
}

// Alignment by equal provenance tags.
template <class L>
bool is_substructure(const Structure<L>& small, const Structure<L>& big) {
  std::vector<std::size_t> alignment;
  for (std::size_t e = 0; e < small.event_count(); ++e) {
    auto f = big.find_tag(small.tag(e));
    if (!f) return false;
    alignment.push_back(*f);
  }
  return is_substructure(small, big, alignment);
}

namespace detail {

template <class L>
struct EmbeddingSearch {
  const Structure<L>& from;
  const Structure<L>& to;
  bool bijective;
  std::vector<std::size_t> order;             // events of `from` in assignment order
  std::vector<std::vector<std::size_t>> due;  // configs completed at each position
  std::vector<std::size_t> map;
  std::vector<bool> used;
  std::vector<std::size_t> sig_from, sig_to;

  static std::vector<std::size_t> signature(const Structure<L>& c) {
    // number of configurations containing e, times a large factor, plus the
    // cardinality of the smallest configuration containing e
    std::vector<std::size_t> s(c.event_count(), 0);
    std::vector<std::size_t> depth(c.event_count(), EventSet::kCapacity + 1);
    for (const auto& x : c.configurations()) {
      x.for_each([&](std::size_t e) {
        s[e] += 1;
        depth[e] = std::min(depth[e], x.size());
      });
    }
    for (std::size_t e = 0; e < s.size(); ++e) s[e] = s[e] * 256 + depth[e];
    return s;
  }

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = from.event_count();
    if (bijective) {
      if (n != to.event_count() || from.config_count() != to.config_count()) return std::nullopt;
      sig_from = signature(from);
      sig_to = signature(to);
    }
    // order events by the smallest configuration that contains them
    std::vector<std::size_t> rank(n, EventSet::kCapacity + 1);
    for (const auto& x : from.configurations()) {
      x.for_each([&](std::size_t e) { rank[e] = std::min(rank[e], x.size()); });
    }
    order.resize(n);
    for (std::size_t e = 0; e < n; ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    due.assign(n + 1, {});
    for (std::size_t i = 0; i < from.config_count(); ++i) {
      const auto& x = from.configurations()[i];
      std::size_t last = 0;
      bool any = false;
      x.for_each([&](std::size_t e) {
        last = std::max(last, pos[e]);
        any = true;
      });
      due[any ? last + 1 : 0].push_back(i);
    }
    if (!from.configurations().empty() && !due[0].empty() && !to.contains(EventSet{})) {
      return std::nullopt;
    }
    map.assign(n, 0);
    used.assign(to.event_count(), false);
    if (search(0)) return map;
    return std::nullopt;
  }

  bool configs_ok(std::size_t level) const {
    for (auto i : due[level]) {
      EventSet y;
      from.configurations()[i].for_each([&](std::size_t e) { y.insert(map[e]); });
      if (!to.contains(y)) return false;
    }
    return true;
  }

  bool search(std::size_t i) {
    if (i == order.size()) return true;
    const std::size_t e = order[i];
    for (std::size_t f = 0; f < to.event_count(); ++f) {
      if (used[f] || !(from.label(e) == to.label(f))) continue;
      if (bijective && sig_from[e] != sig_to[f]) continue;
      map[e] = f;
      used[f] = true;
      if (configs_ok(i + 1) && search(i + 1)) return true;
      used[f] = false;
    }
    return false;
  }
};

}  // namespace detail

// Injective, label-preserving event map sending every configuration of
// `from` to a configuration of `to`.
template <class L>
std::optional<std::vector<std::size_t>> find_embedding(const Structure<L>& from,
                                                       const Structure<L>& to) {
  detail::EmbeddingSearch<L> s{from, to, false, {}, {}, {}, {}, {}, {}};
  return s.run();
}

template <class L>
std::optional<std::vector<std::size_t>> find_isomorphism(const Structure<L>& a,
                                                         const Structure<L>& b) {
  detail::EmbeddingSearch<L> s{a, b, true, {}, {}, {}, {}, {}, {}};
  return s.run();
}

template <class L>
bool isomorphic(const Structure<L>& a, const Structure<L>& b) {
  return find_isomorphism(a, b).has_value();
}

// Equal event tags, labels and configurations (after aligning by tag).
template <class L>
bool structurally_equal(const Structure<L>& a, const Structure<L>& b) {
  return a.event_count() == b.event_count() && a.config_count() == b.config_count() &&
         is_substructure(a, b);
}

// Checks the three morphism conditions for a partial event map.
template <class L1, class L2, class SameLabel>
bool is_morphism(const Structure<L1>& from, const Structure<L2>& to,
                 const std::vector<std::optional<std::size_t>>& map, SameLabel same_label) {
  if (map.size() != from.event_count()) return false;
  for (const auto& x : from.configurations()) {
    EventSet image;
    bool injective = true;
    x.for_each([&](std::size_t e) {
      if (!map[e]) return;
      if (image.contains(*map[e])) injective = false;
      image.insert(*map[e]);
      if (!same_label(from.label(e), to.label(*map[e]))) injective = false;
    });
    if (!injective || !to.contains(image)) return false;
  }
  return true;
}

inline EventSet apply_map(const EventSet& x, const std::vector<std::optional<std::size_t>>& map) {
  EventSet y;
  x.for_each([&](std::size_t e) {
    if (map[e]) y.insert(*map[e]);
  });
  return y;
}

}  // namespace revccs
