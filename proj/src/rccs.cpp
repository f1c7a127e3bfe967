#include "revccs/rccs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "revccs/errors.hpp"

namespace revccs {

bool operator==(const MemoryEntry& a, const MemoryEntry& b) {
  if (a.kind != b.kind) return false;
  if (a.is_fork()) return true;
  return a.id == b.id && a.action == b.action && a.discarded == b.discarded && a.side == b.side;
}

namespace {

std::string print_entry(const MemoryEntry& e) {
  if (e.is_fork()) return "fork";
  return "<" + std::to_string(e.id) + "," + e.action.to_string() + "," + print(e.discarded) + ">";
}

bool needs_wrap(const CcsTerm& t) { return t.as<CcsTerm::Sum>() || t.as<CcsTerm::Par>(); }

}  // namespace

std::string print(const Memory& memory) {
  std::string s;
  for (const auto& e : memory) s += print_entry(e) + ".";
  return s + "[]";
}

// ---------------------------------------------------------------- terms

RccsTerm RccsTerm::monitored(Memory memory, CcsTerm body) {
  return RccsTerm(std::make_shared<const Node>(Monitored{std::move(memory), std::move(body)}));
}

RccsTerm RccsTerm::par(RccsTerm left, RccsTerm right) {
  return RccsTerm(std::make_shared<const Node>(Par{std::move(left), std::move(right)}));
}

RccsTerm RccsTerm::restrict(std::string name, RccsTerm body) {
  return RccsTerm(std::make_shared<const Node>(Restrict{std::move(name), std::move(body)}));
}

bool operator==(const RccsTerm& a, const RccsTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  if (const auto* m = a.as<RccsTerm::Monitored>()) {
    const auto* n = b.as<RccsTerm::Monitored>();
    return m->memory == n->memory && m->body == n->body;
  }
  if (const auto* p = a.as<RccsTerm::Par>()) {
    const auto* q = b.as<RccsTerm::Par>();
    return p->left == q->left && p->right == q->right;
  }
  const auto* r = a.as<RccsTerm::Restrict>();
  const auto* s = b.as<RccsTerm::Restrict>();
  return r->name == s->name && r->body == s->body;
}

namespace {

std::string print_rccs(const RccsTerm& t, bool operand) {
  if (const auto* m = t.as<RccsTerm::Monitored>()) {
    std::string body = print(m->body);
    if (needs_wrap(m->body)) body = "(" + body + ")";
    std::string s = print(m->memory) + " |> " + body;
    return operand ? "(" + s + ")" : s;
  }
  if (const auto* p = t.as<RccsTerm::Par>()) {
    std::string right = p->right.as<RccsTerm::Par>() ? print_rccs(p->right, false)
                                                      : print_rccs(p->right, true);
    std::string s = print_rccs(p->left, true) + " | " + right;
    return operand ? "(" + s + ")" : s;
  }
  const auto* r = t.as<RccsTerm::Restrict>();
  return "(" + r->name + ")" + print_rccs(r->body, true);
}

}  // namespace

std::string print(const RccsTerm& term) { return print_rccs(term, false); }

std::string TransitionLabel::to_string() const {
  return std::to_string(id) + ":" + action.to_string() +
         (direction == Direction::Backward ? "-" : "");
}

RccsTerm lift(const CcsTerm& p) { return RccsTerm::monitored({}, p); }

CcsTerm erase(const RccsTerm& r) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) return m->body;
  if (const auto* p = r.as<RccsTerm::Par>()) return CcsTerm::par(erase(p->left), erase(p->right));
  const auto* s = r.as<RccsTerm::Restrict>();
  return CcsTerm::restrict(s->name, erase(s->body));
}

namespace {

void collect_ids(const RccsTerm& r, std::set<EventId>& out) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    for (const auto& e : m->memory) {
      if (!e.is_fork()) out.insert(e.id);
    }
  } else if (const auto* p = r.as<RccsTerm::Par>()) {
    collect_ids(p->left, out);
    collect_ids(p->right, out);
  } else {
    collect_ids(r.as<RccsTerm::Restrict>()->body, out);
  }
}

std::set<std::string> memory_names(const Memory& m) {
  std::set<std::string> out;
  for (const auto& e : m) {
    if (e.is_fork()) continue;
    if (!e.action.is_tau()) out.insert(e.action.channel);
    out.merge(all_names(e.discarded));
  }
  return out;
}

std::string base_name(const std::string& name) {
  const auto at = name.find('@');
  return at == std::string::npos ? name : name.substr(0, at);
}

std::string fresh_variant(const std::string& name, const std::set<std::string>& avoid) {
  const std::string base = base_name(name);
  for (int k = 1;; ++k) {
    std::string candidate = base + "@" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

std::set<EventId> ids(const RccsTerm& r) {
  std::set<EventId> out;
  collect_ids(r, out);
  return out;
}

// ---------------------------------------------------------------- normal forms

RccsTerm distributed_form(const RccsTerm& r) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    if (const auto* p = m->body.as<CcsTerm::Par>()) {
      Memory forked = m->memory;
      forked.insert(forked.begin(), MemoryEntry::fork());
      return RccsTerm::par(distributed_form(RccsTerm::monitored(forked, p->left)),
                           distributed_form(RccsTerm::monitored(forked, p->right)));
    }
    if (const auto* res = m->body.as<CcsTerm::Restrict>()) {
      const auto names = memory_names(m->memory);
      if (!names.count(res->name)) {
        return RccsTerm::restrict(res->name,
                                  distributed_form(RccsTerm::monitored(m->memory, res->body)));
      }
      std::set<std::string> avoid = names;
      avoid.merge(all_names(res->body));
      avoid.insert(res->name);
      const std::string fresh = fresh_variant(res->name, avoid);
      CcsTerm body = rename_free(res->body, res->name, fresh);
      return RccsTerm::restrict(fresh, distributed_form(RccsTerm::monitored(m->memory, body)));
    }
    return r;
  }
  if (const auto* p = r.as<RccsTerm::Par>()) {
    return RccsTerm::par(distributed_form(p->left), distributed_form(p->right));
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  return RccsTerm::restrict(s->name, distributed_form(s->body));
}

RccsTerm merged_form(const RccsTerm& r) {
  if (r.as<RccsTerm::Monitored>()) return r;
  if (const auto* p = r.as<RccsTerm::Par>()) {
    RccsTerm left = merged_form(p->left);
    RccsTerm right = merged_form(p->right);
    const auto* lm = left.as<RccsTerm::Monitored>();
    const auto* rm = right.as<RccsTerm::Monitored>();
    if (lm && rm && !lm->memory.empty() && !rm->memory.empty() && lm->memory[0].is_fork() &&
        rm->memory[0].is_fork() &&
        std::equal(lm->memory.begin() + 1, lm->memory.end(), rm->memory.begin() + 1,
                   rm->memory.end())) {
      Memory tail(lm->memory.begin() + 1, lm->memory.end());
      return RccsTerm::monitored(std::move(tail), CcsTerm::par(lm->body, rm->body));
    }
    return RccsTerm::par(left, right);
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  RccsTerm body = merged_form(s->body);
  if (const auto* m = body.as<RccsTerm::Monitored>()) {
    const auto names = memory_names(m->memory);
    if (!names.count(s->name)) {
      std::string name = s->name;
      CcsTerm inner = m->body;
      const std::string base = base_name(name);
      if (base != name && !names.count(base) && !free_names(inner).count(base)) {
        inner = rename_free(inner, name, base);
        name = base;
      }
      return RccsTerm::monitored(m->memory, CcsTerm::restrict(name, inner));
    }
  }
  return RccsTerm::restrict(s->name, body);
}

namespace {

void rename_ids(const RccsTerm& r, std::map<EventId, EventId>& renaming) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    for (auto it = m->memory.rbegin(); it != m->memory.rend(); ++it) {
      if (!it->is_fork() && !renaming.count(it->id)) {
        const EventId next = static_cast<EventId>(renaming.size()) + 1;
        renaming.emplace(it->id, next);
      }
    }
  } else if (const auto* p = r.as<RccsTerm::Par>()) {
    rename_ids(p->left, renaming);
    rename_ids(p->right, renaming);
  } else {
    rename_ids(r.as<RccsTerm::Restrict>()->body, renaming);
  }
}

RccsTerm apply_ids(const RccsTerm& r, const std::map<EventId, EventId>& renaming) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    Memory memory = m->memory;
    for (auto& e : memory) {
      if (!e.is_fork()) e.id = renaming.at(e.id);
    }
    return RccsTerm::monitored(std::move(memory), m->body);
  }
  if (const auto* p = r.as<RccsTerm::Par>()) {
    return RccsTerm::par(apply_ids(p->left, renaming), apply_ids(p->right, renaming));
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  return RccsTerm::restrict(s->name, apply_ids(s->body, renaming));
}

// Restrictions go back into single monitors where the memory allows, and
// monitor bodies are put in CCS normal form. Hoisting a restriction out of a
// monitor forgets whether it stood above or below the last prefix; the CCS
// normal form moves restrictions past prefixes on other channels, so both
// readings get the same key.
RccsTerm settle_restrictions(const RccsTerm& r) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    return RccsTerm::monitored(m->memory, ccs_normal_form(m->body));
  }
  if (const auto* p = r.as<RccsTerm::Par>()) {
    return RccsTerm::par(settle_restrictions(p->left), settle_restrictions(p->right));
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  RccsTerm body = settle_restrictions(s->body);
  if (const auto* m = body.as<RccsTerm::Monitored>()) {
    const auto names = memory_names(m->memory);
    if (!names.count(s->name)) {
      std::string name = s->name;
      CcsTerm inner = m->body;
      const std::string base = base_name(name);
      if (base != name && !names.count(base) && !free_names(inner).count(base)) {
        inner = rename_free(inner, name, base);
        name = base;
      }
      return RccsTerm::monitored(m->memory, ccs_normal_form(CcsTerm::restrict(name, inner)));
    }
  }
  return RccsTerm::restrict(s->name, body);
}

}  // namespace

RccsTerm congruence_normal_form(const RccsTerm& r) {
  RccsTerm d = settle_restrictions(distributed_form(r));
  std::map<EventId, EventId> renaming;
  rename_ids(d, renaming);
  return apply_ids(d, renaming);
}

std::string canonical_key(const RccsTerm& r) { return print(congruence_normal_form(r)); }

// ---------------------------------------------------------------- leaves

namespace {

// One step along the path from the root to a monitor.
struct PathStep {
  enum class Kind { Left, Right, Restrict } kind;
  std::string name;
};

struct Leaf {
  std::vector<PathStep> path;
  const RccsTerm::Monitored* monitor;
};

void collect_leaves(const RccsTerm& r, std::vector<PathStep>& path, std::vector<Leaf>& out) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    out.push_back({path, m});
  } else if (const auto* p = r.as<RccsTerm::Par>()) {
    path.push_back({PathStep::Kind::Left, {}});
    collect_leaves(p->left, path, out);
    path.back().kind = PathStep::Kind::Right;
    collect_leaves(p->right, path, out);
    path.pop_back();
  } else {
    const auto* s = r.as<RccsTerm::Restrict>();
    path.push_back({PathStep::Kind::Restrict, s->name});
    collect_leaves(s->body, path, out);
    path.pop_back();
  }
}

std::vector<Leaf> leaves(const RccsTerm& r) {
  std::vector<Leaf> out;
  std::vector<PathStep> path;
  collect_leaves(r, path, out);
  return out;
}

bool restricted_from(const std::vector<PathStep>& path, std::size_t from, const Action& a) {
  if (a.is_tau()) return false;
  for (std::size_t i = from; i < path.size(); ++i) {
    if (path[i].kind == PathStep::Kind::Restrict && path[i].name == a.channel) return true;
  }
  return false;
}

std::size_t common_prefix(const std::vector<PathStep>& a, const std::vector<PathStep>& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i].kind == b[i].kind && a[i].name == b[i].name) ++i;
  return i;
}

RccsTerm replace_at(const RccsTerm& r, const std::vector<PathStep>& path, std::size_t depth,
                    const RccsTerm& leaf) {
  if (depth == path.size()) return leaf;
  if (const auto* p = r.as<RccsTerm::Par>()) {
    if (path[depth].kind == PathStep::Kind::Left) {
      return RccsTerm::par(replace_at(p->left, path, depth + 1, leaf), p->right);
    }
    return RccsTerm::par(p->left, replace_at(p->right, path, depth + 1, leaf));
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  return RccsTerm::restrict(s->name, replace_at(s->body, path, depth + 1, leaf));
}

struct Option {
  Action action;
  CcsTerm continuation;
  CcsTerm discarded;
  SumSide side;
};

std::vector<Option> options(const CcsTerm& body) {
  if (const auto* p = body.as<CcsTerm::Prefix>()) {
    return {{p->action, p->body, CcsTerm::nil(), SumSide::None}};
  }
  if (const auto* s = body.as<CcsTerm::Sum>()) {
    return {{s->left_action, s->left_body, CcsTerm::prefix(s->right_action, s->right_body),
             SumSide::Left},
            {s->right_action, s->right_body, CcsTerm::prefix(s->left_action, s->left_body),
             SumSide::Right}};
  }
  return {};
}

EventId fresh_id(const RccsTerm& r) {
  const auto used = ids(r);
  EventId i = 1;
  while (used.count(i)) ++i;
  return i;
}

RccsTerm fire(const Leaf& leaf, EventId id, const Option& o) {
  Memory memory = leaf.monitor->memory;
  memory.insert(memory.begin(), MemoryEntry::past(id, o.action, o.discarded, o.side));
  return RccsTerm::monitored(std::move(memory), o.continuation);
}

// Body restored by undoing the top entry, or nullopt if the entry is malformed.
std::optional<CcsTerm> restore(const MemoryEntry& e, const CcsTerm& body) {
  if (e.discarded.is_nil()) return CcsTerm::prefix(e.action, body);
  const auto* other = e.discarded.as<CcsTerm::Prefix>();
  if (!other) return std::nullopt;
  if (e.side == SumSide::Right) return CcsTerm::sum(other->action, other->body, e.action, body);
  return CcsTerm::sum(e.action, body, other->action, other->body);
}

}  // namespace

std::vector<Step> forward_steps_unchecked(const RccsTerm& r) {
  const RccsTerm d = distributed_form(r);
  const auto ls = leaves(d);
  const EventId id = fresh_id(d);
  std::vector<Step> out;
  std::vector<std::vector<Option>> opts;
  for (const auto& l : ls) opts.push_back(options(l.monitor->body));

  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (const auto& o : opts[i]) {
      if (restricted_from(ls[i].path, 0, o.action)) continue;
      RccsTerm t = replace_at(d, ls[i].path, 0, fire(ls[i], id, o));
      out.push_back({{Direction::Forward, id, o.action}, distributed_form(t)});
    }
  }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const std::size_t lca = common_prefix(ls[i].path, ls[j].path);
      for (const auto& o1 : opts[i]) {
        if (o1.action.is_tau()) continue;
        for (const auto& o2 : opts[j]) {
          if (!(o2.action == o1.action.dual())) continue;
          if (restricted_from(ls[i].path, lca, o1.action) ||
              restricted_from(ls[j].path, lca, o2.action)) {
            continue;
          }
          RccsTerm t = replace_at(d, ls[i].path, 0, fire(ls[i], id, o1));
          t = replace_at(t, ls[j].path, 0, fire(ls[j], id, o2));
          out.push_back({{Direction::Forward, id, Action::tau()}, distributed_form(t)});
        }
      }
    }
  }
  return out;
}

std::vector<Step> backward_steps_unchecked(const RccsTerm& r) {
  const RccsTerm m = merged_form(distributed_form(r));
  const auto ls = leaves(m);
  std::map<EventId, std::vector<std::size_t>> holders;  // leaves containing the id
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::set<EventId> seen;
    for (const auto& e : ls[i].monitor->memory) {
      if (!e.is_fork() && seen.insert(e.id).second) holders[e.id].push_back(i);
    }
  }
  std::vector<Step> out;
  for (const auto& [id, where] : holders) {
    bool on_top = true;
    for (auto i : where) {
      const auto& mem = ls[i].monitor->memory;
      on_top = on_top && !mem.empty() && !mem[0].is_fork() && mem[0].id == id;
      // an id must not also occur deeper in the same memory
      for (std::size_t k = 1; on_top && k < mem.size(); ++k) {
        if (!mem[k].is_fork() && mem[k].id == id) on_top = false;
      }
    }
    if (!on_top) continue;
    auto undo = [&](std::size_t i) -> std::optional<RccsTerm> {
      const auto& mon = *ls[i].monitor;
      auto body = restore(mon.memory[0], mon.body);
      if (!body) return std::nullopt;
      return RccsTerm::monitored(Memory(mon.memory.begin() + 1, mon.memory.end()), *body);
    };
    if (where.size() == 1) {
      const auto& entry = ls[where[0]].monitor->memory[0];
      if (restricted_from(ls[where[0]].path, 0, entry.action)) continue;
      auto leaf = undo(where[0]);
      if (!leaf) continue;
      RccsTerm t = replace_at(m, ls[where[0]].path, 0, *leaf);
      out.push_back({{Direction::Backward, id, entry.action}, distributed_form(t)});
    } else if (where.size() == 2) {
      const auto& a = ls[where[0]];
      const auto& b = ls[where[1]];
      const auto& ea = a.monitor->memory[0];
      const auto& eb = b.monitor->memory[0];
      if (ea.action.is_tau() || !(eb.action == ea.action.dual())) continue;
      const std::size_t lca = common_prefix(a.path, b.path);
      if (restricted_from(a.path, lca, ea.action) || restricted_from(b.path, lca, eb.action)) {
        continue;
      }
      auto la = undo(where[0]);
      auto lb = undo(where[1]);
      if (!la || !lb) continue;
      RccsTerm t = replace_at(m, a.path, 0, *la);
      t = replace_at(t, b.path, 0, *lb);
      out.push_back({{Direction::Backward, id, Action::tau()}, distributed_form(t)});
    }
  }
  return out;
}

std::optional<CcsTerm> as_lifted(const RccsTerm& r) {
  const RccsTerm m = merged_form(distributed_form(r));
  const auto* mon = m.as<RccsTerm::Monitored>();
  if (mon && mon->memory.empty()) return mon->body;
  return std::nullopt;
}

namespace {

std::optional<BacktrackPath> greedy_backtrack(const RccsTerm& r) {
  BacktrackPath path;
  path.states.push_back(r);
  RccsTerm current = r;
  for (;;) {
    auto steps = backward_steps_unchecked(current);
    if (steps.empty()) break;
    // highest identifier first: undoes the most recent event when possible
    auto best = std::max_element(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      return a.label.id < b.label.id;
    });
    path.labels.push_back(best->label);
    current = best->target;
    path.states.push_back(current);
  }
  auto body = as_lifted(current);
  if (!body) return std::nullopt;
  path.origin = *body;
  return path;
}

}  // namespace

bool is_coherent(const RccsTerm& r) {
  if (greedy_backtrack(r)) return true;
  // Backtracking is confluent on coherent terms, so a stuck greedy path
  // already means incoherence; the exhaustive closure below confirms it.
  std::unordered_set<std::string> seen;
  std::deque<RccsTerm> queue{r};
  seen.insert(canonical_key(r));
  while (!queue.empty()) {
    RccsTerm s = queue.front();
    queue.pop_front();
    if (as_lifted(s)) return true;
    for (auto& step : backward_steps_unchecked(s)) {
      if (seen.insert(canonical_key(step.target)).second) queue.push_back(step.target);
    }
  }
  return false;
}

BacktrackPath backtrack_to_origin(const RccsTerm& r) {
  auto path = greedy_backtrack(r);
  if (!path) throw Error(ErrorKind::IncoherentTerm, "term is not coherent: " + print(r));
  return *path;
}

CcsTerm origin(const RccsTerm& r) { return backtrack_to_origin(r).origin; }

std::vector<Step> forward_steps(const RccsTerm& r) {
  if (!is_coherent(r)) throw Error(ErrorKind::IncoherentTerm, "term is not coherent: " + print(r));
  return forward_steps_unchecked(r);
}

std::vector<Step> backward_steps(const RccsTerm& r) {
  if (!is_coherent(r)) throw Error(ErrorKind::IncoherentTerm, "term is not coherent: " + print(r));
  return backward_steps_unchecked(r);
}

bool barb(const RccsTerm& r, const Action& a) {
  for (const auto& s : forward_steps(r)) {
    if (s.label.action == a) return true;
  }
  return false;
}

std::set<Action> barbs(const RccsTerm& r) {
  std::set<Action> out;
  for (const auto& s : forward_steps_unchecked(r)) {
    if (!s.label.action.is_tau()) out.insert(s.label.action);
  }
  return out;
}

std::map<EventId, int> id_occurrences(const RccsTerm& r) {
  const RccsTerm d = distributed_form(r);
  std::map<EventId, std::set<std::string>> suffixes;
  for (const auto& l : leaves(d)) {
    const auto& mem = l.monitor->memory;
    for (std::size_t k = 0; k < mem.size(); ++k) {
      if (mem[k].is_fork()) continue;
      suffixes[mem[k].id].insert(print(Memory(mem.begin() + static_cast<std::ptrdiff_t>(k), mem.end())));
    }
  }
  std::map<EventId, int> out;
  for (const auto& [id, s] : suffixes) out[id] = static_cast<int>(s.size());
  return out;
}

// ---------------------------------------------------------------- state graph

StateGraph reachable_states(const RccsTerm& r, std::size_t max_states) {
  if (!is_coherent(r)) throw Error(ErrorKind::IncoherentTerm, "term is not coherent: " + print(r));
  StateGraph g;
  auto add = [&](const RccsTerm& t) -> std::pair<std::size_t, bool> {
    std::string key = canonical_key(t);
    auto it = g.index.find(key);
    if (it != g.index.end()) return {it->second, false};
    if (g.states.size() >= max_states) {
      throw Error(ErrorKind::BoundExceeded,
                  "state space exceeds " + std::to_string(max_states) + " states");
    }
    const std::size_t idx = g.states.size();
    g.states.push_back(t);
    g.keys.push_back(key);
    g.index.emplace(std::move(key), idx);
    return {idx, true};
  };
  add(r);
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    const RccsTerm s = g.states[i];
    for (const auto& step : forward_steps_unchecked(s)) {
      g.edges.push_back({i, add(step.target).first, step.label});
    }
    for (const auto& step : backward_steps_unchecked(s)) {
      g.edges.push_back({i, add(step.target).first, step.label});
    }
  }
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const StateGraph& graph) {
  std::ostringstream out;
  out << "digraph states {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    out << "  s" << i << " [label=\"" << dot_escape(graph.keys[i]) << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  s" << e.from << " -> s" << e.to << " [label=\"" << dot_escape(e.label.to_string())
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- plain CCS

std::vector<CcsStep> ccs_steps(const CcsTerm& p) {
  std::vector<CcsStep> out;
  if (const auto* pre = p.as<CcsTerm::Prefix>()) {
    out.push_back({pre->action, pre->body});
  } else if (const auto* s = p.as<CcsTerm::Sum>()) {
    out.push_back({s->left_action, s->left_body});
    out.push_back({s->right_action, s->right_body});
  } else if (const auto* par = p.as<CcsTerm::Par>()) {
    const auto left = ccs_steps(par->left);
    const auto right = ccs_steps(par->right);
    for (const auto& l : left) out.push_back({l.action, CcsTerm::par(l.target, par->right)});
    for (const auto& r : right) out.push_back({r.action, CcsTerm::par(par->left, r.target)});
    for (const auto& l : left) {
      if (l.action.is_tau()) continue;
      for (const auto& r : right) {
        if (r.action == l.action.dual()) {
          out.push_back({Action::tau(), CcsTerm::par(l.target, r.target)});
        }
      }
    }
  } else if (const auto* res = p.as<CcsTerm::Restrict>()) {
    for (const auto& s : ccs_steps(res->body)) {
      if (!s.action.is_tau() && s.action.channel == res->name) continue;
      out.push_back({s.action, CcsTerm::restrict(res->name, s.target)});
    }
  }
  return out;
}

}  // namespace revccs
