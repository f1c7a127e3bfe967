#pragma once

// Monitored processes: memories, forward/backward transitions, structural
// normal forms, coherence and origins.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "revccs/syntax.hpp"

namespace revccs {

using EventId = int;

// Position of the fired branch when a sum was consumed.
enum class SumSide : std::uint8_t { None, Left, Right };

struct MemoryEntry {
  enum class Kind : std::uint8_t { Fork, Past };
  Kind kind = Kind::Fork;
  EventId id = 0;
  Action action;
  CcsTerm discarded;  // the erased branch, 0 when the prefix stood alone
  SumSide side = SumSide::None;

  static MemoryEntry fork() { return {}; }
  static MemoryEntry past(EventId id, Action action, CcsTerm discarded = CcsTerm::nil(),
                          SumSide side = SumSide::None) {
    return {Kind::Past, id, std::move(action), std::move(discarded), side};
  }
  bool is_fork() const { return kind == Kind::Fork; }

  friend bool operator==(const MemoryEntry& a, const MemoryEntry& b);
};

// Index 0 is the top of the stack (the most recent entry).
using Memory = std::vector<MemoryEntry>;

std::string print(const Memory& memory);

class RccsTerm {
 public:
  struct Monitored;
  struct Par;
  struct Restrict;
  using Node = std::variant<Monitored, Par, Restrict>;

  static RccsTerm monitored(Memory memory, CcsTerm body);
  static RccsTerm par(RccsTerm left, RccsTerm right);
  static RccsTerm restrict(std::string name, RccsTerm body);

  const Node& node() const;
  template <class T>
  const T* as() const;

  friend bool operator==(const RccsTerm& a, const RccsTerm& b);

 private:
  explicit RccsTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct RccsTerm::Monitored {
  Memory memory;
  CcsTerm body;
};
struct RccsTerm::Par {
  RccsTerm left;
  RccsTerm right;
};
struct RccsTerm::Restrict {
  std::string name;
  RccsTerm body;
};

inline const RccsTerm::Node& RccsTerm::node() const { return *node_; }
template <class T>
const T* RccsTerm::as() const {
  return std::get_if<T>(node_.get());
}

// Printed with "[]" for the empty memory and "|>" for the monitor, e.g.
// "<1,a,0>.fork.[] |> b.0".
std::string print(const RccsTerm& term);

enum class Direction : std::uint8_t { Forward, Backward };

struct TransitionLabel {
  Direction direction = Direction::Forward;
  EventId id = 0;
  Action action;

  // "i:a" forward, "i:a-" backward
  std::string to_string() const;
  friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
};

struct Step {
  TransitionLabel label;
  RccsTerm target;
};

RccsTerm lift(const CcsTerm& p);
CcsTerm erase(const RccsTerm& r);

std::set<EventId> ids(const RccsTerm& r);

// Memories distributed over parallel composition, restrictions hoisted out
// of monitors (alpha-renaming to "x@k" when the name occurs in the memory).
// Identifiers are left untouched.
RccsTerm distributed_form(const RccsTerm& r);

// Inverse direction: monitors sharing a forked memory are merged back and
// restrictions whose name is absent from the memory are pushed inside.
RccsTerm merged_form(const RccsTerm& r);

// distributed_form with identifiers renamed in order of first occurrence
// (left to right, each memory read from its bottom). Structurally congruent
// terms reached by the LTS have equal normal forms.
RccsTerm congruence_normal_form(const RccsTerm& r);
std::string canonical_key(const RccsTerm& r);

// Forward transitions; fresh identifiers are the smallest unused ones.
std::vector<Step> forward_steps(const RccsTerm& r);
std::vector<Step> backward_steps(const RccsTerm& r);

// Same without the coherence check, for callers that already know.
std::vector<Step> forward_steps_unchecked(const RccsTerm& r);
std::vector<Step> backward_steps_unchecked(const RccsTerm& r);

bool is_coherent(const RccsTerm& r);

// A maximal backward path from r to its origin, in backward order: element
// k is the step taken from the k-th term. Throws IncoherentTerm if the path
// does not end in an empty-memory monitor.
struct BacktrackPath {
  std::vector<RccsTerm> states;  // states[0] = r, states.back() = lift(origin)
  std::vector<TransitionLabel> labels;
  CcsTerm origin;
};
BacktrackPath backtrack_to_origin(const RccsTerm& r);

CcsTerm origin(const RccsTerm& r);

// True iff some forward step carries the visible action a.
bool barb(const RccsTerm& r, const Action& a);
std::set<Action> barbs(const RccsTerm& r);

// If the term is (up to merging) a single empty-memory monitor, its body.
std::optional<CcsTerm> as_lifted(const RccsTerm& r);

// Number of distinct memories containing each identifier (shared memory
// below a fork counts once).
std::map<EventId, int> id_occurrences(const RccsTerm& r);

struct StateGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    TransitionLabel label;
  };
  std::vector<RccsTerm> states;  // first term reached in each class; states[0] is the start
  std::vector<std::string> keys;
  std::vector<Edge> edges;
  std::map<std::string, std::size_t> index;
};

// Closure under forward and backward steps. `max_states` guards runaway
// exploration (BoundExceeded).
StateGraph reachable_states(const RccsTerm& r, std::size_t max_states = 200000);

std::string to_dot(const StateGraph& graph);

// Plain CCS transitions (forward only).
struct CcsStep {
  Action action;
  CcsTerm target;
};
std::vector<CcsStep> ccs_steps(const CcsTerm& p);

}  // namespace revccs
