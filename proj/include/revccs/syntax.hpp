#pragma once

// Finite CCS terms, one-hole contexts, their concrete syntax and the
// collapse normalisation.

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace revccs {

enum class ActionKind : std::uint8_t { Input, Output, Tau };

struct Action {
  ActionKind kind = ActionKind::Tau;
  std::string channel;  // empty for tau

  static Action input(std::string name) { return {ActionKind::Input, std::move(name)}; }
  static Action output(std::string name) { return {ActionKind::Output, std::move(name)}; }
  static Action tau() { return {ActionKind::Tau, {}}; }

  bool is_tau() const { return kind == ActionKind::Tau; }
  Action dual() const;
  // "a", "'a" or "tau"
  std::string to_string() const;

  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;
};

// Parses "a", "'a" or "tau". Reserved names ("#c0") are accepted here.
Action parse_action(std::string_view text);

// Names starting with this character never come out of the user grammar;
// context synthesis draws fresh barb channels from it.
inline constexpr char kReservedNamePrefix = '#';

class CcsTerm {
 public:
  struct Nil;
  struct Prefix;
  struct Sum;
  struct Par;
  struct Restrict;
  using Node = std::variant<Nil, Prefix, Sum, Par, Restrict>;

  CcsTerm();

  static CcsTerm nil();
  static CcsTerm prefix(Action action, CcsTerm body);
  static CcsTerm sum(Action left_action, CcsTerm left_body, Action right_action,
                     CcsTerm right_body);
  static CcsTerm par(CcsTerm left, CcsTerm right);
  static CcsTerm restrict(std::string name, CcsTerm body);

  const Node& node() const;

  template <class T>
  const T* as() const;

  bool is_nil() const;

  friend bool operator==(const CcsTerm& a, const CcsTerm& b);
  friend std::strong_ordering operator<=>(const CcsTerm& a, const CcsTerm& b);

 private:
  explicit CcsTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct CcsTerm::Nil {};
struct CcsTerm::Prefix {
  Action action;
  CcsTerm body;
};
// Binary guarded sum: left.action . left.body + right.action . right.body
struct CcsTerm::Sum {
  Action left_action;
  CcsTerm left_body;
  Action right_action;
  CcsTerm right_body;
};
struct CcsTerm::Par {
  CcsTerm left;
  CcsTerm right;
};
struct CcsTerm::Restrict {
  std::string name;
  CcsTerm body;
};

inline const CcsTerm::Node& CcsTerm::node() const { return *node_; }
template <class T>
const T* CcsTerm::as() const {
  return std::get_if<T>(node_.get());
}

// A term with exactly one hole. Sums are guarded on both sides, so the hole
// of a sum context always sits under the prefix of its branch.
class Context {
 public:
  struct Hole;
  struct Prefix;
  struct Sum;
  struct Par;
  struct Restrict;
  using Node = std::variant<Hole, Prefix, Sum, Par, Restrict>;

  Context();  // the bare hole

  static Context hole();
  static Context prefix(Action action, Context body);
  static Context sum(Action hole_action, Context hole_body, Action other_action,
                     CcsTerm other_body, bool hole_on_left = true);
  static Context par(Context hole_side, CcsTerm other, bool hole_on_left = true);
  static Context restrict(std::string name, Context body);

  const Node& node() const;
  template <class T>
  const T* as() const;
  bool is_hole() const;

  friend bool operator==(const Context& a, const Context& b);

 private:
  explicit Context(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Context::Hole {};
struct Context::Prefix {
  Action action;
  Context body;
};
struct Context::Sum {
  Action hole_action;
  Context hole_body;
  Action other_action;
  CcsTerm other_body;
  bool hole_on_left = true;
};
struct Context::Par {
  Context hole_side;
  CcsTerm other;
  bool hole_on_left = true;
};
struct Context::Restrict {
  std::string name;
  Context body;
};

inline const Context::Node& Context::node() const { return *node_; }
template <class T>
const T* Context::as() const {
  return std::get_if<T>(node_.get());
}

struct ParseOptions {
  bool allow_reserved_names = false;
};

CcsTerm parse(std::string_view text, const ParseOptions& options = {});
Context parse_context(std::string_view text, const ParseOptions& options = {});

std::string print(const CcsTerm& term);
std::string print(const Context& context);

// Indented tree dump used by the CLI's parse command.
std::string dump_ast(const CcsTerm& term);

struct CollapseOptions {
  // collapse(a.P | a.Q) = a.collapse(P) when collapse(P) = collapse(Q).
  // This rule drops a parallel component, so it can be switched off.
  bool parallel_rule = true;
};

CcsTerm collapse(const CcsTerm& term, const CollapseOptions& options = {});
bool is_collapsed(const CcsTerm& term, const CollapseOptions& options = {});

CcsTerm instantiate(const Context& context, const CcsTerm& term);

std::set<std::string> free_names(const CcsTerm& term);
std::set<std::string> free_names(const Context& context);
// Every channel name occurring in the term, bound or free.
std::set<std::string> all_names(const CcsTerm& term);

// Capture-avoiding renaming of the free occurrences of `from`.
CcsTerm rename_free(const CcsTerm& term, const std::string& from, const std::string& to);

// Representative of the CCS structural congruence class: parallel
// components are flattened, stripped of 0 and sorted; sum branches are
// sorted; restrictions of names that are not free are dropped.
CcsTerm ccs_normal_form(const CcsTerm& term);
bool ccs_congruent(const CcsTerm& a, const CcsTerm& b);

// Number of prefixes (including each sum branch) in the term.
std::size_t prefix_count(const CcsTerm& term);

}  // namespace revccs
