#include "revccs/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "revccs/errors.hpp"

namespace revccs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::IncoherentTerm: return "IncoherentTerm";
    case ErrorKind::NotAConfiguration: return "NotAConfiguration";
    case ErrorKind::NoMatchingEvent: return "NoMatchingEvent";
    case ErrorKind::AmbiguousEvent: return "AmbiguousEvent";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CorrespondenceFailure: return "CorrespondenceFailure";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// ---------------------------------------------------------------- actions

Action Action::dual() const {
  switch (kind) {
    case ActionKind::Input: return output(channel);
    case ActionKind::Output: return input(channel);
    case ActionKind::Tau: return tau();
  }
  return tau();
}

std::string Action::to_string() const {
  switch (kind) {
    case ActionKind::Input: return channel;
    case ActionKind::Output: return "'" + channel;
    case ActionKind::Tau: return "tau";
  }
  return "tau";
}

// ---------------------------------------------------------------- terms

CcsTerm::CcsTerm() : CcsTerm(nil()) {}

CcsTerm CcsTerm::nil() {
  static const auto shared = std::make_shared<const Node>(Nil{});
  return CcsTerm(shared);
}

CcsTerm CcsTerm::prefix(Action action, CcsTerm body) {
  return CcsTerm(std::make_shared<const Node>(Prefix{std::move(action), std::move(body)}));
}

CcsTerm CcsTerm::sum(Action left_action, CcsTerm left_body, Action right_action,
                     CcsTerm right_body) {
  return CcsTerm(std::make_shared<const Node>(Sum{std::move(left_action), std::move(left_body),
                                                  std::move(right_action),
                                                  std::move(right_body)}));
}

CcsTerm CcsTerm::par(CcsTerm left, CcsTerm right) {
  return CcsTerm(std::make_shared<const Node>(Par{std::move(left), std::move(right)}));
}

CcsTerm CcsTerm::restrict(std::string name, CcsTerm body) {
  return CcsTerm(std::make_shared<const Node>(Restrict{std::move(name), std::move(body)}));
}

bool CcsTerm::is_nil() const { return std::holds_alternative<Nil>(*node_); }

std::strong_ordering operator<=>(const CcsTerm& a, const CcsTerm& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto ia = a.node_->index();
  const auto ib = b.node_->index();
  if (ia != ib) return ia <=> ib;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(*b.node_);
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return std::strong_ordering::equal;
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          if (auto c = x.action <=> y.action; c != 0) return c;
          return x.body <=> y.body;
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          if (auto c = x.left_action <=> y.left_action; c != 0) return c;
          if (auto c = x.left_body <=> y.left_body; c != 0) return c;
          if (auto c = x.right_action <=> y.right_action; c != 0) return c;
          return x.right_body <=> y.right_body;
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          if (auto c = x.left <=> y.left; c != 0) return c;
          return x.right <=> y.right;
        } else {
          if (auto c = x.name <=> y.name; c != 0) return c;
          return x.body <=> y.body;
        }
      },
      *a.node_);
}

bool operator==(const CcsTerm& a, const CcsTerm& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------- contexts

Context::Context() : Context(hole()) {}

Context Context::hole() {
  static const auto shared = std::make_shared<const Node>(Hole{});
  return Context(shared);
}

Context Context::prefix(Action action, Context body) {
  return Context(std::make_shared<const Node>(Prefix{std::move(action), std::move(body)}));
}

Context Context::sum(Action hole_action, Context hole_body, Action other_action,
                     CcsTerm other_body, bool hole_on_left) {
  return Context(std::make_shared<const Node>(Sum{std::move(hole_action), std::move(hole_body),
                                                   std::move(other_action),
                                                   std::move(other_body), hole_on_left}));
}

Context Context::par(Context hole_side, CcsTerm other, bool hole_on_left) {
  return Context(
      std::make_shared<const Node>(Par{std::move(hole_side), std::move(other), hole_on_left}));
}

Context Context::restrict(std::string name, Context body) {
  return Context(std::make_shared<const Node>(Restrict{std::move(name), std::move(body)}));
}

bool Context::is_hole() const { return std::holds_alternative<Hole>(*node_); }

bool operator==(const Context& a, const Context& b) { return print(a) == print(b); }

// ---------------------------------------------------------------- parser

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Parse tree that may contain holes; converted to CcsTerm or Context.
struct Raw {
  enum class Kind { Nil, Hole, Prefix, Sum, Par, Restrict } kind = Kind::Nil;
  Action action;
  Action other_action;
  std::string name;
  std::unique_ptr<Raw> first;
  std::unique_ptr<Raw> second;
  int holes = 0;
  std::size_t position = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options, bool allow_holes)
      : text_(text), options_(options), allow_holes_(allow_holes) {}

  std::unique_ptr<Raw> parse_all() {
    auto result = parse_par();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::Syntax) const {
    throw SyntaxError(kind, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_text(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Name at the current position without consuming, or empty.
  std::size_t scan_name(std::size_t at) const {
    std::size_t p = at;
    if (p < text_.size() && text_[p] == kReservedNamePrefix) {
      ++p;
      std::size_t start = p;
      while (p < text_.size() && is_name_char(text_[p])) ++p;
      return p == start ? at : p;
    }
    if (p < text_.size() && is_name_start(text_[p])) {
      while (p < text_.size() && is_name_char(text_[p])) ++p;
    }
    return p;
  }

  std::string read_name() {
    skip_ws();
    const std::size_t start = pos_;
    const std::size_t end = scan_name(pos_);
    if (end == start) fail("expected a channel name");
    std::string name(text_.substr(start, end - start));
    if (name == "tau") fail("'tau' is not a channel name");
    if (name[0] == kReservedNamePrefix && !options_.allow_reserved_names) {
      fail("reserved name '" + name + "'");
    }
    pos_ = end;
    return name;
  }

  bool at_hole() {
    return peek_text("[]") || peek_text("[.]") || peek_text("[\xC2\xB7]");
  }

  std::unique_ptr<Raw> parse_par() {
    auto left = parse_sum();
    if (!peek('|')) return left;
    const std::size_t at = pos_;
    ++pos_;
    auto right = parse_par();
    auto node = std::make_unique<Raw>();
    node->kind = Raw::Kind::Par;
    node->position = at;
    node->holes = left->holes + right->holes;
    node->first = std::move(left);
    node->second = std::move(right);
    return node;
  }

  std::unique_ptr<Raw> parse_sum() {
    auto left = parse_unit();
    if (!peek('+')) return left;
    const std::size_t at = pos_;
    ++pos_;
    auto right = parse_unit();
    if (peek('+')) fail("a sum has exactly two prefixed branches", ErrorKind::Arity);
    if (left->kind != Raw::Kind::Prefix || right->kind != Raw::Kind::Prefix) {
      pos_ = at;
      fail("both branches of a sum must be prefixed", ErrorKind::Arity);
    }
    auto node = std::make_unique<Raw>();
    node->kind = Raw::Kind::Sum;
    node->position = at;
    node->action = left->action;
    node->other_action = right->action;
    node->holes = left->holes + right->holes;
    node->first = std::move(left->first);
    node->second = std::move(right->first);
    return node;
  }

  std::unique_ptr<Raw> parse_unit() {
    skip_ws();
    auto node = std::make_unique<Raw>();
    node->position = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      node->kind = Raw::Kind::Nil;
      return node;
    }
    if (at_hole()) {
      if (!allow_holes_) fail("hole outside of a context");
      pos_ += peek_text("[]") ? 2 : (peek_text("[.]") ? 3 : 4);
      node->kind = Raw::Kind::Hole;
      node->holes = 1;
      return node;
    }
    if (c == '(' && is_restriction_ahead()) {
      ++pos_;
      node->name = read_name();
      expect(')');
      node->kind = Raw::Kind::Restrict;
      node->first = parse_unit();
      node->holes = node->first->holes;
      return node;
    }
    if (c == '(' || c == '{') {
      const char close = c == '(' ? ')' : '}';
      ++pos_;
      auto inner = parse_par();
      expect(close);
      return inner;
    }
    // prefix
    node->action = read_action();
    expect('.');
    node->kind = Raw::Kind::Prefix;
    node->first = parse_unit();
    node->holes = node->first->holes;
    return node;
  }

  bool is_restriction_ahead() {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    const std::size_t end = scan_name(p);
    if (end == p) return false;
    p = end;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == ')';
  }

  Action read_action() {
    skip_ws();
    if (peek('\'')) {
      ++pos_;
      return Action::output(read_name());
    }
    const std::size_t end = scan_name(pos_);
    if (text_.substr(pos_, end - pos_) == "tau") {
      pos_ = end;
      return Action::tau();
    }
    return Action::input(read_name());
  }

  std::string_view text_;
  ParseOptions options_;
  bool allow_holes_;
  std::size_t pos_ = 0;
};

CcsTerm to_term(const Raw& raw) {
  switch (raw.kind) {
    case Raw::Kind::Nil: return CcsTerm::nil();
    case Raw::Kind::Prefix: return CcsTerm::prefix(raw.action, to_term(*raw.first));
    case Raw::Kind::Sum:
      return CcsTerm::sum(raw.action, to_term(*raw.first), raw.other_action,
                          to_term(*raw.second));
    case Raw::Kind::Par: return CcsTerm::par(to_term(*raw.first), to_term(*raw.second));
    case Raw::Kind::Restrict: return CcsTerm::restrict(raw.name, to_term(*raw.first));
    case Raw::Kind::Hole: break;
  }
  throw SyntaxError(ErrorKind::Syntax, raw.position, "hole outside of a context");
}

Context to_context(const Raw& raw) {
  switch (raw.kind) {
    case Raw::Kind::Hole: return Context::hole();
    case Raw::Kind::Prefix: return Context::prefix(raw.action, to_context(*raw.first));
    case Raw::Kind::Restrict: return Context::restrict(raw.name, to_context(*raw.first));
    case Raw::Kind::Sum:
      if (raw.first->holes == 1) {
        return Context::sum(raw.action, to_context(*raw.first), raw.other_action,
                            to_term(*raw.second), true);
      }
      return Context::sum(raw.other_action, to_context(*raw.second), raw.action,
                          to_term(*raw.first), false);
    case Raw::Kind::Par:
      if (raw.first->holes == 1) {
        return Context::par(to_context(*raw.first), to_term(*raw.second), true);
      }
      return Context::par(to_context(*raw.second), to_term(*raw.first), false);
    case Raw::Kind::Nil: break;
  }
  throw SyntaxError(ErrorKind::Syntax, raw.position, "context has no hole");
}

}  // namespace

Action parse_action(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text == "tau") return Action::tau();
  bool output = false;
  if (!text.empty() && text.front() == '\'') {
    output = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw SyntaxError(ErrorKind::Syntax, 0, "empty action");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool ok = is_name_char(text[i]) || (i == 0 && text[i] == kReservedNamePrefix);
    if (!ok) throw SyntaxError(ErrorKind::Syntax, i, "bad action '" + std::string(text) + "'");
  }
  std::string name(text);
  return output ? Action::output(name) : Action::input(name);
}

CcsTerm parse(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options, false);
  return to_term(*parser.parse_all());
}

Context parse_context(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options, true);
  auto raw = parser.parse_all();
  if (raw->holes != 1) {
    throw SyntaxError(ErrorKind::Syntax, 0,
                      "a context needs exactly one hole, found " + std::to_string(raw->holes));
  }
  return to_context(*raw);
}

// ---------------------------------------------------------------- printer

namespace {

enum class Level { Par = 0, Sum = 1, Unit = 2 };

std::string print_term(const CcsTerm& t, Level level);

std::string wrap(std::string s) { return "(" + s + ")"; }

std::string print_branch(const Action& a, const CcsTerm& body) {
  return a.to_string() + "." + print_term(body, Level::Unit);
}

std::string print_term(const CcsTerm& t, Level level) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return "0";
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          return print_branch(n.action, n.body);
        } else if constexpr (std::is_same_v<T, CcsTerm::Restrict>) {
          return "(" + n.name + ")" + print_term(n.body, Level::Unit);
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          std::string s =
              print_branch(n.left_action, n.left_body) + " + " +
              print_branch(n.right_action, n.right_body);
          return level > Level::Par ? wrap(s) : s;
        } else {
          // Left operand is wrapped when it is itself a parallel (or a sum, for
          // readability); the right operand continues the right-nested chain.
          std::string left = print_term(n.left, Level::Unit);
          std::string right = n.right.template as<CcsTerm::Par>()
                                  ? print_term(n.right, Level::Par)
                                  : print_term(n.right, Level::Unit);
          std::string s = left + " | " + right;
          return level > Level::Par ? wrap(s) : s;
        }
      },
      t.node());
}

std::string print_context(const Context& c, Level level) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Context::Hole>) {
          return "[\xC2\xB7]";
        } else if constexpr (std::is_same_v<T, Context::Prefix>) {
          return n.action.to_string() + "." + print_context(n.body, Level::Unit);
        } else if constexpr (std::is_same_v<T, Context::Restrict>) {
          return "(" + n.name + ")" + print_context(n.body, Level::Unit);
        } else if constexpr (std::is_same_v<T, Context::Sum>) {
          std::string hole = n.hole_action.to_string() + "." + print_context(n.hole_body, Level::Unit);
          std::string other = print_branch(n.other_action, n.other_body);
          std::string s = n.hole_on_left ? hole + " + " + other : other + " + " + hole;
          return level > Level::Par ? wrap(s) : s;
        } else {
          std::string hole_text = n.hole_side.template as<Context::Par>() && !n.hole_on_left
                                      ? print_context(n.hole_side, Level::Par)
                                      : print_context(n.hole_side, Level::Unit);
          std::string other_text = n.other.template as<CcsTerm::Par>() && n.hole_on_left
                                       ? print_term(n.other, Level::Par)
                                       : print_term(n.other, Level::Unit);
          std::string s = n.hole_on_left ? hole_text + " | " + other_text
                                         : other_text + " | " + hole_text;
          return level > Level::Par ? wrap(s) : s;
        }
      },
      c.node());
}

void dump(const CcsTerm& t, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          out << pad << "Nil\n";
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          out << pad << "Prefix " << n.action.to_string() << "\n";
          dump(n.body, depth + 1, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          out << pad << "Sum\n";
          out << pad << "  Branch " << n.left_action.to_string() << "\n";
          dump(n.left_body, depth + 2, out);
          out << pad << "  Branch " << n.right_action.to_string() << "\n";
          dump(n.right_body, depth + 2, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          out << pad << "Par\n";
          dump(n.left, depth + 1, out);
          dump(n.right, depth + 1, out);
        } else {
          out << pad << "Restrict " << n.name << "\n";
          dump(n.body, depth + 1, out);
        }
      },
      t.node());
}

}  // namespace

std::string print(const CcsTerm& term) { return print_term(term, Level::Par); }
std::string print(const Context& context) { return print_context(context, Level::Par); }

std::string dump_ast(const CcsTerm& term) {
  std::ostringstream out;
  dump(term, 0, out);
  return out.str();
}

// ---------------------------------------------------------------- collapse

CcsTerm collapse(const CcsTerm& term, const CollapseOptions& options) {
  return std::visit(
      [&](const auto& n) -> CcsTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return term;
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          return CcsTerm::prefix(n.action, collapse(n.body, options));
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          CcsTerm l = collapse(n.left_body, options);
          CcsTerm r = collapse(n.right_body, options);
          if (n.left_action == n.right_action && l == r) return CcsTerm::prefix(n.left_action, l);
          return CcsTerm::sum(n.left_action, l, n.right_action, r);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          CcsTerm l = collapse(n.left, options);
          CcsTerm r = collapse(n.right, options);
          if (options.parallel_rule) {
            const auto* lp = l.template as<CcsTerm::Prefix>();
            const auto* rp = r.template as<CcsTerm::Prefix>();
            if (lp && rp && lp->action == rp->action && lp->body == rp->body) return l;
          }
          return CcsTerm::par(l, r);
        } else {
          return CcsTerm::restrict(n.name, collapse(n.body, options));
        }
      },
      term.node());
}

bool is_collapsed(const CcsTerm& term, const CollapseOptions& options) {
  return collapse(term, options) == term;
}

// ---------------------------------------------------------------- contexts

CcsTerm instantiate(const Context& context, const CcsTerm& term) {
  return std::visit(
      [&](const auto& n) -> CcsTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Context::Hole>) {
          return term;
        } else if constexpr (std::is_same_v<T, Context::Prefix>) {
          return CcsTerm::prefix(n.action, instantiate(n.body, term));
        } else if constexpr (std::is_same_v<T, Context::Sum>) {
          CcsTerm filled = instantiate(n.hole_body, term);
          if (n.hole_on_left) return CcsTerm::sum(n.hole_action, filled, n.other_action, n.other_body);
          return CcsTerm::sum(n.other_action, n.other_body, n.hole_action, filled);
        } else if constexpr (std::is_same_v<T, Context::Par>) {
          CcsTerm filled = instantiate(n.hole_side, term);
          return n.hole_on_left ? CcsTerm::par(filled, n.other) : CcsTerm::par(n.other, filled);
        } else {
          return CcsTerm::restrict(n.name, instantiate(n.body, term));
        }
      },
      context.node());
}

// ---------------------------------------------------------------- names

namespace {

void collect_free(const CcsTerm& t, std::set<std::string>& bound, std::set<std::string>& out) {
  auto add = [&](const Action& a) {
    if (!a.is_tau() && !bound.count(a.channel)) out.insert(a.channel);
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          add(n.action);
          collect_free(n.body, bound, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          add(n.left_action);
          add(n.right_action);
          collect_free(n.left_body, bound, out);
          collect_free(n.right_body, bound, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          collect_free(n.left, bound, out);
          collect_free(n.right, bound, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Restrict>) {
          const bool fresh = bound.insert(n.name).second;
          collect_free(n.body, bound, out);
          if (fresh) bound.erase(n.name);
        }
      },
      t.node());
}

void collect_all(const CcsTerm& t, std::set<std::string>& out) {
  auto add = [&](const Action& a) {
    if (!a.is_tau()) out.insert(a.channel);
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          add(n.action);
          collect_all(n.body, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          add(n.left_action);
          add(n.right_action);
          collect_all(n.left_body, out);
          collect_all(n.right_body, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          collect_all(n.left, out);
          collect_all(n.right, out);
        } else if constexpr (std::is_same_v<T, CcsTerm::Restrict>) {
          out.insert(n.name);
          collect_all(n.body, out);
        }
      },
      t.node());
}

}  // namespace

std::set<std::string> free_names(const CcsTerm& term) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(term, bound, out);
  return out;
}

std::set<std::string> free_names(const Context& context) {
  return std::visit(
      [&](const auto& n) -> std::set<std::string> {
        using T = std::decay_t<decltype(n)>;
        std::set<std::string> out;
        auto add = [&](const Action& a) {
          if (!a.is_tau()) out.insert(a.channel);
        };
        if constexpr (std::is_same_v<T, Context::Prefix>) {
          add(n.action);
          out.merge(free_names(n.body));
        } else if constexpr (std::is_same_v<T, Context::Sum>) {
          add(n.hole_action);
          add(n.other_action);
          out.merge(free_names(n.hole_body));
          out.merge(free_names(n.other_body));
        } else if constexpr (std::is_same_v<T, Context::Par>) {
          out.merge(free_names(n.hole_side));
          out.merge(free_names(n.other));
        } else if constexpr (std::is_same_v<T, Context::Restrict>) {
          out = free_names(n.body);
          out.erase(n.name);
        }
        return out;
      },
      context.node());
}

std::set<std::string> all_names(const CcsTerm& term) {
  std::set<std::string> out;
  collect_all(term, out);
  return out;
}

CcsTerm rename_free(const CcsTerm& term, const std::string& from, const std::string& to) {
  auto rename = [&](const Action& a) {
    if (!a.is_tau() && a.channel == from) return Action{a.kind, to};
    return a;
  };
  return std::visit(
      [&](const auto& n) -> CcsTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return term;
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          return CcsTerm::prefix(rename(n.action), rename_free(n.body, from, to));
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          return CcsTerm::sum(rename(n.left_action), rename_free(n.left_body, from, to),
                              rename(n.right_action), rename_free(n.right_body, from, to));
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          return CcsTerm::par(rename_free(n.left, from, to), rename_free(n.right, from, to));
        } else {
          if (n.name == from) return term;
          if (n.name == to) {
            // Alpha-convert the binder out of the way first.
            std::string fresh = n.name + "@";
            const auto used = all_names(n.body);
            int k = 1;
            while (used.count(fresh + std::to_string(k)) || fresh + std::to_string(k) == from) ++k;
            fresh += std::to_string(k);
            CcsTerm body = rename_free(n.body, n.name, fresh);
            return CcsTerm::restrict(fresh, rename_free(body, from, to));
          }
          return CcsTerm::restrict(n.name, rename_free(n.body, from, to));
        }
      },
      term.node());
}

// ---------------------------------------------------------------- congruence

namespace {

void flatten_par(const CcsTerm& t, std::vector<CcsTerm>& out) {
  if (const auto* p = t.as<CcsTerm::Par>()) {
    flatten_par(p->left, out);
    flatten_par(p->right, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

namespace {

// Would renaming free `from` to `to` put an occurrence under a binder of `to`?
bool captured(const CcsTerm& t, const std::string& from, const std::string& to) {
  if (const auto* p = t.as<CcsTerm::Prefix>()) return captured(p->body, from, to);
  if (const auto* s = t.as<CcsTerm::Sum>()) {
    return captured(s->left_body, from, to) || captured(s->right_body, from, to);
  }
  if (const auto* p = t.as<CcsTerm::Par>()) return captured(p->left, from, to) || captured(p->right, from, to);
  if (const auto* r = t.as<CcsTerm::Restrict>()) {
    if (r->name == from) return false;
    if (r->name == to) return free_names(r->body).count(from) != 0;
    return captured(r->body, from, to);
  }
  return false;
}

}  // namespace

CcsTerm ccs_normal_form(const CcsTerm& term) {
  return std::visit(
      [&](const auto& n) -> CcsTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return term;
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          return CcsTerm::prefix(n.action, ccs_normal_form(n.body));
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          CcsTerm l = ccs_normal_form(n.left_body);
          CcsTerm r = ccs_normal_form(n.right_body);
          CcsTerm lp = CcsTerm::prefix(n.left_action, l);
          CcsTerm rp = CcsTerm::prefix(n.right_action, r);
          if (rp < lp) return CcsTerm::sum(n.right_action, r, n.left_action, l);
          return CcsTerm::sum(n.left_action, l, n.right_action, r);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          std::vector<CcsTerm> parts;
          flatten_par(term, parts);
          std::vector<CcsTerm> kept;
          for (const auto& p : parts) {
            CcsTerm nf = ccs_normal_form(p);
            std::vector<CcsTerm> sub;
            flatten_par(nf, sub);
            for (auto& s : sub) {
              if (!s.is_nil()) kept.push_back(std::move(s));
            }
          }
          if (kept.empty()) return CcsTerm::nil();
          std::sort(kept.begin(), kept.end());
          CcsTerm acc = kept.back();
          for (std::size_t i = kept.size() - 1; i-- > 0;) acc = CcsTerm::par(kept[i], acc);
          return acc;
        } else {
          CcsTerm body = ccs_normal_form(n.body);
          if (!free_names(body).count(n.name)) return body;
          // Names renamed apart ("x@k") go back to their base when nothing captures it.
          if (const auto at = n.name.find('@'); at != std::string::npos) {
            const std::string base = n.name.substr(0, at);
            if (!free_names(body).count(base) && !captured(body, n.name, base)) {
              return ccs_normal_form(CcsTerm::restrict(base, rename_free(body, n.name, base)));
            }
          }
          auto avoids = [&](const Action& a) { return a.is_tau() || a.channel != n.name; };
          if (const auto* pre = body.as<CcsTerm::Prefix>(); pre && avoids(pre->action)) {
            return CcsTerm::prefix(pre->action, ccs_normal_form(CcsTerm::restrict(n.name, pre->body)));
          }
          if (const auto* sum = body.as<CcsTerm::Sum>();
              sum && avoids(sum->left_action) && avoids(sum->right_action)) {
            return ccs_normal_form(CcsTerm::sum(sum->left_action, CcsTerm::restrict(n.name, sum->left_body),
                                                sum->right_action, CcsTerm::restrict(n.name, sum->right_body)));
          }
          return CcsTerm::restrict(n.name, body);
        }
      },
      term.node());
}

bool ccs_congruent(const CcsTerm& a, const CcsTerm& b) {
  return ccs_normal_form(a) == ccs_normal_form(b);
}

std::size_t prefix_count(const CcsTerm& term) {
  return std::visit(
      [&](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, CcsTerm::Nil>) {
          return 0;
        } else if constexpr (std::is_same_v<T, CcsTerm::Prefix>) {
          return 1 + prefix_count(n.body);
        } else if constexpr (std::is_same_v<T, CcsTerm::Sum>) {
          return 2 + prefix_count(n.left_body) + prefix_count(n.right_body);
        } else if constexpr (std::is_same_v<T, CcsTerm::Par>) {
          return prefix_count(n.left) + prefix_count(n.right);
        } else {
          return prefix_count(n.body);
        }
      },
      term.node());
}

}  // namespace revccs
