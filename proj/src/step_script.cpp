#include "revccs/step_script.hpp"

#include <algorithm>
#include <cctype>

#include "revccs/encoding.hpp"
#include "revccs/errors.hpp"

namespace revccs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RccsTerm rename_id(const RccsTerm& r, EventId from, EventId to) {
  if (const auto* m = r.as<RccsTerm::Monitored>()) {
    Memory memory = m->memory;
    for (auto& e : memory) {
      if (!e.is_fork() && e.id == from) e.id = to;
    }
    return RccsTerm::monitored(std::move(memory), m->body);
  }
  if (const auto* p = r.as<RccsTerm::Par>()) {
    return RccsTerm::par(rename_id(p->left, from, to), rename_id(p->right, from, to));
  }
  const auto* s = r.as<RccsTerm::Restrict>();
  return RccsTerm::restrict(s->name, rename_id(s->body, from, to));
}

EventId parse_id(std::string_view text, std::size_t offset) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw SyntaxError(ErrorKind::Syntax, offset, "expected an identifier, got '" + std::string(text) + "'");
  }
  const long v = std::stol(std::string(text));
  if (v <= 0) throw SyntaxError(ErrorKind::Syntax, offset, "identifiers are positive");
  return static_cast<EventId>(v);
}

}  // namespace

std::vector<ScriptCommand> parse_step_script(std::string_view text) {
  std::vector<ScriptCommand> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    const std::string_view cmd = trim(raw);
    const std::size_t offset = start + (cmd.empty() ? 0 : static_cast<std::size_t>(cmd.data() - raw.data()));
    start = end + 1;
    if (cmd.empty()) continue;
    const std::size_t sp = cmd.find_first_of(" \t");
    const std::string_view verb = cmd.substr(0, sp);
    const std::string_view arg = sp == std::string_view::npos ? std::string_view{} : trim(cmd.substr(sp));
    ScriptCommand c;
    if (verb == "fwd") {
      if (arg.empty()) throw SyntaxError(ErrorKind::Syntax, offset, "fwd needs an action");
      std::string_view act = arg;
      if (const auto colon = arg.find(':'); colon != std::string_view::npos) {
        c.id = parse_id(trim(arg.substr(0, colon)), offset);
        act = trim(arg.substr(colon + 1));
      }
      try {
        c.action = parse_action(act);
      } catch (const Error& e) {
        throw SyntaxError(ErrorKind::Syntax, offset, e.what());
      }
    } else if (verb == "bwd") {
      c.direction = Direction::Backward;
      if (!arg.empty()) c.id = parse_id(arg, offset);
    } else {
      throw SyntaxError(ErrorKind::Syntax, offset, "unknown command '" + std::string(verb) + "'");
    }
    out.push_back(c);
  }
  return out;
}

std::vector<ScriptState> run_step_script(const RccsTerm& start,
                                         const std::vector<ScriptCommand>& script,
                                         const CollapseOptions& options) {
  std::optional<ConfStruct> origin_structure;
  try {
    const CcsTerm o = origin(start);
    check_encoding_preconditions(o, options);
    origin_structure = encode_ccs(o);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated) throw;
  }
  auto locate = [&](const RccsTerm& r) -> std::optional<EventSet> {
    if (!origin_structure) return std::nullopt;
    return address_in(*origin_structure, r);
  };

  std::vector<ScriptState> out{{start, std::nullopt, locate(start)}};
  RccsTerm current = start;
  for (const auto& cmd : script) {
    std::optional<Step> chosen;
    if (cmd.direction == Direction::Forward) {
      if (cmd.id && ids(current).count(*cmd.id)) {
        throw Error(ErrorKind::InvalidArgument, "identifier " + std::to_string(*cmd.id) + " is already used");
      }
      for (const auto& s : forward_steps(current)) {
        if (s.label.action == *cmd.action) {
          chosen = s;
          break;
        }
      }
      if (!chosen) {
        throw Error(ErrorKind::InvalidArgument, "no forward step on " + cmd.action->to_string() +
                                                    " from " + print(current));
      }
      if (cmd.id && *cmd.id != chosen->label.id) {
        chosen->target = rename_id(chosen->target, chosen->label.id, *cmd.id);
        chosen->label.id = *cmd.id;
      }
    } else {
      const auto steps = backward_steps(current);
      for (const auto& s : steps) {
        if (cmd.id ? s.label.id == *cmd.id : (!chosen || s.label.id > chosen->label.id)) {
          chosen = s;
          if (cmd.id) break;
        }
      }
      if (!chosen) {
        throw Error(ErrorKind::InvalidArgument,
                    cmd.id ? "identifier " + std::to_string(*cmd.id) + " cannot be undone from " + print(current)
                           : "nothing to undo in " + print(current));
      }
    }
    current = chosen->target;
    out.push_back({current, chosen->label, locate(current)});
  }
  return out;
}

}  // namespace revccs
