#pragma once

// Scripted replay: "fwd a; fwd 3:'b; bwd 3; bwd".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revccs/confstruct.hpp"
#include "revccs/rccs.hpp"

namespace revccs {

struct ScriptCommand {
  Direction direction = Direction::Forward;
  std::optional<EventId> id;
  std::optional<Action> action;  // forward only
};

// Commands separated by ';' or newlines. Syntax errors carry offsets.
std::vector<ScriptCommand> parse_step_script(std::string_view text);

struct ScriptState {
  RccsTerm term;
  std::optional<TransitionLabel> via;  // empty for the initial state
  std::optional<EventSet> address;     // when the origin admits one
};

// `fwd a` takes the first forward step labelled a; `fwd i:a` also names the
// new identifier i (which must be unused); `bwd i` undoes identifier i;
// `bwd` undoes the largest undoable identifier. InvalidArgument when a
// command has no matching step.
std::vector<ScriptState> run_step_script(const RccsTerm& start,
                                         const std::vector<ScriptCommand>& script,
                                         const CollapseOptions& options = {});

}  // namespace revccs
