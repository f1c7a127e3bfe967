#pragma once

// Denotations: CCS terms as configuration structures, RCCS terms as
// addresses inside the denotation of their origin, context projections.

#include <optional>
#include <string>
#include <vector>

#include "revccs/confstruct.hpp"
#include "revccs/rccs.hpp"
#include "revccs/syntax.hpp"

namespace revccs {

ConfStruct encode_ccs(const CcsTerm& p);

// π_{C,P}: events of ⟦C[P]⟧ to events of ⟦P⟧ (nullopt for context events).
struct ContextProjection {
  ConfStruct whole;
  ConfStruct part;
  std::vector<std::optional<std::size_t>> map;
};
ContextProjection project(const Context& c, const CcsTerm& p);

// Morphism check for a projection: configurations map to configurations,
// locally injective, labels agree except where a process event was
// synchronised with the context (tau in `whole`).
bool is_projection_morphism(const ContextProjection& proj);

// Two distinct events enabled at the same configuration with the same label.
struct AutoViolation {
  bool concurrent = false;  // both fit in one configuration; else in conflict
  EventSet at;
  std::size_t first = 0;
  std::size_t second = 0;
  Action label;
  std::string describe() const;
};
std::optional<AutoViolation> detect_auto_conflict_or_concurrency(const ConfStruct& c);

// Throws PreconditionViolated unless p is collapsed and its denotation is
// free of auto-concurrency and auto-conflict.
void check_encoding_preconditions(const CcsTerm& p, const CollapseOptions& options = {});

struct TraceStep {
  TransitionLabel label;
  RccsTerm target;
};

// Follows forward steps from `start`, choosing at each step the unique
// extension x+{e} with the step's label whose residual embeds ⟦ε(target)⟧.
// NoMatchingEvent / AmbiguousEvent when zero or several candidates remain.
EventSet address(const ConfStruct& origin, const std::vector<TraceStep>& trace,
                 EventSet start = {});

// A forward-only trace from lift(origin(r)) to r.
std::vector<TraceStep> forward_trace(const RccsTerm& r);

struct Address {
  ConfStruct origin;
  EventSet current;
};

Address encode_rccs(const RccsTerm& r, const CollapseOptions& options = {});

// Address of r inside an already computed origin denotation.
EventSet address_in(const ConfStruct& origin, const RccsTerm& r);

struct CorrespondenceReport {
  bool ok = true;
  std::size_t lts_steps = 0;
  std::size_t structure_steps = 0;
  std::vector<std::string> failures;
  // Throws CorrespondenceFailure carrying the first failure.
  void require_ok() const;
};

// Every LTS step of r moves the address by one event with the same label and
// direction, and every such move of the address is realised by an LTS step.
CorrespondenceReport check_operational_correspondence(const RccsTerm& r,
                                                      const CollapseOptions& options = {});

}  // namespace revccs
