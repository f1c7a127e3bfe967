#pragma once

// Back-and-forth equivalences on configuration structures and terms,
// the F/B stratification, a brute-force hhpb oracle and discriminating
// context synthesis.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revccs/confstruct.hpp"
#include "revccs/rccs.hpp"
#include "revccs/syntax.hpp"

namespace revccs {

// Bijection between two configurations, as (left event, right event) pairs
// sorted by left event.
using EventMap = std::vector<std::pair<std::size_t, std::size_t>>;

struct Triple {
  EventSet x1;
  EventSet x2;
  EventMap f;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Label preserving; order preserving in both directions.
bool is_order_iso(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                  const EventSet& x2, const EventMap& f);
// Label preserving; e <= e' implies f(e) <= f(e').
bool is_monotone(const ConfStruct& c1, const EventSet& x1, const ConfStruct& c2,
                 const EventSet& x2, const EventMap& f);

struct StratifiedRelation {
  std::size_t k = 0;  // largest configuration of the left structure
  std::vector<std::vector<Triple>> F;
  std::vector<std::vector<Triple>> B;
};

StratifiedRelation build_stratification(const ConfStruct& c1, const ConfStruct& c2);

// Least stratum n where some x1 of cardinality n has no partner in F_n ∩ B_n;
// `kind` is 'F' when the partner is already missing from F_n.
struct StratumFailure {
  std::size_t stratum = 0;
  char kind = 'F';
  EventSet x1;
};
std::optional<StratumFailure> first_failing_stratum(const ConfStruct& c1,
                                                    const StratifiedRelation& s);

struct EquivalenceVerdict {
  bool related = false;
  std::optional<std::size_t> failing_stratum;
  std::optional<char> failing_kind;
  std::optional<EventSet> unmatched;
  // When related: the relation found (triples for hhpb, pairs with empty f
  // for the barbed game). When not: the pair the game could not keep.
  std::vector<Triple> relation;
  std::optional<std::string> context;
  std::string note;
};

EquivalenceVerdict hhpb(const ConfStruct& c1, const ConfStruct& c2);

// Re-checks a related verdict's relation: root present, every triple an
// order isomorphism, transfer conditions closed inside the relation.
bool replay_hhpb_witness(const ConfStruct& c1, const ConfStruct& c2,
                         const std::vector<Triple>& relation);

struct OracleOptions {
  std::size_t max_events = 10;  // combined event count
};

struct OracleResult {
  bool related = false;
  std::vector<Triple> maximal;  // every triple the spoiler cannot win from
};

// Exhaustive game over all (x1, x2, f) with f a label and order preserving
// bijection; shares no code with hhpb. BoundExceeded above max_events.
OracleResult hhpb_oracle_game(const ConfStruct& c1, const ConfStruct& c2,
                              const OracleOptions& options = {});
bool hhpb_oracle(const ConfStruct& c1, const ConfStruct& c2, const OracleOptions& options = {});

EquivalenceVerdict barbed_bf_bisim_structs(const ConfStruct& c1, const ConfStruct& c2);

// Game over the reachable state graphs; identifiers are not matched.
EquivalenceVerdict barbed_bf_bisim_terms(const RccsTerm& r, const RccsTerm& s,
                                         std::size_t max_states = 200000);

// Plain forward strong bisimulation on CCS transitions.
bool forward_strong_bisim(const CcsTerm& p1, const CcsTerm& p2, std::size_t max_states = 200000);

struct SynthesisOptions {
  std::size_t max_context = 8;  // parallel components besides the hole
  bool strict = false;          // enforce collapse and auto-freedom on inputs
};

struct SynthesisResult {
  Context context;
  EventSet witness;  // the configuration of ⟦p1⟧ the schema was built from
  std::vector<std::string> transcript;
};

// PreconditionViolated when the encodings are hhpb-related (or, with
// `strict`, when an input breaks the encoding preconditions).
std::optional<SynthesisResult> synthesize_context(const CcsTerm& p1, const CcsTerm& p2,
                                                  const SynthesisOptions& options = {});

// Contexts used to probe congruence: the hole, prefix wrappers, tau guard,
// parallel observers on every free name, restrictions and fresh-barb sums.
std::vector<Context> generate_context_family(const CcsTerm& p1, const CcsTerm& p2);

struct CongruenceCase {
  Context context;
  bool hhpb_related = false;
  bool barbed_related = false;
};

struct CongruenceReport {
  bool hhpb_before = false;
  bool barbed_before = false;
  // hhpb before implies hhpb and barbed bisimilarity after, for every context
  bool consistent = true;
  std::vector<CongruenceCase> cases;
  std::string scope = "over context family";
};

CongruenceReport check_congruence_closure(const CcsTerm& p1, const CcsTerm& p2,
                                          const std::vector<Context>& contexts);

}  // namespace revccs
