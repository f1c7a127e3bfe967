#include "revccs/revccs.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <sstream>

#include "revccs/encoding.hpp"
#include "revccs/equivalences.hpp"
#include "revccs/errors.hpp"
#include "revccs/serialize/export.hpp"
#include "revccs/step_script.hpp"

struct revccs_term {
  revccs::CcsTerm term;
};

struct revccs_structure {
  revccs::ConfStruct structure;
};

namespace {

thread_local std::string last_error;

revccs_status status_of(revccs::ErrorKind kind) {
  using revccs::ErrorKind;
  switch (kind) {
    case ErrorKind::Syntax: return REVCCS_ERR_SYNTAX;
    case ErrorKind::Arity: return REVCCS_ERR_ARITY;
    case ErrorKind::IncoherentTerm: return REVCCS_ERR_INCOHERENT;
    case ErrorKind::NotAConfiguration: return REVCCS_ERR_NOT_A_CONFIGURATION;
    case ErrorKind::NoMatchingEvent: return REVCCS_ERR_NO_MATCHING_EVENT;
    case ErrorKind::AmbiguousEvent: return REVCCS_ERR_AMBIGUOUS_EVENT;
    case ErrorKind::BoundExceeded: return REVCCS_ERR_BOUND_EXCEEDED;
    case ErrorKind::PreconditionViolated: return REVCCS_ERR_PRECONDITION;
    case ErrorKind::CorrespondenceFailure: return REVCCS_ERR_CORRESPONDENCE;
    case ErrorKind::CapacityExceeded: return REVCCS_ERR_CAPACITY;
    case ErrorKind::InvalidArgument: return REVCCS_ERR_INVALID_ARGUMENT;
  }
  return REVCCS_ERR_INTERNAL;
}

template <class F>
revccs_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return REVCCS_OK;
  } catch (const revccs::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return REVCCS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return REVCCS_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw revccs::Error(revccs::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

revccs_options resolve(const revccs_options* options) {
  revccs_options o;
  revccs_default_options(&o);
  if (options) o = *options;
  if (o.max_events == 0 || o.max_context == 0) {
    throw revccs::Error(revccs::ErrorKind::InvalidArgument, "bounds must be positive");
  }
  return o;
}

revccs::CollapseOptions collapse_options(const revccs_options& o) {
  revccs::CollapseOptions c;
  c.parallel_rule = o.par_collapse != 0;
  return c;
}

}  // namespace

extern "C" {

void revccs_default_options(revccs_options* options) {
  if (!options) return;
  options->par_collapse = 1;
  options->max_events = 10;
  options->max_context = 8;
}

const char* revccs_last_error(void) { return last_error.c_str(); }

const char* revccs_status_name(revccs_status status) {
  switch (status) {
    case REVCCS_OK: return "ok";
    case REVCCS_ERR_SYNTAX: return "syntax";
    case REVCCS_ERR_ARITY: return "arity";
    case REVCCS_ERR_INCOHERENT: return "incoherent-term";
    case REVCCS_ERR_NOT_A_CONFIGURATION: return "not-a-configuration";
    case REVCCS_ERR_NO_MATCHING_EVENT: return "no-matching-event";
    case REVCCS_ERR_AMBIGUOUS_EVENT: return "ambiguous-event";
    case REVCCS_ERR_BOUND_EXCEEDED: return "bound-exceeded";
    case REVCCS_ERR_PRECONDITION: return "precondition-violated";
    case REVCCS_ERR_CORRESPONDENCE: return "correspondence-failure";
    case REVCCS_ERR_CAPACITY: return "capacity-exceeded";
    case REVCCS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case REVCCS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void revccs_string_free(char* s) { std::free(s); }

revccs_status revccs_parse(const char* text, revccs_term** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new revccs_term{revccs::parse(text)};
  });
}

void revccs_term_free(revccs_term* term) { delete term; }

revccs_status revccs_term_print(const revccs_term* term, char** out) {
  return guarded([&] {
    require(term, "term");
    require(out, "out");
    *out = duplicate(revccs::print(term->term));
  });
}

revccs_status revccs_term_dump(const revccs_term* term, char** out) {
  return guarded([&] {
    require(term, "term");
    require(out, "out");
    *out = duplicate(revccs::dump_ast(term->term));
  });
}

revccs_status revccs_encode(const revccs_term* term, const revccs_options* options,
                            revccs_structure** out) {
  return guarded([&] {
    require(term, "term");
    require(out, "out");
    const revccs_options o = resolve(options);
    revccs::check_encoding_preconditions(term->term, collapse_options(o));
    *out = new revccs_structure{revccs::encode_ccs(term->term)};
  });
}

void revccs_structure_free(revccs_structure* structure) { delete structure; }

size_t revccs_structure_event_count(const revccs_structure* structure) {
  return structure ? structure->structure.event_count() : 0;
}

size_t revccs_structure_config_count(const revccs_structure* structure) {
  return structure ? structure->structure.config_count() : 0;
}

revccs_status revccs_structure_export(const revccs_structure* structure, revccs_format format,
                                      char** out) {
  return guarded([&] {
    require(structure, "structure");
    require(out, "out");
    switch (format) {
      case REVCCS_FORMAT_JSON: *out = duplicate(revccs::to_json(structure->structure)); return;
      case REVCCS_FORMAT_DOT: *out = duplicate(revccs::to_dot(structure->structure)); return;
      case REVCCS_FORMAT_TEXT: *out = duplicate(revccs::to_text(structure->structure)); return;
    }
    throw revccs::Error(revccs::ErrorKind::InvalidArgument, "unknown format");
  });
}

revccs_status revccs_step(const revccs_term* term, const char* script,
                          const revccs_options* options, revccs_format format, char** out) {
  return guarded([&] {
    require(term, "term");
    require(script, "script");
    require(out, "out");
    const revccs_options o = resolve(options);
    const auto states = revccs::run_step_script(revccs::lift(term->term),
                                                revccs::parse_step_script(script),
                                                collapse_options(o));
    std::ostringstream s;
    if (format == REVCCS_FORMAT_JSON) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& st : states) {
        nlohmann::ordered_json addr = nullptr;
        if (st.address) {
          addr = nlohmann::ordered_json::array();
          for (auto e : st.address->elements()) addr.push_back("e" + std::to_string(e));
        }
        a.push_back({{"term", revccs::print(st.term)},
                     {"via", st.via ? nlohmann::ordered_json(st.via->to_string()) : nlohmann::ordered_json(nullptr)},
                     {"address", addr}});
      }
      s << a.dump() << "\n";
    } else if (format == REVCCS_FORMAT_DOT) {
      s << "digraph replay {\n  node [shape=box];\n";
      for (std::size_t i = 0; i < states.size(); ++i) {
        s << "  s" << i << " [label=\"" << revccs::print(states[i].term) << "\"];\n";
        if (i > 0) s << "  s" << i - 1 << " -> s" << i << " [label=\"" << states[i].via->to_string() << "\"];\n";
      }
      s << "}\n";
    } else {
      for (std::size_t i = 0; i < states.size(); ++i) {
        s << "state " << i;
        if (states[i].via) s << " via " << states[i].via->to_string();
        s << ": " << revccs::print(states[i].term) << "\n";
        s << "  address: " << (states[i].address ? revccs::format_config(*states[i].address) : "n/a")
          << "\n";
      }
    }
    *out = duplicate(s.str());
  });
}

revccs_status revccs_state_graph(const revccs_term* term, char** out) {
  return guarded([&] {
    require(term, "term");
    require(out, "out");
    *out = duplicate(revccs::to_dot(revccs::reachable_states(revccs::lift(term->term))));
  });
}

revccs_status revccs_check(revccs_check_kind kind, const revccs_term* p1, const revccs_term* p2,
                           const revccs_options* options, int* related, char** verdict) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(related, "related");
    const revccs_options o = resolve(options);
    revccs::EquivalenceVerdict v;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    if (kind == REVCCS_CHECK_STRONG) {
      v.related = revccs::forward_strong_bisim(p1->term, p2->term);
    } else {
      const auto c1 = revccs::encode_ccs(p1->term);
      const auto c2 = revccs::encode_ccs(p2->term);
      if (kind == REVCCS_CHECK_HHPB) {
        v = revccs::hhpb(c1, c2);
        if (c1.event_count() + c2.event_count() <= o.max_events) {
          revccs::OracleOptions oo;
          oo.max_events = o.max_events;
          extra["oracle"] = revccs::hhpb_oracle(c1, c2, oo);
        } else {
          extra["oracle"] = nullptr;
        }
      } else if (kind == REVCCS_CHECK_BFBARB) {
        v = revccs::barbed_bf_bisim_structs(c1, c2);
        extra["term_game"] = revccs::barbed_bf_bisim_terms(revccs::lift(p1->term),
                                                           revccs::lift(p2->term))
                                 .related;
      } else {
        throw revccs::Error(revccs::ErrorKind::InvalidArgument, "unknown check kind");
      }
    }
    *related = v.related ? 1 : 0;
    if (verdict) {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(revccs::to_json(v));
      for (auto it = extra.begin(); it != extra.end(); ++it) j["witness"][it.key()] = it.value();
      *verdict = duplicate(j.dump());
    }
  });
}

revccs_status revccs_discriminate(const revccs_term* p1, const revccs_term* p2,
                                  const revccs_options* options, char** context,
                                  char** transcript) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(context, "context");
    const revccs_options o = resolve(options);
    revccs::SynthesisOptions so;
    so.max_context = o.max_context;
    const auto r = revccs::synthesize_context(p1->term, p2->term, so);
    if (!r) {
      throw revccs::Error(revccs::ErrorKind::BoundExceeded,
                          "no discriminating context within " + std::to_string(o.max_context) +
                              " components");
    }
    *context = duplicate(revccs::print(r->context));
    if (transcript) {
      std::string t;
      for (const auto& line : r->transcript) t += line + "\n";
      *transcript = duplicate(t);
    }
  });
}

revccs_status revccs_congruence(const revccs_term* p1, const revccs_term* p2,
                                const char* extra_contexts, int* consistent, char** report) {
  return guarded([&] {
    require(p1, "p1");
    require(p2, "p2");
    require(consistent, "consistent");
    auto family = revccs::generate_context_family(p1->term, p2->term);
    if (extra_contexts) {
      std::istringstream in(extra_contexts);
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        family.push_back(revccs::parse_context(line));
      }
    }
    const auto r = revccs::check_congruence_closure(p1->term, p2->term, family);
    *consistent = r.consistent ? 1 : 0;
    if (report) {
      nlohmann::ordered_json cases = nlohmann::ordered_json::array();
      for (const auto& c : r.cases) {
        cases.push_back({{"context", revccs::print(c.context)},
                         {"hhpb", c.hhpb_related},
                         {"bfbarb", c.barbed_related}});
      }
      nlohmann::ordered_json j{{"scope", r.scope},
                       {"hhpb", r.hhpb_before},
                       {"bfbarb", r.barbed_before},
                       {"consistent", r.consistent},
                       {"cases", cases}};
      *report = duplicate(j.dump());
    }
  });
}

}  // extern "C"
