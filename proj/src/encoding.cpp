#include "revccs/encoding.hpp"

#include <algorithm>

#include "revccs/errors.hpp"

namespace revccs {

ConfStruct encode_ccs(const CcsTerm& p) {
  if (p.as<CcsTerm::Nil>()) return ConfStruct{};
  if (const auto* pre = p.as<CcsTerm::Prefix>()) return prefix(pre->action, encode_ccs(pre->body));
  if (const auto* s = p.as<CcsTerm::Sum>()) {
    return coproduct(prefix(s->left_action, encode_ccs(s->left_body)),
                     prefix(s->right_action, encode_ccs(s->right_body)));
  }
  if (const auto* par = p.as<CcsTerm::Par>()) {
    return parallel(encode_ccs(par->left), encode_ccs(par->right)).structure;
  }
  const auto* r = p.as<CcsTerm::Restrict>();
  return restrict_name(encode_ccs(r->body), r->name).structure;
}

// ---------------------------------------------------------------- projection

ContextProjection project(const Context& c, const CcsTerm& p) {
  if (c.is_hole()) {
    ContextProjection out;
    out.whole = encode_ccs(p);
    out.part = out.whole;
    for (std::size_t e = 0; e < out.whole.event_count(); ++e) out.map.push_back(e);
    return out;
  }
  if (const auto* pre = c.as<Context::Prefix>()) {
    ContextProjection inner = project(pre->body, p);
    ContextProjection out;
    out.whole = prefix(pre->action, inner.whole);
    out.part = std::move(inner.part);
    out.map.push_back(std::nullopt);
    for (const auto& m : inner.map) out.map.push_back(m);
    return out;
  }
  if (const auto* s = c.as<Context::Sum>()) {
    ContextProjection inner = project(s->hole_body, p);
    const ConfStruct hole_branch = prefix(s->hole_action, inner.whole);
    const ConfStruct other = prefix(s->other_action, encode_ccs(s->other_body));
    ContextProjection out;
    out.part = std::move(inner.part);
    std::vector<std::optional<std::size_t>> hole_map{std::nullopt};
    hole_map.insert(hole_map.end(), inner.map.begin(), inner.map.end());
    const std::vector<std::optional<std::size_t>> other_map(other.event_count(), std::nullopt);
    if (s->hole_on_left) {
      out.whole = coproduct(hole_branch, other);
      out.map = hole_map;
      out.map.insert(out.map.end(), other_map.begin(), other_map.end());
    } else {
      out.whole = coproduct(other, hole_branch);
      out.map = other_map;
      out.map.insert(out.map.end(), hole_map.begin(), hole_map.end());
    }
    return out;
  }
  if (const auto* par = c.as<Context::Par>()) {
    ContextProjection inner = project(par->hole_side, p);
    const ConfStruct other = encode_ccs(par->other);
    ParallelResult composed = par->hole_on_left ? parallel(inner.whole, other)
                                                : parallel(other, inner.whole);
    const auto& side = par->hole_on_left ? composed.first : composed.second;
    ContextProjection out;
    out.whole = std::move(composed.structure);
    out.part = std::move(inner.part);
    for (const auto& e : side) out.map.push_back(e ? inner.map[*e] : std::nullopt);
    return out;
  }
  const auto* r = c.as<Context::Restrict>();
  ContextProjection inner = project(r->body, p);
  auto kept = restrict_name(inner.whole, r->name);
  ContextProjection out;
  out.whole = std::move(kept.structure);
  out.part = std::move(inner.part);
  for (auto old : kept.original) out.map.push_back(inner.map[old]);
  return out;
}

bool is_projection_morphism(const ContextProjection& proj) {
  return is_morphism(proj.whole, proj.part, proj.map, [](const Action& w, const Action& p) {
    return w == p || (w.is_tau() && !p.is_tau());
  });
}

// ---------------------------------------------------------------- preconditions

std::string AutoViolation::describe() const {
  return std::string(concurrent ? "auto-concurrency" : "auto-conflict") + " on " +
         label.to_string() + " at " + format_config(at) + ": e" + std::to_string(first) +
         " and e" + std::to_string(second);
}

std::optional<AutoViolation> detect_auto_conflict_or_concurrency(const ConfStruct& c) {
  for (const auto& x : c.configurations()) {
    const auto ext = c.extensions(x);
    for (std::size_t i = 0; i < ext.size(); ++i) {
      for (std::size_t j = i + 1; j < ext.size(); ++j) {
        if (!(c.label(ext[i]) == c.label(ext[j]))) continue;
        AutoViolation v;
        v.concurrent = c.contains(x.with(ext[i]).with(ext[j]));
        v.at = x;
        v.first = ext[i];
        v.second = ext[j];
        v.label = c.label(ext[i]);
        return v;
      }
    }
  }
  return std::nullopt;
}

void check_encoding_preconditions(const CcsTerm& p, const CollapseOptions& options) {
  if (!is_collapsed(p, options)) {
    throw Error(ErrorKind::PreconditionViolated,
                "term is not collapsed: " + print(p) + " collapses to " +
                    print(collapse(p, options)));
  }
  if (auto v = detect_auto_conflict_or_concurrency(encode_ccs(p))) {
    throw Error(ErrorKind::PreconditionViolated, v->describe());
  }
}

// ---------------------------------------------------------------- addresses

EventSet address(const ConfStruct& origin, const std::vector<TraceStep>& trace, EventSet start) {
  EventSet x = start;
  for (const auto& step : trace) {
    if (step.label.direction != Direction::Forward) {
      throw Error(ErrorKind::InvalidArgument, "address traces are forward only");
    }
    const ConfStruct future = encode_ccs(erase(step.target));
    std::vector<std::size_t> found;
    for (auto e : origin.extensions(x)) {
      if (!(origin.label(e) == step.label.action)) continue;
      const auto rest = residual(origin, x.with(e));
      if (find_embedding(future, rest.structure)) found.push_back(e);
    }
    if (found.empty()) {
      throw Error(ErrorKind::NoMatchingEvent, "no event of " + format_config(x) +
                                                  " matches step " + step.label.to_string());
    }
    if (found.size() > 1) {
      throw Error(ErrorKind::AmbiguousEvent,
                  std::to_string(found.size()) + " events match step " + step.label.to_string() +
                      " from " + format_config(x));
    }
    x.insert(found[0]);
  }
  return x;
}

std::vector<TraceStep> forward_trace(const RccsTerm& r) {
  const BacktrackPath path = backtrack_to_origin(r);
  std::vector<TraceStep> out;
  for (std::size_t k = path.labels.size(); k-- > 0;) {
    TransitionLabel label = path.labels[k];
    label.direction = Direction::Forward;
    out.push_back({label, path.states[k]});
  }
  return out;
}

EventSet address_in(const ConfStruct& origin, const RccsTerm& r) {
  return address(origin, forward_trace(r));
}

Address encode_rccs(const RccsTerm& r, const CollapseOptions& options) {
  const CcsTerm o = origin(r);
  check_encoding_preconditions(o, options);
  Address a;
  a.origin = encode_ccs(o);
  a.current = address_in(a.origin, r);
  return a;
}

// ---------------------------------------------------------------- correspondence

void CorrespondenceReport::require_ok() const {
  if (!ok) throw Error(ErrorKind::CorrespondenceFailure, failures.front());
}

CorrespondenceReport check_operational_correspondence(const RccsTerm& r,
                                                      const CollapseOptions& options) {
  const Address here = encode_rccs(r, options);
  const ConfStruct& o = here.origin;
  const EventSet x = here.current;
  CorrespondenceReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failures.push_back(std::move(why));
  };

  // (forward?, event) pairs realised by LTS steps
  std::vector<std::pair<bool, std::size_t>> realised;
  const auto used = ids(r);
  auto visit = [&](const Step& step) {
    ++report.lts_steps;
    const bool fwd = step.label.direction == Direction::Forward;
    const std::string what = step.label.to_string() + " from " + print(r);
    EventSet y;
    try {
      y = address_in(o, step.target);
    } catch (const Error& e) {
      fail(what + ": target has no address (" + e.what() + ")");
      return;
    }
    const EventSet diff = fwd ? y - x : x - y;
    const bool nested = fwd ? x.subset_of(y) : y.subset_of(x);
    if (!nested || diff.size() != 1) {
      fail(what + ": address moves from " + format_config(x) + " to " + format_config(y));
      return;
    }
    const std::size_t e = diff.elements()[0];
    if (!(o.label(e) == step.label.action)) {
      fail(what + ": event e" + std::to_string(e) + " is labelled " + o.label(e).to_string());
      return;
    }
    if (fwd && used.count(step.label.id)) {
      fail(what + ": identifier " + std::to_string(step.label.id) + " is not fresh");
      return;
    }
    realised.emplace_back(fwd, e);
  };
  for (const auto& s : forward_steps(r)) visit(s);
  for (const auto& s : backward_steps(r)) visit(s);

  for (const auto& t : transitions(o, x)) {
    ++report.structure_steps;
    if (std::find(realised.begin(), realised.end(), std::make_pair(t.forward, t.event)) ==
        realised.end()) {
      fail(std::string(t.forward ? "forward" : "backward") + " move on e" +
           std::to_string(t.event) + " (" + o.label(t.event).to_string() + ") from " +
           format_config(x) + " has no LTS step from " + print(r));
    }
  }
  return report;
}

}  // namespace revccs
