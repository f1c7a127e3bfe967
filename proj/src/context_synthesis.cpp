#include <algorithm>
#include <set>

#include "revccs/encoding.hpp"
#include "revccs/equivalences.hpp"
#include "revccs/errors.hpp"

namespace revccs {

namespace {

std::string barb_name(std::size_t i) { return std::string(1, kReservedNamePrefix) + "c" + std::to_string(i); }

// ('l.0 + #ci.0) | ... | [·]
Context schema(const std::vector<Action>& labels) {
  Context ctx = Context::hole();
  for (std::size_t i = labels.size(); i-- > 0;) {
    CcsTerm component = CcsTerm::sum(labels[i].dual(), CcsTerm::nil(), Action::input(barb_name(i)),
                                     CcsTerm::nil());
    ctx = Context::par(ctx, component, false);
  }
  return ctx;
}

bool discriminates(const Context& ctx, const CcsTerm& p1, const CcsTerm& p2) {
  return !barbed_bf_bisim_structs(encode_ccs(instantiate(ctx, p1)),
                                  encode_ccs(instantiate(ctx, p2)))
              .related;
}

std::vector<Action> visible_labels(const ConfStruct& c) {
  std::set<Action> out;
  for (const auto& e : c.events()) {
    if (!e.label.is_tau()) out.insert(e.label);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::optional<SynthesisResult> synthesize_context(const CcsTerm& p1, const CcsTerm& p2,
                                                  const SynthesisOptions& options) {
  if (options.strict) {
    check_encoding_preconditions(p1);
    check_encoding_preconditions(p2);
  }
  const ConfStruct c1 = encode_ccs(p1);
  const ConfStruct c2 = encode_ccs(p2);
  const EquivalenceVerdict v = hhpb(c1, c2);
  if (v.related) {
    throw Error(ErrorKind::PreconditionViolated,
                "processes are HHPB-related; nothing to discriminate");
  }
  SynthesisResult result;
  if (!barbed_bf_bisim_structs(c1, c2).related) {
    result.context = Context::hole();
    result.transcript.push_back("[·]: barbs already differ, not related");
    return result;
  }

  // candidate witnesses: the stratification's unmatched x1 first, then every
  // configuration of either side by increasing size
  std::vector<std::pair<const ConfStruct*, EventSet>> candidates;
  if (v.unmatched) candidates.emplace_back(&c1, *v.unmatched);
  for (const auto* c : {&c1, &c2}) {
    for (const auto& x : c->configurations()) {
      if (std::find(candidates.begin(), candidates.end(), std::make_pair(c, x)) ==
          candidates.end()) {
        candidates.emplace_back(c, x);
      }
    }
  }
  std::vector<Action> all_visible = visible_labels(c1);
  for (const auto& a : visible_labels(c2)) {
    if (std::find(all_visible.begin(), all_visible.end(), a) == all_visible.end()) {
      all_visible.push_back(a);
    }
  }

  for (const auto& [c, x] : candidates) {
    std::vector<Action> labels;
    for (auto e : x.elements()) {
      if (!c->label(e).is_tau()) labels.push_back(c->label(e));
    }
    if (labels.size() > options.max_context) continue;
    std::vector<Action> extra;
    for (auto e : c->extensions(x)) {
      if (!c->label(e).is_tau()) extra.push_back(c->label(e));
    }
    for (const auto& a : all_visible) {
      if (std::find(extra.begin(), extra.end(), a) == extra.end()) extra.push_back(a);
    }
    const std::string from = (c == &c1 ? "left " : "right ") + format_config(x);
    for (std::size_t used = 0;; ++used) {
      if (labels.size() > 0 || used > 0) {
        const Context ctx = schema(labels);
        const bool ok = discriminates(ctx, p1, p2);
        result.transcript.push_back(from + ": " + print(ctx) +
                                    (ok ? " discriminates" : " does not discriminate"));
        if (ok) {
          result.context = ctx;
          result.witness = x;
          return result;
        }
      }
      if (used == extra.size() || labels.size() >= options.max_context) break;
      labels.push_back(extra[used]);
    }
  }
  return std::nullopt;
}

std::vector<Context> generate_context_family(const CcsTerm& p1, const CcsTerm& p2) {
  std::set<std::string> names = free_names(p1);
  names.merge(free_names(p2));
  std::vector<Action> visible;
  for (const auto& n : names) {
    visible.push_back(Action::input(n));
    visible.push_back(Action::output(n));
  }
  const CcsTerm fresh_barb = CcsTerm::prefix(Action::input(barb_name(0)), CcsTerm::nil());

  std::vector<Context> out{Context::hole(), Context::prefix(Action::tau(), Context::hole()),
                           Context::prefix(Action::input("obs"), Context::hole()),
                           Context::par(Context::hole(), fresh_barb, true),
                           Context::sum(Action::tau(), Context::hole(), Action::input(barb_name(0)),
                                        CcsTerm::nil())};
  for (const auto& a : visible) {
    out.push_back(Context::prefix(a, Context::hole()));
    out.push_back(Context::par(Context::hole(), CcsTerm::prefix(a, CcsTerm::nil()), true));
    out.push_back(Context::sum(a, Context::hole(), Action::input(barb_name(0)), CcsTerm::nil()));
    out.push_back(schema({a}));
    out.push_back(Context::restrict(a.channel, schema({a})));
  }
  for (const auto& n : names) out.push_back(Context::restrict(n, Context::hole()));
  for (std::size_t i = 0; i < visible.size(); ++i) {
    for (std::size_t j = i; j < visible.size(); ++j) out.push_back(schema({visible[i], visible[j]}));
  }
  // deduplicate by printed form
  std::vector<Context> unique;
  for (auto& c : out) {
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  return unique;
}

CongruenceReport check_congruence_closure(const CcsTerm& p1, const CcsTerm& p2,
                                          const std::vector<Context>& contexts) {
  CongruenceReport report;
  const ConfStruct c1 = encode_ccs(p1);
  const ConfStruct c2 = encode_ccs(p2);
  report.hhpb_before = hhpb(c1, c2).related;
  report.barbed_before = barbed_bf_bisim_structs(c1, c2).related;
  for (const auto& ctx : contexts) {
    const ConfStruct d1 = encode_ccs(instantiate(ctx, p1));
    const ConfStruct d2 = encode_ccs(instantiate(ctx, p2));
    CongruenceCase c{ctx, hhpb(d1, d2).related, barbed_bf_bisim_structs(d1, d2).related};
    if (report.hhpb_before && !(c.hhpb_related && c.barbed_related)) report.consistent = false;
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace revccs
