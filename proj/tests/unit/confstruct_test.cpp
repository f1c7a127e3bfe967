#include <gtest/gtest.h>

#include "corpus.hpp"
#include "revccs/confstruct.hpp"
#include "revccs/encoding.hpp"
#include "revccs/errors.hpp"

using namespace revccs;

namespace {

ConfStruct raw(std::vector<const char*> labels, std::vector<EventSet> configs) {
  std::vector<ConfStruct::Event> events;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    events.push_back({"e" + std::to_string(i), parse_action(labels[i])});
  }
  return ConfStruct(std::move(events), std::move(configs));
}

std::vector<Axiom> axioms(const ConfStruct& c) {
  std::vector<Axiom> out;
  for (const auto& v : validate(c)) out.push_back(v.axiom);
  return out;
}

ConfStruct enc(const char* text) { return encode_ccs(parse(text)); }

}  // namespace

TEST(Validate, AcceptsWellFormed) {
  EXPECT_TRUE(validate(ConfStruct()).empty());
  EXPECT_TRUE(validate(enc("a.b.0+b.a.0")).empty());
  EXPECT_TRUE(validate(raw({"a", "b"}, {{}, EventSet::of({0}), EventSet::of({1}), EventSet::of({0, 1})})).empty());
}

TEST(Validate, ReportsEachAxiom) {
  EXPECT_EQ(axioms(raw({"a"}, {{}, EventSet::of({3})})), std::vector<Axiom>{Axiom::Range});
  EXPECT_EQ(axioms(raw({"a"}, {EventSet::of({0})})), std::vector<Axiom>{Axiom::FiniteCompleteness});
  EXPECT_EQ(axioms(raw({"a", "b"}, {{}, EventSet::of({0, 1})})),
            std::vector<Axiom>{Axiom::CoincidenceFreeness});
  EXPECT_EQ(axioms(raw({"a", "b", "c"}, {{}, EventSet::of({0}), EventSet::of({1}), EventSet::of({0, 1, 2})})),
            std::vector<Axiom>{Axiom::FiniteCompleteness});
  const auto v = validate(raw({"a", "b", "c"}, {{}, EventSet::of({0}), EventSet::of({1}), EventSet::of({0, 1}),
                                                EventSet::of({0, 2}), EventSet::of({1, 2}),
                                                EventSet::of({0, 1, 2})}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].axiom, Axiom::Stability);
  EXPECT_EQ(v[0].witness, (std::vector<EventSet>{EventSet::of({0, 2}), EventSet::of({1, 2})}));
}

TEST(Constructions, HandCounts) {
  const ConfStruct p = prefix(Action::input("a"), enc("b.0"));
  EXPECT_EQ(p.event_count(), 2u);
  EXPECT_EQ(p.config_count(), 3u);
  EXPECT_EQ(p.tag(1), "h.h");

  const ConfStruct s = coproduct(enc("a.0"), enc("b.0"));
  EXPECT_EQ(s.event_count(), 2u);
  EXPECT_EQ(s.config_count(), 3u);
  EXPECT_EQ(s.tag(1), "2(h)");

  const auto x = product(enc("a.0"), enc("b.0"));
  EXPECT_EQ(x.structure.event_count(), 3u);
  EXPECT_EQ(x.structure.config_count(), 5u);

  const auto sync = parallel(enc("a.0"), enc("'a.0"));
  EXPECT_EQ(sync.structure.event_count(), 3u);
  EXPECT_EQ(sync.structure.config_count(), 5u);
  const auto indep = parallel(enc("a.0"), enc("b.0"));
  EXPECT_EQ(indep.structure.event_count(), 2u);
  EXPECT_EQ(indep.structure.config_count(), 4u);

  const auto r = restrict_name(sync.structure, "a");
  EXPECT_EQ(r.structure.event_count(), 1u);
  EXPECT_EQ(r.structure.config_count(), 2u);
  EXPECT_TRUE(r.structure.label(0).is_tau());
}

TEST(Constructions, RestrictionDropsStrandedEvents) {
  const auto r = restrict_name(enc("a.b.0|c.0"), "a");
  EXPECT_EQ(r.structure.event_count(), 1u);
  EXPECT_EQ(r.structure.label(0), Action::input("c"));
}

TEST(Constructions, SyncTable) {
  EXPECT_EQ(sync_label({Action::input("a"), std::nullopt}), Action::input("a"));
  EXPECT_EQ(sync_label({std::nullopt, Action::tau()}), Action::tau());
  EXPECT_EQ(sync_label({Action::input("a"), Action::output("a")}), Action::tau());
  EXPECT_EQ(sync_label({Action::input("a"), Action::input("a")}), std::nullopt);
  EXPECT_EQ(sync_label({Action::tau(), Action::tau()}), std::nullopt);
  EXPECT_EQ(sync_label({Action::input("a"), Action::output("b")}), std::nullopt);
}

TEST(Constructions, Residual) {
  const ConfStruct c = enc("a.b.0");
  const auto r = residual(c, EventSet::of({0}));
  EXPECT_EQ(r.structure.event_count(), 1u);
  EXPECT_EQ(r.structure.label(0), Action::input("b"));
  EXPECT_TRUE(isomorphic(r.structure, enc("b.0")));
  EXPECT_THROW(residual(c, EventSet::of({1})), Error);
}

TEST(Causality, HandCases) {
  const ConfStruct c = enc("a.b.0");
  const auto o = causal_order(c, EventSet::of({0, 1}));
  EXPECT_TRUE(o.less(0, 1));
  EXPECT_FALSE(o.less(1, 0));
  const ConfStruct d = enc("a.0|b.0");
  const auto q = causal_order(d, d.all_events());
  EXPECT_FALSE(q.less(0, 1));
  EXPECT_FALSE(q.less(1, 0));
  EXPECT_EQ(q.down(1), EventSet::of({1}));
}

TEST(Morphisms, Embeddings) {
  EXPECT_TRUE(find_embedding(enc("a.0"), enc("a.0+b.0")).has_value());
  EXPECT_FALSE(find_embedding(enc("a.0+b.0"), enc("a.0")).has_value());
  EXPECT_TRUE(find_embedding(enc("a.b.0"), enc("a.0|b.0")).has_value());
  EXPECT_FALSE(find_embedding(enc("a.0|b.0"), enc("a.b.0+b.a.0")).has_value());
  EXPECT_TRUE(isomorphic(enc("a.0|b.0"), enc("b.0|a.0")));
  EXPECT_FALSE(isomorphic(enc("a.0|b.0"), enc("a.b.0+b.a.0")));
}

TEST(EventSetTest, Capacity) {
  EventSet s;
  s.insert(EventSet::kCapacity - 1);
  EXPECT_EQ(s.size(), 1u);
  try {
    s.insert(EventSet::kCapacity);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapacityExceeded);
  }
}

// Generation that skips 0-labelled pairs and the literal
// product-relabel-restrict route must agree.
TEST(ConstructionProperty, ParallelRoutesAgree) {
  const auto terms = corpus::random_terms(40, 61, 3);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const ConfStruct a = encode_ccs(terms[i]);
    const ConfStruct b = encode_ccs(terms[(i * 7 + 3) % terms.size()]);
    const auto fast = parallel(a, b);
    const auto slow = parallel_by_definition(a, b);
    EXPECT_TRUE(validate(fast.structure).empty());
    EXPECT_TRUE(structurally_equal(fast.structure, slow.structure)) << print(terms[i]);
  }
}

TEST(ConstructionProperty, ProductProjectionsAreMorphisms) {
  const auto terms = corpus::random_terms(30, 62, 3);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const ConfStruct a = encode_ccs(terms[i]);
    const ConfStruct b = encode_ccs(terms[i + 1]);
    const auto x = product(a, b);
    EXPECT_TRUE(validate(x.structure).empty());
    EXPECT_TRUE(is_morphism(x.structure, a, x.first,
                            [](const PairLabel& l, const Action& m) { return l.first == m; }));
    EXPECT_TRUE(is_morphism(x.structure, b, x.second,
                            [](const PairLabel& l, const Action& m) { return l.second == m; }));
  }
}

TEST(ConstructionProperty, CoproductAndPrefixCounts) {
  const auto terms = corpus::random_terms(40, 63, 3);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const ConfStruct a = encode_ccs(terms[i]);
    const ConfStruct b = encode_ccs(terms[i + 1]);
    const ConfStruct s = coproduct(a, b);
    EXPECT_EQ(s.config_count(), a.config_count() + b.config_count() - 1);
    EXPECT_TRUE(validate(s).empty());
    const ConfStruct p = prefix(Action::tau(), a);
    EXPECT_EQ(p.config_count(), a.config_count() + 1);
    EXPECT_TRUE(validate(p).empty());
  }
}

// Causality computed from down-closures agrees with the direct reading:
// e <= f in x iff every sub-configuration of x holding f also holds e.
TEST(ConstructionProperty, CausalOrderMatchesDefinition) {
  for (const auto& t : corpus::random_terms(40, 64, 4)) {
    const ConfStruct c = encode_ccs(t);
    for (const auto& x : c.configurations()) {
      const auto o = causal_order(c, x);
      x.for_each([&](std::size_t e) {
        x.for_each([&](std::size_t f) {
          bool expected = true;
          for (const auto& y : c.configurations()) {
            if (y.subset_of(x) && y.contains(f) && !y.contains(e)) expected = false;
          }
          EXPECT_EQ(o.leq(e, f), expected) << print(t);
        });
      });
    }
  }
}
