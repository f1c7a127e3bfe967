#include <gtest/gtest.h>

#include "corpus.hpp"
#include "revccs/encoding.hpp"
#include "revccs/errors.hpp"
#include "revccs/syntax.hpp"

using namespace revccs;

namespace {

ErrorKind kind_of_failure(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::InvalidArgument;
}

std::size_t offset_of_failure(const std::string& text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "parsed: " << text;
  return 0;
}

}  // namespace

TEST(Parse, PrintsCanonicalSpacing) {
  EXPECT_EQ(print(parse("a.0|b.0")), "a.0 | b.0");
  EXPECT_EQ(print(parse("a.b.0+b.a.0")), "a.b.0 + b.a.0");
  EXPECT_EQ(print(parse("(a)(a.0|'a.0)")), "(a)(a.0 | 'a.0)");
  EXPECT_EQ(print(parse("tau.0")), "tau.0");
  EXPECT_EQ(print(parse("  a . ( b.0 | c.0 ) ")), "a.(b.0 | c.0)");
}

TEST(Parse, Precedence) {
  const CcsTerm t = parse("a.0+b.0|c.0");
  ASSERT_NE(t.as<CcsTerm::Par>(), nullptr);
  EXPECT_NE(t.as<CcsTerm::Par>()->left.as<CcsTerm::Sum>(), nullptr);
  const CcsTerm u = parse("a.b.0|c.0");
  ASSERT_NE(u.as<CcsTerm::Par>(), nullptr);
  EXPECT_EQ(print(u.as<CcsTerm::Par>()->left), "a.b.0");
}

TEST(Parse, Actions) {
  EXPECT_EQ(parse_action("a"), Action::input("a"));
  EXPECT_EQ(parse_action("'a"), Action::output("a"));
  EXPECT_EQ(parse_action("tau"), Action::tau());
  EXPECT_EQ(Action::input("a").dual(), Action::output("a"));
  EXPECT_EQ(Action::output("a").to_string(), "'a");
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of_failure("a.0+b.0+c.0"), ErrorKind::Arity);
  EXPECT_EQ(kind_of_failure("a.0+(b.0|c.0)"), ErrorKind::Arity);
  EXPECT_EQ(kind_of_failure("a.0+"), ErrorKind::Syntax);
  EXPECT_EQ(kind_of_failure("'tau.0"), ErrorKind::Syntax);
  EXPECT_EQ(kind_of_failure("#c.0"), ErrorKind::Syntax);
  EXPECT_EQ(kind_of_failure("a.0 b"), ErrorKind::Syntax);
  EXPECT_EQ(kind_of_failure("[]"), ErrorKind::Syntax);
  EXPECT_EQ(offset_of_failure("a.0+"), 4u);
  EXPECT_EQ(offset_of_failure("a.b"), 3u);
}

TEST(Parse, ReservedNamesOnRequest) {
  ParseOptions o;
  o.allow_reserved_names = true;
  EXPECT_EQ(print(parse("#c0.0", o)), "#c0.0");
}

TEST(Parse, RoundTripOnRandomTerms) {
  for (const auto& t : corpus::random_terms(300, 101)) {
    const std::string once = print(t);
    EXPECT_EQ(parse(once), t) << once;
    EXPECT_EQ(print(parse(once)), once);
  }
}

TEST(Context, ParseAndInstantiate) {
  const Context c = parse_context("a.[] | 'a.0");
  EXPECT_EQ(print(instantiate(c, parse("b.0"))), "a.b.0 | 'a.0");
  EXPECT_EQ(print(instantiate(parse_context("[·]"), parse("b.0"))), "b.0");
  EXPECT_EQ(print(instantiate(parse_context("(a)(tau.[.] + b.0)"), parse("a.0"))), "(a)(tau.a.0 + b.0)");
  EXPECT_THROW(parse_context("a.0"), SyntaxError);
  EXPECT_THROW(parse_context("[] | []"), Error);
}

TEST(Names, FreeAndAll) {
  const CcsTerm t = parse("(a)(a.b.0 | 'c.0)");
  EXPECT_EQ(free_names(t), (std::set<std::string>{"b", "c"}));
  EXPECT_EQ(all_names(t), (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(print(rename_free(parse("a.(a)a.0 | a.0"), "a", "z")), "z.(a)a.0 | z.0");
}

TEST(Collapse, Rules) {
  EXPECT_EQ(print(collapse(parse("a.b.0+a.b.0"))), "a.b.0");
  EXPECT_EQ(print(collapse(parse("a.0|a.0"))), "a.0");
  CollapseOptions keep;
  keep.parallel_rule = false;
  EXPECT_EQ(print(collapse(parse("a.0|a.0"), keep)), "a.0 | a.0");
  EXPECT_TRUE(is_collapsed(parse("a.0|a.0"), keep));
  EXPECT_FALSE(is_collapsed(parse("c.(a.0+a.0)")));
  EXPECT_TRUE(is_collapsed(parse("a.0+a.b.0")));
}

TEST(Collapse, IdempotentOnRandomTerms) {
  corpus::Generator g(202);
  for (int i = 0; i < 400; ++i) {
    const CcsTerm t = g.term(g.pick(1, 5));
    const CcsTerm c = collapse(t);
    EXPECT_TRUE(is_collapsed(c)) << print(t);
    EXPECT_EQ(collapse(c), c) << print(t);
    EXPECT_LE(prefix_count(c), prefix_count(t));
  }
}

TEST(NormalForm, Laws) {
  EXPECT_TRUE(ccs_congruent(parse("a.0|b.0"), parse("b.0|a.0")));
  EXPECT_TRUE(ccs_congruent(parse("a.0+b.0"), parse("b.0+a.0")));
  EXPECT_TRUE(ccs_congruent(parse("a.0|0"), parse("a.0")));
  EXPECT_TRUE(ccs_congruent(parse("(a)b.0"), parse("b.0")));
  EXPECT_TRUE(ccs_congruent(parse("(a)tau.a.0"), parse("tau.(a)a.0")));
  EXPECT_FALSE(ccs_congruent(parse("(a)a.0"), parse("a.0")));
  EXPECT_FALSE(ccs_congruent(parse("a.b.0"), parse("b.a.0")));
}

// The normal form only applies laws that leave the denotation unchanged.
TEST(NormalForm, PreservesDenotationOnRandomTerms) {
  corpus::Generator g(303);
  for (int i = 0; i < 300; ++i) {
    const CcsTerm t = g.term(g.pick(1, 4));
    const CcsTerm n = ccs_normal_form(t);
    EXPECT_EQ(ccs_normal_form(n), n) << print(t);
    EXPECT_TRUE(isomorphic(encode_ccs(t), encode_ccs(n))) << print(t) << " vs " << print(n);
    EXPECT_TRUE(ccs_congruent(t, corpus::mirror(t))) << print(t);
  }
}

TEST(Dump, Shape) {
  EXPECT_EQ(dump_ast(parse("a.0+'b.0")), "Sum\n  Branch a\n    Nil\n  Branch 'b\n    Nil\n");
  EXPECT_EQ(dump_ast(parse("(a)tau.0")), "Restrict a\n  Prefix tau\n    Nil\n");
}
