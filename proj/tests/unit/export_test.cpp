#include <gtest/gtest.h>

#include "corpus.hpp"
#include "revccs/encoding.hpp"
#include "revccs/equivalences.hpp"
#include "revccs/errors.hpp"
#include "revccs/serialize/export.hpp"

using namespace revccs;

namespace {

ConfStruct enc(const char* text) { return encode_ccs(parse(text)); }

}  // namespace

TEST(Json, ExactSmallStructures) {
  EXPECT_EQ(to_json(enc("0")), R"({"events":[],"configurations":[[]]})");
  EXPECT_EQ(to_json(enc("a.0")), R"({"events":[{"id":"e0","label":"a"}],"configurations":[[],["e0"]]})");
  EXPECT_EQ(to_json(enc("'a.tau.0")),
            R"({"events":[{"id":"e0","label":"'a"},{"id":"e1","label":"tau"}],)"
            R"("configurations":[[],["e0"],["e0","e1"]]})");
}

TEST(Json, Parse) {
  const ConfStruct c = confstruct_from_json(R"({"events":[{"id":"e0","label":"b"}],"configurations":[[],["e0"]]})");
  EXPECT_TRUE(isomorphic(c, enc("b.0")));
  EXPECT_THROW(confstruct_from_json("{"), Error);
  EXPECT_THROW(confstruct_from_json(R"({"events":[{"id":"e1","label":"b"}],"configurations":[[]]})"), Error);
  EXPECT_THROW(confstruct_from_json(R"({"events":[{"id":"e0","label":"b"}],"configurations":[["e3"]]})"), Error);
  EXPECT_THROW(confstruct_from_json(R"({"events":[{"id":0,"label":"b"}],"configurations":[[]]})"), Error);
}

TEST(Json, RoundTripOnRandomStructures) {
  for (const auto& p : corpus::random_terms(100, 91, 5)) {
    const ConfStruct c = encode_ccs(p);
    const ConfStruct back = confstruct_from_json(to_json(c));
    EXPECT_EQ(back.configurations(), c.configurations()) << print(p);
    for (std::size_t e = 0; e < c.event_count(); ++e) EXPECT_EQ(back.label(e), c.label(e));
  }
}

TEST(Dot, HasseDiagram) {
  const std::string dot = to_dot(enc("a.0|b.0"));
  EXPECT_EQ(dot.rfind("digraph configurations {", 0), 0u);
  EXPECT_NE(dot.find("c [label=\"{}\"];"), std::string::npos);
  EXPECT_NE(dot.find("c -> c_0 [label=\"a\"];"), std::string::npos);
  EXPECT_NE(dot.find("c_1 -> c_0_1 [label=\"a\"];"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, 4u);
}

TEST(Text, Listing) {
  EXPECT_EQ(to_text(enc("a.0")), "events: e0:a\nconfigurations (2):\n  {}\n  {e0}\n");
}

TEST(Verdict, Json) {
  const std::string fail = to_json(hhpb(enc("a.0|b.0"), enc("a.b.0+b.a.0")));
  EXPECT_EQ(fail.rfind(R"({"related":false,"failing_stratum":2,"witness":{"kind":"B","unmatched":[)", 0), 0u)
      << fail;
  const std::string ok = to_json(hhpb(enc("a.0"), enc("a.0")));
  EXPECT_EQ(ok, R"({"related":true,"failing_stratum":null,"witness":{"relation":[[[],[],[]],)"
                R"([["e0"],["e0"],[["e0","e0"]]]]},"context":null})");
}

TEST(AddressJson, Shape) {
  Address a{enc("a.0"), EventSet::of({0})};
  EXPECT_EQ(to_json(a), R"({"origin":{"events":[{"id":"e0","label":"a"}],"configurations":[[],["e0"]]},)"
                        R"("current":["e0"]})");
}
