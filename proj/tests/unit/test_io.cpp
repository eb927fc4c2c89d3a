#include <gtest/gtest.h>

#include "qrep/io.hpp"

using namespace qrep;
using qrep::io::Json;

namespace {

template <class Cat>
void expect_round_trip(const Cat& cat, std::uint64_t seed, std::size_t bound) {
  Rng rng(seed);
  for (int t = 0; t < 25; ++t) {
    const auto f = cat.random_object(rng, bound);
    const Json j = io::rep_to_json(cat, f);
    const auto back = io::rep_from_json(cat, io::parse(j.dump()));
    ASSERT_TRUE(cat.equal(f, back)) << j.dump();
    ASSERT_EQ(io::rep_to_json(cat, back), j);
  }
}

}  // namespace

TEST(Json, ParseErrorCarriesLineAndColumn) {
  try {
    io::parse("{\n  \"a\": [1,\n  }\n");
    FAIL() << "expected a parse error";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(QuiverJson, RoundTrip) {
  for (const char* t : {"A_3", "Atilde_2", "loop", "grid(2,2)"}) {
    const Quiver q = make_template(t);
    const Quiver back = io::quiver_from_json(io::to_json(q));
    EXPECT_EQ(back.vertices(), q.vertices()) << t;
    // Arrows are identified by name in files; numeric ids may be renumbered.
    ASSERT_EQ(back.arrows().size(), q.arrows().size()) << t;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const Arrow a = q.arrows()[k], b = back.arrows()[k];
      EXPECT_EQ(back.arrow_name(b.id), q.arrow_name(a.id)) << t;
      EXPECT_EQ(b.src, a.src) << t;
      EXPECT_EQ(b.tgt, a.tgt) << t;
    }
    EXPECT_EQ(back.declarations(), q.declarations()) << t;
  }
  const Quiver g = io::quiver_from_json(Json{{"template", "A_inf_zigzag"}});
  EXPECT_FALSE(g.is_explicit());
  const Quiver e = io::quiver_from_json(io::parse(
      R"({"vertices": [1, 2], "arrows": [{"id": "x", "src": 1, "tgt": 2}], "declarations": ["acyclic"]})"));
  EXPECT_EQ(e.arrows().size(), 1u);
  EXPECT_TRUE(e.find_arrow("x").has_value());
  EXPECT_THROW(io::quiver_from_json(io::parse(R"({"vertices": [1], "arrows": [{"src": 1, "tgt": 7}]})")),
               io::ParseError);
}

TEST(BaseSpec, Parses) {
  EXPECT_EQ(io::parse_base_spec("q").kind, io::BaseSpec::Kind::Q);
  const auto fp = io::parse_base_spec("fp:7");
  EXPECT_EQ(fp.kind, io::BaseSpec::Kind::Fp);
  EXPECT_EQ(fp.p, 7u);
  EXPECT_EQ(io::parse_base_spec("fgab").kind, io::BaseSpec::Kind::FgAb);
  const auto n = io::parse_base_spec("nested:A_2:fp:5");
  EXPECT_EQ(n.kind, io::BaseSpec::Kind::Nested);
  EXPECT_EQ(n.inner_template, "A_2");
  EXPECT_EQ(io::parse_base_spec(n.str()).str(), n.str());
  for (const char* bad : {"fp:4", "fp:x", "zz", "nested:A_2:q"})
    EXPECT_THROW(io::parse_base_spec(bad), io::ParseError) << bad;
}

TEST(BaseObjects, IntegerFormats) {
  const ZMod z{IntegerRing()};
  const auto a = io::object_from_json(z, io::parse(R"({"base": "fgab", "rank": 1, "torsion": [2, 4]})"));
  const auto b = io::object_from_json(z, io::parse(R"({"base": "fgab", "orders": [2, 4, 0]})"));
  EXPECT_EQ(a.orders, b.orders);
  EXPECT_EQ(io::object_from_json(z, io::object_to_json(z, a)).orders, a.orders);
  EXPECT_EQ(io::object_from_json(z, Json(3)).size(), 3u);
}

TEST(Representations, RoundTripOverEveryBase) {
  const Quiver q = make_template("Atilde_2");
  expect_round_trip(FpRep(q, FpMod(PrimeField(5))), 1, 3);
  expect_round_trip(QRep(q, QMod(RationalField())), 2, 2);
  expect_round_trip(ZRep(q, ZMod(IntegerRing())), 3, 2);
  expect_round_trip(NestedFpRep(make_linear_a(2), FpRep(make_linear_a(2), FpMod(PrimeField(3)))), 4, 1);
}

TEST(Representations, RejectsNonNaturalInput) {
  const FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  // 1x1 arrow map from a 2-dimensional space: wrong shape.
  EXPECT_THROW(io::rep_from_json(cat, io::parse(R"({"support": {"1": 2, "2": 1}, "arrows": {"a1": [[1]]}})")),
               io::ParseError);
  EXPECT_THROW(io::rep_from_json(cat, io::parse(R"({"support": {"9": 1}})")), io::ParseError);
}

TEST(Presentations, SerializeWithLambda) {
  const FpRep cat(make_linear_a(3), FpMod(PrimeField(5)));
  const Canonical<FpMod> canon(cat);
  Rng rng(9);
  const auto f = cat.random_object(rng, 2);
  const Json p = io::to_json(cat, canon.presentation(f));
  EXPECT_TRUE(p.contains("p0"));
  EXPECT_TRUE(p.contains("p1"));
  EXPECT_TRUE(p.contains("lambda"));
  const Json c = io::to_json(cat, canon.copresentation(f));
  EXPECT_TRUE(c.contains("i0"));
  EXPECT_TRUE(c.contains("sigma"));
}
