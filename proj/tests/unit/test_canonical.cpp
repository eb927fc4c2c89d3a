#include <gtest/gtest.h>

#include "qrep/canonical.hpp"
#include "qrep/sampling.hpp"
#include "support/rep_helpers.hpp"

using namespace qrep;
using qrep::testing::diamond;
using qrep::testing::kronecker;
using qrep::testing::line_rep;

namespace {

std::vector<std::size_t> dims_at(const FpRep& cat, const Representation<FpMod>& f,
                                 const std::vector<Vertex>& vs) {
  std::vector<std::size_t> out;
  for (Vertex v : vs) out.push_back(cat.at(f, v).size());
  return out;
}

using Dims = std::vector<std::size_t>;

}  // namespace

TEST(CanonicalPresentation, IdentityLineOverA2) {
  FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  const auto f = line_rep(cat, {1, 1}, {{1}});
  const auto p = can.presentation(f);
  EXPECT_EQ(p.arrows.size(), 1u);
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(dims_at(cat, p.p1, {1, 2}), (Dims{0, 1}));
  EXPECT_EQ(dims_at(cat, p.p0, {1, 2}), (Dims{1, 2}));
  EXPECT_TRUE(is_short_exact(cat, p.gamma, p.proj));
}

TEST(CanonicalPresentation, StalkAndZero) {
  FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  const auto k = cat.base().free(1);
  const auto p = can.presentation(cat.stalk(1, k));
  EXPECT_TRUE(cat.equal(p.p1, cat.free_rep(2, k)));
  EXPECT_TRUE(cat.equal(p.p0, cat.free_rep(1, k)));
  const auto s = can.stalk_presentation(1, k);
  EXPECT_TRUE(cat.equal(s.a, p.p1));
  EXPECT_TRUE(cat.equal(s.b, p.p0));

  const auto z = can.presentation(cat.zero_object());
  EXPECT_TRUE(cat.is_zero(z.p0));
  EXPECT_TRUE(cat.is_zero(z.p1));
  EXPECT_TRUE(z.lambda.empty());
}

TEST(CanonicalPresentation, GammaSplitsOnlyVertexwise) {
  // Γ for s_1(k) over A2 is f_2(k) -> f_1(k): split at each vertex, not in Rep.
  FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  const auto p = can.presentation(cat.stalk(1, cat.base().free(1)));
  EXPECT_TRUE(can.splitting_defects(p).empty());
  EXPECT_FALSE(split_retraction(cat, p.gamma).has_value());
}

TEST(CanonicalPresentation, RandomAcyclicOverF5) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Quiver q = random_acyclic_quiver(rng, 6, 8, 48);
    FpRep cat(q, FpMod(PrimeField(5)));
    Canonical<FpMod> can(cat);
    const auto f = cat.random_object(rng, 3);
    const auto p = can.presentation(f);
    EXPECT_TRUE(is_short_exact(cat, p.gamma, p.proj));
    EXPECT_TRUE(can.splitting_defects(p).empty());
    // The solver splitting is a valid alternative.
    const auto ps = can.presentation(f, SplittingMethod::Solver);
    EXPECT_TRUE(can.splitting_defects(ps).empty());
    EXPECT_EQ(total_path_count(q) <= 48, true);
  }
}

TEST(CanonicalPresentation, OverIntegersAndNested) {
  Rng rng(7);
  ZRep zcat(diamond(), ZMod(IntegerRing()));
  Canonical<ZMod> zcan(zcat);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = zcan.presentation(zcat.random_object(rng, 2));
    EXPECT_TRUE(zcan.splitting_defects(p).empty());
  }
  FpRep inner(make_linear_a(2), FpMod(PrimeField(3)));
  NestedFpRep outer(make_linear_a(2), inner);
  Canonical<FpRep> ncan(outer);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = ncan.presentation(outer.random_object(rng, 1));
    EXPECT_TRUE(ncan.splitting_defects(p).empty());
  }
}

TEST(CanonicalPresentation, FreeObjectsSplitOff) {
  FpRep cat(diamond(), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  for (Vertex i : {1, 2, 4}) {
    const auto p = can.presentation(cat.free_rep(i, cat.base().free(2)));
    EXPECT_TRUE(split_section(cat, p.proj).has_value()) << "vertex " << i;
  }
  // A non-projective object has no section.
  const auto p = can.presentation(cat.stalk(1, cat.base().free(1)));
  EXPECT_FALSE(split_section(cat, p.proj).has_value());
}

TEST(CanonicalPresentation, CoconesFactorUniquely) {
  Rng rng(33);
  FpRep cat(kronecker(), FpMod(PrimeField(3)));
  Canonical<FpMod> can(cat);
  const Functors<FpMod>& fn = can.functors();
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto g = cat.random_object(rng, 2);
    const auto p = can.presentation(f);
    const auto h = cat.random_morphism(f, g, rng);
    std::vector<RepMorphism<FpMod>> legs;
    for (Vertex i : p.vertices) legs.push_back(cat.compose(h, fn.counit(i, f)));
    const auto d = can.descend_cocone(p, legs, g);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(cat.equal(*d, h));
    // Uniqueness: precomposition with proj is injective on Hom(F, G).
    const auto hfg = cat.hom(f, g);
    const auto hpg = cat.hom(p.p0, g);
    const auto m = induced_matrix<FpRep>(
        cat, hfg, hpg, [&](const RepMorphism<FpMod>& x) { return cat.compose(x, p.proj); });
    EXPECT_EQ(generic_rank(cat.ring(), m), hfg.size());
  }
}

TEST(CanonicalCopresentation, Examples) {
  FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  const auto k = cat.base().free(1);
  const auto f = line_rep(cat, {1, 1}, {{1}});
  const auto c = can.copresentation(f);
  EXPECT_TRUE(cat.equal(c.i0, cat.direct_sum({cat.stalk(1, k), f})));
  EXPECT_TRUE(is_short_exact(cat, c.unit, c.gamma));

  const auto s = can.copresentation(cat.stalk(2, k));
  EXPECT_TRUE(cat.equal(s.i0, cat.cofree_rep(2, k)));
  EXPECT_TRUE(cat.equal(s.i1, cat.cofree_rep(1, k)));
  EXPECT_TRUE(cat.is_zero(can.copresentation(cat.zero_object()).i0));
}

TEST(CanonicalCopresentation, RandomAndSolverAgree) {
  Rng rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    const Quiver q = random_acyclic_quiver(rng, 5, 7, 40);
    FpRep cat(q, FpMod(PrimeField(5)));
    Canonical<FpMod> can(cat);
    const auto f = cat.random_object(rng, 3);
    EXPECT_TRUE(can.splitting_defects(can.copresentation(f)).empty());
    EXPECT_TRUE(can.splitting_defects(can.copresentation(f, SplittingMethod::Solver)).empty());
  }
  ZRep zcat(kronecker(), ZMod(IntegerRing()));
  Canonical<ZMod> zcan(zcat);
  for (int trial = 0; trial < 6; ++trial)
    EXPECT_TRUE(zcan.splitting_defects(zcan.copresentation(zcat.random_object(rng, 2))).empty());
}

TEST(CanonicalCopresentation, InfiniteRightConesOnlyBlockThePresentation) {
  FpRep cat(make_template("ray_fwd"), FpMod(PrimeField(5)));
  Canonical<FpMod> can(cat);
  const auto f = cat.stalk(3, cat.base().free(1));
  EXPECT_THROW(can.presentation(f), InfiniteCone);
  const auto c = can.copresentation(f);
  EXPECT_EQ(c.i0.objs.size(), 3u);
  EXPECT_TRUE(can.splitting_defects(c).empty());
}

TEST(StalkPresentation, Examples) {
  FpRep a2(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> c2(a2);
  const auto k = a2.base().free(1);
  const auto sink = c2.stalk_presentation(2, k);
  EXPECT_TRUE(a2.is_zero(sink.a));
  EXPECT_TRUE(a2.equal(sink.b, sink.c));
  const auto src = c2.stalk_presentation(1, k);
  EXPECT_EQ(dims_at(a2, src.a, {1, 2}), (Dims{0, 1}));
  EXPECT_EQ(dims_at(a2, src.b, {1, 2}), (Dims{1, 1}));
  EXPECT_EQ(dims_at(a2, src.c, {1, 2}), (Dims{1, 0}));

  FpRep a3(make_linear_a(3), FpMod(PrimeField(5)));
  Canonical<FpMod> c3(a3);
  const auto mid = c3.stalk_presentation(2, k);
  EXPECT_TRUE(a3.equal(mid.a, a3.free_rep(3, k)));
  EXPECT_TRUE(a3.equal(mid.b, a3.free_rep(2, k)));
}

TEST(PathLengthFiltration, Examples) {
  FpRep a2(make_linear_a(2), FpMod(PrimeField(5)));
  Canonical<FpMod> c2(a2);
  const auto k = a2.base().free(1);
  const auto first = c2.path_length_filtration(1, k, 1);
  const auto stalk = c2.stalk_presentation(1, k);
  EXPECT_TRUE(a2.equal(first.a, stalk.a));
  EXPECT_TRUE(a2.equal(first.b, stalk.b));
  EXPECT_TRUE(a2.equal(first.c, stalk.c));

  FpRep a3(make_linear_a(3), FpMod(PrimeField(5)));
  Canonical<FpMod> c3(a3);
  const auto second = c3.path_length_filtration(1, k, 2);
  EXPECT_EQ(dims_at(a3, second.a, {1, 2, 3}), (Dims{0, 0, 1}));
  EXPECT_EQ(dims_at(a3, second.b, {1, 2, 3}), (Dims{0, 1, 1}));
  EXPECT_EQ(dims_at(a3, second.c, {1, 2, 3}), (Dims{0, 1, 0}));
  const auto beyond = c3.path_length_filtration(1, k, 3);
  EXPECT_TRUE(a3.is_zero(beyond.a));
  EXPECT_TRUE(a3.equal(beyond.b, beyond.c));

  // Two paths of length 2 in the diamond give two copies of f_4.
  FpRep d(diamond(), FpMod(PrimeField(5)));
  Canonical<FpMod> cd(d);
  EXPECT_EQ(d.at(cd.path_length_filtration(1, k, 2).a, 4).size(), 2u);
}
