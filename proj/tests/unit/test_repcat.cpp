#include <gtest/gtest.h>

#include "qrep/repcat.hpp"
#include "support/rep_helpers.hpp"

using namespace qrep;
using qrep::testing::line_rep;

namespace {

FpRep a_n(int n, std::uint64_t p = 5) { return FpRep(make_linear_a(n), FpMod(PrimeField(p))); }

// Number of natural transformations F -> G over F2 by enumerating every
// tuple of component matrices.
std::uint64_t brute_force_hom_count(const FpRep& cat, const Representation<FpMod>& f,
                                    const Representation<FpMod>& g) {
  std::vector<Vertex> vs;
  std::vector<std::size_t> sizes;
  std::size_t bits = 0;
  for (const auto& [v, o] : f.objs) {
    if (!g.objs.count(v)) continue;
    vs.push_back(v);
    sizes.push_back(o.size() * g.objs.at(v).size());
    bits += sizes.back();
  }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::map<Vertex, ModMor<PrimeField>> comps;
    std::size_t off = 0;
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const auto& fo = f.objs.at(vs[t]);
      const auto& go = g.objs.at(vs[t]);
      Mat<PrimeField> m(go.size(), fo.size(), 0);
      for (std::size_t b = 0; b < sizes[t]; ++b) m.data()[b] = (mask >> (off + b)) & 1;
      off += sizes[t];
      comps.emplace(vs[t], cat.base().from_matrix(fo, go, m));
    }
    if (cat.is_natural(cat.make_morphism(f, g, comps))) ++count;
  }
  return count;
}

}  // namespace

TEST(RepHom, ExamplesOverA2) {
  auto cat = a_n(2);
  auto f = line_rep(cat, {1, 1}, {{1}});
  auto g = line_rep(cat, {1, 1}, {{0}});
  EXPECT_EQ(cat.hom(f, g).size(), 1u);
  auto s1 = cat.stalk(1, cat.base().free(1));
  auto s2 = cat.stalk(2, cat.base().free(1));
  EXPECT_EQ(cat.hom(s1, s1).size(), 1u);
  EXPECT_EQ(cat.hom(s1, s2).size(), 0u);
}

TEST(RepHom, AgreesWithBruteForceOverF2) {
  auto cat = FpRep(make_linear_a(3), FpMod(PrimeField(2)));
  Rng rng(17);
  int checked = 0;
  while (checked < 150) {
    auto f = cat.random_object(rng, 2);
    auto g = cat.random_object(rng, 2);
    std::size_t bits = 0;
    for (const auto& [v, o] : f.objs)
      if (g.objs.count(v)) bits += o.size() * g.objs.at(v).size();
    if (bits > 12) continue;
    const auto h = cat.hom(f, g);
    ASSERT_EQ(std::uint64_t{1} << h.size(), brute_force_hom_count(cat, f, g));
    ++checked;
  }
}

TEST(RepHom, ElementsAreNaturalAndCoordinatesRoundTrip) {
  ZRep cat(make_template("Atilde_2"), ZMod(IntegerRing()));
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = cat.random_object(rng, 2);
    auto g = cat.random_object(rng, 2);
    auto h = cat.hom(f, g);
    for (int s = 0; s < 3; ++s) {
      auto eta = cat.random_morphism(f, g, rng);
      ASSERT_TRUE(cat.is_natural(eta));
      ASSERT_TRUE(cat.equal(h.element(h.coordinates(eta)), eta));
    }
  }
}

TEST(RepAbelian, KernelCokernelImage) {
  auto cat = a_n(2);
  auto f = line_rep(cat, {1, 1}, {{1}});
  EXPECT_TRUE(cat.is_zero(cat.kernel(cat.identity(f)).obj));
  auto s2 = cat.stalk(2, cat.base().free(1));
  auto inc = cat.hom(s2, f).element({1});
  auto q = cat.cokernel(inc);
  EXPECT_TRUE(cat.equal(q.obj, cat.stalk(1, cat.base().free(1))));
  EXPECT_TRUE(cat.is_zero(image(cat, cat.zero_mor(f, f)).obj));
  EXPECT_TRUE(cat.inexact_vertices(inc, q.proj).empty());
  EXPECT_TRUE(is_short_exact(cat, inc, q.proj));
}

TEST(RepAbelian, WrongSequenceNamesVertex) {
  auto cat = a_n(2);
  const auto k = cat.base().free(1);
  auto s1 = cat.stalk(1, k), s2 = cat.stalk(2, k);
  auto mid = cat.direct_sum({s2, s1});
  // The zero map leaves the s1 summand outside the image of s2.
  auto f = injection(cat, {s2, s1}, 0);
  auto g = cat.zero_mor(mid, s2);
  auto bad = cat.inexact_vertices(f, g);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0], 1);
  EXPECT_FALSE(is_short_exact(cat, f, g));
}

TEST(RepAbelian, RandomKernelCokernelIdentities) {
  ZRep cat(make_linear_a(3), ZMod(IntegerRing()));
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = cat.random_object(rng, 2), g = cat.random_object(rng, 2);
    auto eta = cat.random_morphism(f, g, rng);
    auto k = cat.kernel(eta);
    auto q = cat.cokernel(eta);
    ASSERT_TRUE(cat.is_natural(k.emb));
    ASSERT_TRUE(cat.is_natural(q.proj));
    ASSERT_TRUE(cat.is_zero_mor(cat.compose(eta, k.emb)));
    ASSERT_TRUE(cat.is_zero_mor(cat.compose(q.proj, eta)));
    ASSERT_TRUE(is_mono(cat, k.emb));
    ASSERT_TRUE(is_epi(cat, q.proj));
    ASSERT_TRUE(cat.inexact_vertices(k.emb, eta).empty());
  }
}

TEST(FreeReps, UnfoldOverA2) {
  auto cat = a_n(2);
  const auto k = cat.base().free(1);
  auto f1 = cat.free_rep(1, k);
  EXPECT_TRUE(cat.equal(f1, line_rep(cat, {1, 1}, {{1}})));
  auto g2 = cat.cofree_rep(2, k);
  EXPECT_TRUE(cat.equal(g2, line_rep(cat, {1, 1}, {{1}})));
  EXPECT_TRUE(cat.equal(cat.cofree_rep(1, k), cat.stalk(1, k)));
  FpRep loop(make_template("loop"), FpMod(PrimeField(5)));
  EXPECT_THROW(loop.free_rep(1, k), InfiniteCone);
}

TEST(FreeReps, ProjectivityAndInjectivity) {
  auto cat = a_n(3);
  const auto k = cat.base().free(1);
  for (Vertex i = 1; i <= 3; ++i) {
    EXPECT_TRUE(cat.is_projective(cat.free_rep(i, k)));
    EXPECT_TRUE(cat.is_injective(cat.cofree_rep(i, k)));
  }
  EXPECT_FALSE(cat.is_projective(cat.stalk(1, k)));
  EXPECT_TRUE(cat.is_projective(cat.stalk(3, k)));
  EXPECT_FALSE(cat.is_injective(cat.stalk(3, k)));
}

TEST(Restriction, ExtendThenRestrictIsIdentity) {
  auto cat = a_n(3);
  FpRep sub(make_linear_a(3).full_subquiver({1, 2}), cat.base());
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = sub.random_object(rng, 3);
    auto ext = cat.extend_from(sub, f);
    EXPECT_EQ(ext.support(), f.support());
    EXPECT_TRUE(sub.equal(cat.restrict_to(sub, ext), f));
  }
  auto full = line_rep(cat, {1, 1, 1}, {{1}, {1}});
  EXPECT_TRUE(sub.equal(cat.restrict_to(sub, full), line_rep(a_n(2), {1, 1}, {{1}})));
}
