#include <gtest/gtest.h>

#include "qrep/homology.hpp"
#include "support/ext_oracle.hpp"
#include "support/rep_helpers.hpp"

using namespace qrep;
using qrep::testing::diamond;
using qrep::testing::line_rep;
using qrep::testing::normal_form;

namespace {

FpRep a2_f5() { return FpRep(make_linear_a(2), FpMod(PrimeField(5))); }
ZRep a2_z() { return ZRep(make_linear_a(2), ZMod(IntegerRing())); }

Vec<IntegerRing> concat_orders(Vec<IntegerRing> a, const Vec<IntegerRing>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST(BaseExt, Integers) {
  ZMod z{IntegerRing()};
  const auto z2 = z.make({2}), z4 = z.make({4}), z6 = z.make({6}), zz = z.free(1);
  EXPECT_EQ(ext(z, z2, z2, 1).orders(), (Vec<IntegerRing>{2}));
  EXPECT_EQ(ext(z, z2, zz, 1).orders(), (Vec<IntegerRing>{2}));
  EXPECT_TRUE(ext(z, zz, z2, 1).is_zero());
  EXPECT_EQ(normal_form(z, ext(z, z4, z6, 1).orders()), (Vec<IntegerRing>{2}));
  EXPECT_EQ(ext(z, z4, z2, 0).orders(), (Vec<IntegerRing>{2}));  // Hom
  EXPECT_TRUE(ext(z, z4, z6, 2).is_zero());
  EXPECT_EQ(projective_dimension(z, z2, 3).value, 1u);
  EXPECT_EQ(projective_dimension(z, zz, 3).value, 0u);
}

TEST(RepExt, ExamplesOverA2) {
  const auto cat = a2_f5();
  const auto k = cat.base().free(1);
  const auto s1 = cat.stalk(1, k), s2 = cat.stalk(2, k);
  const auto e12 = ext(cat, s1, s2, 1, true);
  EXPECT_EQ(e12.size(), 1u);
  EXPECT_TRUE(ext(cat, s2, s1, 1).is_zero());
  ASSERT_TRUE(e12.representative.has_value());
  const auto& x = *e12.representative;
  EXPECT_TRUE(is_short_exact(cat, x.mono, x.epi));
  EXPECT_FALSE(split_retraction(cat, x.mono).has_value());
  EXPECT_TRUE(cat.equal(x.b, line_rep(cat, {1, 1}, {{1}})) || cat.at(x.b, 1).size() == 1);
}

TEST(RepExt, RepresentativeRecoversClass) {
  Rng rng(9);
  FpRep cat(make_linear_a(3), FpMod(PrimeField(3)));
  int nonzero = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = cat.random_object(rng, 2), g = cat.random_object(rng, 2);
    const auto r = resolution(cat, f, 2);
    const auto e = ext_from(cat, r, g, 1);
    if (e.is_zero()) continue;
    ++nonzero;
    Vec<PrimeField> c(e.size(), 0);
    for (auto& v : c) v = rng() % 3;
    const auto x = extension_from_cocycle(cat, r, g, e.cocycle(c));
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(is_short_exact(cat, x->mono, x->epi));
    EXPECT_EQ(e.class_of(extension_cocycle(cat, r, *x)), c);
    const bool zero = std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; });
    EXPECT_EQ(split_retraction(cat, x->mono).has_value(), zero);
  }
  EXPECT_GT(nonzero, 3);
}

TEST(RepExt, FreeAndCofreeAdjunctions) {
  Rng rng(4);
  const auto cat = a2_z();
  const auto& z = cat.base();
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto c = z.random_object(rng, 2);
    for (Vertex i : {1, 2})
      for (std::size_t n : {1, 2}) {
        EXPECT_EQ(normal_form(z, ext(cat, cat.free_rep(i, c), f, n).orders()),
                  normal_form(z, ext(z, c, cat.at(f, i), n).orders()));
        EXPECT_EQ(normal_form(z, ext(cat, f, cat.cofree_rep(i, c), n).orders()),
                  normal_form(z, ext(z, cat.at(f, i), c, n).orders()));
      }
  }
}

TEST(RepExt, CoproductsAddUp) {
  Rng rng(12);
  const auto cat = a2_z();
  const auto& z = cat.base();
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = cat.random_object(rng, 2), b = cat.random_object(rng, 2),
               c = cat.random_object(rng, 2);
    const auto ab = cat.direct_sum({a, b});
    for (std::size_t n : {1, 2})
      EXPECT_EQ(normal_form(z, ext(cat, ab, c, n).orders()),
                normal_form(z, concat_orders(ext(cat, a, c, n).orders(), ext(cat, b, c, n).orders())));
    EXPECT_EQ(projective_dimension(cat, ab, 3).value,
              std::max(projective_dimension(cat, a, 3).value, projective_dimension(cat, b, 3).value));
  }
}

TEST(RepExt, VanishesAboveTheBound) {
  Rng rng(15);
  FpRep f5(diamond(), FpMod(PrimeField(5)));
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = f5.random_object(rng, 2), g = f5.random_object(rng, 2);
    EXPECT_TRUE(ext(f5, f, g, 2).is_zero());
    for (Vertex i : {1, 2, 3, 4})
      EXPECT_TRUE(ext(f5, f, f5.cofree_rep(i, f5.base().free(1)), 1).is_zero());
  }
  const auto z = a2_z();
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_TRUE(ext(z, z.random_object(rng, 2), z.random_object(rng, 2), 3).is_zero());
}

TEST(RepExt, AgreesWithBruteForceOnA2) {
  FpRep cat(make_linear_a(2), FpMod(PrimeField(2)));
  const auto reps = qrep::testing::all_reps_f2(cat, 3);
  for (const auto& f : reps) {
    const auto r = resolution(cat, f, 2);
    for (const auto& g : reps)
      EXPECT_EQ(ext_from(cat, r, g, 1).size(), qrep::testing::brute_force_ext1_log2(cat, f, g));
  }
}

TEST(ProjectivePresentation, StalkOverIntegers) {
  const auto cat = a2_z();
  const auto& z = cat.base();
  const auto f = cat.stalk(1, z.make({2}));
  const auto [cover, k] = projective_presentation(cat, f);
  EXPECT_TRUE(cat.equal(cover.src, cat.free_rep(1, z.free(1))));
  EXPECT_EQ(z.free_rank(cat.at(k.obj, 1)), 1u);
  EXPECT_EQ(z.free_rank(cat.at(k.obj, 2)), 1u);
  EXPECT_TRUE(is_short_exact(cat, k.emb, cover));
  const auto r = resolution(cat, f, 3);
  EXPECT_EQ(r.length(), 2u);
  EXPECT_EQ(pd_rep(cat, f).value, 2u);
}

TEST(ProjectiveDimension, Examples) {
  const auto cat = a2_f5();
  const auto k = cat.base().free(1);
  EXPECT_EQ(pd_rep(cat, line_rep(cat, {1, 1}, {{1}})).value, 0u);
  EXPECT_EQ(pd_rep(cat, cat.stalk(1, k)).value, 1u);
  EXPECT_EQ(pd_rep(cat, cat.zero_object()).value, 0u);
  const auto p = projective_presentation(cat, cat.free_rep(1, k));
  EXPECT_TRUE(split_section(cat, p.first).has_value());
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_LE(resolution(cat, cat.random_object(rng, 3), 3).length(), 1u);
}

TEST(Witness, FieldIntegersAndSubquiver) {
  const auto f5 = a2_f5();
  const auto k = f5.base().free(1);
  const auto w = nonsplit_witness(f5, 1, k, k);
  EXPECT_TRUE(w.certified());
  EXPECT_EQ(w.certified_nonzero_degree, 1u);
  EXPECT_EQ(w.ext_generators, 1u);

  const auto z = a2_z();
  const auto z2 = z.base().make({2});
  const auto wz = nonsplit_witness(z, 1, z2, z2);
  EXPECT_TRUE(wz.certified());
  EXPECT_EQ(wz.pd.value, 2u);

  // A_2 = {1 -> 2} inside A_3: the class survives extension by zero.
  FpRep a3(make_linear_a(3), FpMod(PrimeField(5)));
  const auto w3 = nonsplit_witness(a3, 1, k, k);
  EXPECT_TRUE(w3.certified());
  EXPECT_EQ(ext(a3, a3.stalk(1, k), a3.stalk(2, k), 1).size(),
            ext(f5, f5.stalk(1, k), f5.stalk(2, k), 1).size());
}

TEST(Witness, LoopArrowIsRejected) {
  FpRep cat(make_template("A2+loop(1)"), FpMod(PrimeField(5)));
  const auto loop = cat.quiver().out_arrows(1);
  ArrowId id = 0;
  for (const auto& a : loop)
    if (a.tgt == 1) id = a.id;
  EXPECT_THROW(nonsplit_witness(cat, id, cat.base().free(1), cat.base().free(1)),
               std::invalid_argument);
}

TEST(GldimExperiment, SmallRuns) {
  const auto f5 = gldim_experiment(a2_f5(), 20, 3, 1);
  EXPECT_EQ(f5.bound, 1);
  EXPECT_TRUE(f5.ok());
  const auto z = gldim_experiment(a2_z(), 10, 2, 1);
  EXPECT_EQ(z.bound, 2);
  EXPECT_TRUE(z.ok());
  // Same seed, same report.
  const auto again = gldim_experiment(a2_f5(), 20, 3, 1);
  EXPECT_EQ(again.max_pd_observed, f5.max_pd_observed);
}
