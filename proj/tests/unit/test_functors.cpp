#include <gtest/gtest.h>

#include "qrep/functors.hpp"
#include "support/rep_helpers.hpp"

using namespace qrep;
using qrep::testing::diamond;
using qrep::testing::kronecker;
using qrep::testing::line_rep;
using qrep::testing::normal_form;

namespace {

std::vector<Quiver> finite_quivers() {
  return {make_linear_a(3), diamond(), kronecker(), make_template("grid(2,2)")};
}

}  // namespace

TEST(Functors, FreeAndCofreeAdjunctionsOverF3) {
  Rng rng(5);
  for (const auto& q : finite_quivers()) {
    FpRep cat(q, FpMod(PrimeField(3)));
    Functors<FpMod> fn(cat);
    for (int trial = 0; trial < 12; ++trial) {
      const auto f = cat.random_object(rng, 2);
      const auto c = cat.base().random_object(rng, 2);
      for (Vertex i : q.vertices()) {
        const auto fi = cat.at(f, i);
        EXPECT_EQ(cat.hom(fn.free_rep(i, c).rep, f).size(), cat.base().hom(c, fi).size());
        EXPECT_EQ(cat.hom(f, fn.cofree_rep(i, c).rep).size(), cat.base().hom(fi, c).size());
      }
    }
  }
}

TEST(Functors, FreeAdjunctionOverZKeepsGroupStructure) {
  Rng rng(8);
  ZRep cat(diamond(), ZMod(IntegerRing()));
  Functors<ZMod> fn(cat);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto c = cat.base().random_object(rng, 2);
    for (Vertex i : {1, 2, 4}) {
      const auto lhs = cat.hom(fn.free_rep(i, c).rep, f);
      const auto rhs = cat.base().hom(c, cat.at(f, i));
      EXPECT_EQ(normal_form(cat.base(), lhs.orders()), normal_form(cat.base(), rhs.orders()));
    }
  }
}

TEST(Functors, TransportsAreMutuallyInverse) {
  Rng rng(11);
  FpRep cat(diamond(), FpMod(PrimeField(5)));
  Functors<FpMod> fn(cat);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto c = cat.base().free(2);
    for (Vertex i : {1, 3}) {
      const auto beta = cat.base().random_morphism(c, cat.at(f, i), rng);
      const auto t = fn.transport_from_base(i, beta, f);
      EXPECT_TRUE(cat.is_natural(t));
      EXPECT_TRUE(cat.base().equal(fn.transport_to_base(i, c, t), beta));
      const auto fr = fn.free_rep(i, c);
      const auto s = cat.random_morphism(fr.rep, f, rng);
      EXPECT_TRUE(cat.equal(fn.transport_from_base(i, fn.transport_to_base(i, c, s), f), s));

      const auto gamma = cat.base().random_morphism(cat.at(f, i), c, rng);
      const auto u = fn.cotransport_from_base(i, gamma, f);
      EXPECT_TRUE(cat.base().equal(fn.cotransport_to_base(i, c, u), gamma));
    }
  }
}

TEST(Functors, CounitRestrictsToIdentity) {
  Rng rng(2);
  FpRep cat(make_linear_a(3), FpMod(PrimeField(5)));
  Functors<FpMod> fn(cat);
  const auto f = line_rep(cat, {2, 1, 1}, {{1, 1}, {3}});
  for (Vertex i : {1, 2, 3}) {
    const auto eps = fn.counit(i, f);
    const auto fi = cat.at(f, i);
    EXPECT_TRUE(cat.base().equal(fn.transport_to_base(i, fi, eps), cat.base().identity(fi)));
    const auto eta = fn.unit(i, f);
    EXPECT_TRUE(cat.base().equal(fn.cotransport_to_base(i, fi, eta), cat.base().identity(fi)));
  }
  // The counit at a source generates everything: f_1(F_1) -> F is onto here.
  EXPECT_TRUE(is_epi(cat, fn.counit(1, f)));
}

TEST(Functors, PathTransformationsAreContravariantlyFunctorial) {
  FpRep cat(make_linear_a(3), FpMod(PrimeField(7)));
  Functors<FpMod> fn(cat);
  const auto c = cat.base().free(2);
  const Path a1{1, 2, {1}}, a2{2, 3, {2}};
  const auto lhs = fn.path_transformation(concat(a1, a2), c);
  const auto rhs = cat.compose(fn.path_transformation(a1, c), fn.path_transformation(a2, c));
  EXPECT_TRUE(cat.equal(lhs, rhs));
  EXPECT_TRUE(cat.equal(fn.path_transformation(Path::trivial(2), c),
                        cat.identity(fn.free_rep(2, c).rep)));
}

TEST(Functors, PathTransformationMatchesYoneda) {
  // Precomposing with f_ρ corresponds to postcomposing with F_ρ.
  Rng rng(21);
  FpRep cat(diamond(), FpMod(PrimeField(3)));
  Functors<FpMod> fn(cat);
  const auto c = cat.base().free(1);
  const Path rho = concat(Path{1, 2, {1}}, Path{2, 4, {3}});
  for (int trial = 0; trial < 8; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto t = cat.random_morphism(fn.free_rep(1, c).rep, f, rng);
    const auto lhs = fn.transport_to_base(4, c, cat.compose(t, fn.path_transformation(rho, c)));
    const auto rhs = cat.base().compose(fn.e_path(rho, f), fn.transport_to_base(1, c, t));
    EXPECT_TRUE(cat.base().equal(lhs, rhs));
  }
}

TEST(Functors, FreeOnMorphismIsFunctorial) {
  Rng rng(4);
  FpRep cat(diamond(), FpMod(PrimeField(5)));
  Functors<FpMod> fn(cat);
  const auto& b = cat.base();
  const auto u = b.random_morphism(b.free(2), b.free(3), rng);
  const auto v = b.random_morphism(b.free(3), b.free(1), rng);
  EXPECT_TRUE(cat.equal(fn.free_on_morphism(1, b.compose(v, u)),
                        cat.compose(fn.free_on_morphism(1, v), fn.free_on_morphism(1, u))));
  EXPECT_TRUE(cat.equal(fn.cofree_on_morphism(4, b.compose(v, u)),
                        cat.compose(fn.cofree_on_morphism(4, v), fn.cofree_on_morphism(4, u))));
}

TEST(Functors, MeshMapsOnA2) {
  FpRep cat(make_linear_a(2), FpMod(PrimeField(5)));
  Functors<FpMod> fn(cat);
  const auto iso = line_rep(cat, {1, 1}, {{1}});
  EXPECT_EQ(fn.c_of(1, iso).size(), 1u);
  EXPECT_EQ(fn.c_of(2, iso).size(), 0u);
  EXPECT_EQ(fn.k_of(1, iso).size(), 0u);
  EXPECT_EQ(fn.k_of(2, iso).size(), 1u);
  const auto zero = line_rep(cat, {1, 1}, {{0}});
  EXPECT_EQ(fn.c_of(2, zero).size(), 1u);
  EXPECT_EQ(fn.k_of(1, zero).size(), 1u);
  EXPECT_EQ(fn.phi_map(2, zero).arrows.size(), 1u);
  EXPECT_TRUE(fn.psi_map(2, zero).arrows.empty());
}

TEST(Functors, AdjointsOfFreeAndCofreeOverF2) {
  Rng rng(13);
  for (const auto& q : finite_quivers()) {
    FpRep cat(q, FpMod(PrimeField(2)));
    Functors<FpMod> fn(cat);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = cat.random_object(rng, 2);
      const auto c = cat.base().random_object(rng, 2);
      for (Vertex z : q.vertices()) {
        const auto r = fn.right_adjoint_of_g(z, f);
        EXPECT_EQ(cat.hom(fn.cofree_rep(z, c).rep, f).size(), cat.base().hom(c, r.obj).size())
            << q.name() << " z=" << z;
        const auto l = fn.left_adjoint_of_f(z, f);
        EXPECT_EQ(cat.hom(f, fn.free_rep(z, c).rep).size(), cat.base().hom(l.obj, c).size())
            << q.name() << " z=" << z;
      }
    }
  }
}

TEST(Functors, AdjointsOfFreeAndCofreeOverZ) {
  Rng rng(29);
  ZRep cat(kronecker(), ZMod(IntegerRing()));
  Functors<ZMod> fn(cat);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = cat.random_object(rng, 2);
    const auto c = cat.base().random_object(rng, 2);
    for (Vertex z : {1, 2}) {
      const auto r = fn.right_adjoint_of_g(z, f);
      EXPECT_EQ(normal_form(cat.base(), cat.hom(fn.cofree_rep(z, c).rep, f).orders()),
                normal_form(cat.base(), cat.base().hom(c, r.obj).orders()));
      const auto l = fn.left_adjoint_of_f(z, f);
      EXPECT_EQ(normal_form(cat.base(), cat.hom(f, fn.free_rep(z, c).rep).orders()),
                normal_form(cat.base(), cat.base().hom(l.obj, c).orders()));
    }
  }
}

TEST(Functors, NestedFreeAdjunction) {
  // Rep(A2, Rep(A2, F2)): free functor adjunction one level up.
  FpRep inner(make_linear_a(2), FpMod(PrimeField(2)));
  NestedFpRep outer(make_linear_a(2), inner);
  Functors<FpRep> fn(outer);
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = outer.random_object(rng, 1);
    const auto c = inner.random_object(rng, 1);
    for (Vertex i : {1, 2})
      EXPECT_EQ(outer.hom(fn.free_rep(i, c).rep, f).size(), inner.hom(c, outer.at(f, i)).size());
  }
}
