#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qrep/quiver_analysis.hpp"
#include "qrep/sampling.hpp"

using namespace qrep;

namespace {

Vertex vx(const Quiver& q, const std::string& name) {
  auto v = q.find_vertex(name);
  if (!v) throw std::runtime_error("no vertex " + name);
  return *v;
}

// Random finite quiver with loops, cycles and parallel arrows.
Quiver random_quiver(std::mt19937_64& rng, std::size_t n, std::size_t arrows) {
  std::vector<Vertex> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(static_cast<Vertex>(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Arrow> as;
  for (std::size_t k = 0; k < arrows; ++k)
    as.push_back(Arrow{static_cast<ArrowId>(k + 1), vs[pick(rng)], vs[pick(rng)]});
  return Quiver::make_explicit(vs, as);
}

// reach[i][j]: a path of length >= 1 from i to j.
std::vector<std::vector<bool>> transitive_closure(const Quiver& q) {
  const std::size_t n = q.vertices().size();
  std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& a : q.arrows()) r[a.src][a.tgt] = true;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Only descends into vertices that still reach j, so cycles elsewhere are skipped.
std::size_t dfs_count(const Quiver& q, const std::vector<std::vector<bool>>& r, Vertex i, Vertex j) {
  std::size_t c = i == j ? 1 : 0;
  for (const auto& a : q.out_arrows(i))
    if (a.tgt == j || r[a.tgt][j]) c += dfs_count(q, r, a.tgt, j);
  return c;
}

}  // namespace

TEST(CardinalOrder, TotalOrderAndSuccessor) {
  EXPECT_LT(Cardinal::finite(2), Cardinal::finite(3));
  EXPECT_LT(Cardinal::finite(1000000), Cardinal::aleph0());
  EXPECT_LT(Cardinal::aleph0(), Cardinal::aleph1());
  EXPECT_EQ(Cardinal::finite(4).successor(), Cardinal::finite(5));
  EXPECT_EQ(Cardinal::aleph0().successor(), Cardinal::aleph1());
  EXPECT_THROW(Cardinal::aleph1().successor(), CardinalRangeError);
  for (const auto c : {Cardinal::finite(7), Cardinal::aleph0(), Cardinal::aleph1()})
    EXPECT_EQ(Cardinal::parse(c.to_string()), c);
}

TEST(CardinalSize, Examples) {
  EXPECT_EQ(cardinal_size({Cardinal::finite(1), Cardinal::finite(2)}), Cardinal::finite(3));
  CardinalFamily unbounded;
  unbounded.unbounded_finite = true;
  EXPECT_EQ(cardinal_size(unbounded), Cardinal::aleph0());
  EXPECT_EQ(cardinal_size({Cardinal::aleph0()}), Cardinal::aleph1());
  EXPECT_EQ(cardinal_size(std::vector<Cardinal>{}), Cardinal::finite(0));
  EXPECT_THROW(cardinal_size({Cardinal::aleph1()}), CardinalRangeError);
}

TEST(CardinalSize, OrderPreservingUnderInclusion) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> kind(0, 9), val(0, 6);
  for (int t = 0; t < 500; ++t) {
    std::vector<Cardinal> big;
    const int n = 1 + val(rng);
    for (int k = 0; k < n; ++k) {
      const int d = kind(rng);
      big.push_back(d == 0 ? Cardinal::aleph0() : Cardinal::finite(static_cast<std::uint64_t>(val(rng))));
    }
    std::vector<Cardinal> small;
    for (const auto& c : big)
      if (kind(rng) < 5) small.push_back(c);
    ASSERT_LE(cardinal_size(small), cardinal_size(big));
  }
}

TEST(Paths, Examples) {
  const Quiver a3 = make_linear_a(3);
  const auto p = enumerate_paths(a3, 1, 3);
  ASSERT_TRUE(p.exact());
  ASSERT_EQ(p.value.paths.size(), 1u);
  EXPECT_EQ(p.value.paths[0].length(), 2u);
  const auto back = enumerate_paths(make_linear_a(2), 2, 1);
  EXPECT_TRUE(back.exact());
  EXPECT_TRUE(back.value.paths.empty());
  const auto loop = enumerate_paths(make_template("loop"), 1, 1);
  EXPECT_TRUE(loop.value.infinite.has_value());
  EXPECT_EQ(loop.value.cardinality(), Cardinal::aleph0());
  EXPECT_THROW(enumerate_paths(a3, 1, 9), QuiverError);
}

// Finite counts against a DFS, infinitude against a closure-based cycle test.
TEST(Paths, AgreeWithClosureOracleOnRandomQuivers) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Quiver q = random_quiver(rng, n, rng() % 8);
    const auto r = transitive_closure(q);
    for (Vertex i : q.vertices())
      for (Vertex j : q.vertices()) {
        bool infinite = false;
        for (Vertex k : q.vertices())
          if ((i == k || r[i][k]) && r[k][k] && (k == j || r[k][j])) infinite = true;
        const auto v = enumerate_paths(q, i, j);
        ASSERT_TRUE(v.exact());
        ASSERT_EQ(v.value.infinite.has_value(), infinite) << t << ": " << i << "->" << j;
        if (!infinite) {
          ASSERT_EQ(v.value.paths.size(), dfs_count(q, r, i, j));
          if (i == j) {
            const auto trivial = std::count_if(v.value.paths.begin(), v.value.paths.end(),
                                               [](const Path& p) { return p.is_trivial(); });
            ASSERT_EQ(trivial, 1);
          }
        }
      }
  }
}

TEST(Invariants, Examples) {
  const Quiver loop = make_template("loop");
  EXPECT_EQ(invariant(loop, Invariant::rtccn).value, Cardinal::aleph1());
  EXPECT_EQ(invariant(make_linear_a(2), Invariant::rccn).value, Cardinal::finite(2));
  EXPECT_EQ(invariant(make_linear_a(2), Invariant::rccn).status, VerdictStatus::Exact);
  EXPECT_EQ(invariant(loop, Invariant::rccn_i, 1).value, Cardinal::aleph1());
  EXPECT_THROW(invariant(loop, Invariant::rccn_i), std::invalid_argument);
  for (Invariant inv : all_invariants()) EXPECT_EQ(parse_invariant(to_string(inv)), inv);
}

TEST(RootFiltration, Examples) {
  const auto r = root_filtration(make_linear_a(3), Side::Right);
  ASSERT_EQ(r.strata.size(), 3u);
  EXPECT_EQ(r.strata[0], (std::set<Vertex>{3}));
  EXPECT_EQ(r.strata[1], (std::set<Vertex>{2, 3}));
  EXPECT_EQ(r.strata[2], (std::set<Vertex>{1, 2, 3}));
  EXPECT_TRUE(r.covers_all);
  const auto l = root_filtration(make_template("loop"), Side::Right);
  ASSERT_EQ(l.strata.size(), 1u);
  EXPECT_TRUE(l.strata[0].empty());
  EXPECT_TRUE(l.converged);
  EXPECT_FALSE(l.covers_all);
  EXPECT_TRUE(root_filtration(make_linear_a(2), Side::Left).covers_all);
}

TEST(RootFiltration, RightRootedIffAcyclicOnRandomQuivers) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const Quiver q = random_quiver(rng, 1 + rng() % 6, rng() % 9);
    const auto r = transitive_closure(q);
    bool acyclic = true;
    for (Vertex v : q.vertices()) acyclic = acyclic && !r[v][v];
    for (Side side : {Side::Left, Side::Right}) {
      const auto f = root_filtration(q, side);
      for (std::size_t k = 1; k < f.strata.size(); ++k)
        ASSERT_TRUE(std::includes(f.strata[k].begin(), f.strata[k].end(), f.strata[k - 1].begin(),
                                  f.strata[k - 1].end()));
      ASSERT_EQ(f.covers_all, acyclic) << t;
    }
    const auto c = classify(q);
    ASSERT_EQ(c.flags.at("right_rooted").value, acyclic);
    ASSERT_EQ(c.flags.at("acyclic").value, acyclic);
  }
}

TEST(Boundary, Examples) {
  const Quiver a3 = make_linear_a(3);
  EXPECT_EQ(boundary(a3, {2}, BoundarySide::Minus).value, (std::set<Vertex>{1}));
  EXPECT_TRUE(boundary(a3, {1}, BoundarySide::Minus).value.empty());
  const Quiver z = make_template("A_inf_zigzag");
  const auto plus = boundary(z, {vx(z, "1")}, BoundarySide::Plus);
  EXPECT_TRUE(plus.certified());
  EXPECT_TRUE(plus.value.empty());
  const auto minus = boundary(z, {vx(z, "3")}, BoundarySide::Minus);
  EXPECT_EQ(minus.value, (std::set<Vertex>{vx(z, "2"), vx(z, "4")}));
}

// (∪H_i)^± ⊆ ∪H_i^± and H ⊆ S ⟹ H^- ⊆ S^- ∪ (S - H), against closure sets.
TEST(Boundary, UnionAndMonotonicityOnRandomQuivers) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const Quiver q = random_quiver(rng, n, rng() % 9);
    const auto r = transitive_closure(q);
    auto random_set = [&] {
      std::set<Vertex> s;
      for (Vertex v : q.vertices())
        if (rng() % 2) s.insert(v);
      if (s.empty()) s.insert(q.vertices()[0]);
      return s;
    };
    const auto h1 = random_set(), h2 = random_set();
    std::set<Vertex> u = h1;
    u.insert(h2.begin(), h2.end());
    for (auto side : {BoundarySide::Minus, BoundarySide::Plus}) {
      const auto b1 = boundary(q, h1, side).value, b2 = boundary(q, h2, side).value;
      const auto bu = boundary(q, u, side).value;
      for (Vertex v : bu) ASSERT_TRUE(b1.count(v) || b2.count(v));
      // Oracle: closure-based boundary.
      std::set<Vertex> expect;
      for (Vertex v : q.vertices()) {
        if (h1.count(v)) continue;
        for (Vertex s : h1)
          if (side == BoundarySide::Minus ? r[v][s] : r[s][v]) expect.insert(v);
      }
      ASSERT_EQ(b1, expect);
    }
    std::set<Vertex> h;
    for (Vertex v : u)
      if (rng() % 2) h.insert(v);
    if (h.empty()) continue;
    const auto hm = boundary(q, h, BoundarySide::Minus).value;
    const auto sm = boundary(q, u, BoundarySide::Minus).value;
    for (Vertex v : hm) ASSERT_TRUE(sm.count(v) || (u.count(v) && !h.count(v)));
  }
}

TEST(Classify, Examples) {
  const auto z = classify(make_template("A_inf_zigzag"));
  EXPECT_TRUE(z.flags.at("finite_cone_shape").value);
  EXPECT_TRUE(z.flags.at("finite_cone_shape").certified());
  const auto loop = classify(make_template("loop"));
  EXPECT_FALSE(loop.flags.at("acyclic").value);
  EXPECT_FALSE(loop.flags.at("right_rooted").value);
  // A finite-cone-shape quiver with a loop added.
  const Quiver a3loop =
      Quiver::make_explicit({1, 2, 3}, {Arrow{1, 1, 2}, Arrow{2, 2, 3}, Arrow{3, 2, 2}});
  const auto c = classify(a3loop);
  EXPECT_TRUE(c.flags.at("support_finite").value);
  EXPECT_FALSE(c.flags.at("finite_cone_shape").value);
  for (const char* f : {"locally_finite", "interval_finite", "strongly_locally_finite",
                        "right_support_finite", "left_support_finite", "left_rooted"})
    EXPECT_TRUE(c.flags.count(f)) << f;
}

TEST(SubquiverFamily, Examples) {
  const auto a = subquiver_family(make_linear_a(3), {2});
  EXPECT_TRUE(a.in_FBT.value);
  const Quiver ray = make_template("ray_fwd");
  const auto r = subquiver_family(ray, {*ray.vertex_at(0)});
  EXPECT_TRUE(r.in_FB.value);
  EXPECT_FALSE(r.in_FT.value);
  EXPECT_TRUE(r.in_FT.certified());
  const Quiver q = make_linear_a(4);
  const std::set<Vertex> all(q.vertices().begin(), q.vertices().end());
  EXPECT_TRUE(subquiver_family(q, all).in_FBT.value);
}

TEST(RandomAcyclic, RespectsBounds) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Quiver q = random_acyclic_quiver(rng, 8, 12, 64);
    ASSERT_LE(q.vertices().size(), 8u);
    ASSERT_LE(q.arrows().size(), 12u);
    ASSERT_LE(total_path_count(q), 64u);
    ASSERT_TRUE(classify(q).flags.at("acyclic").value);
  }
}

TEST(Templates, AllNamesBuild) {
  for (const char* t : {"A_4", "Atilde_3", "A_inf_zigzag", "D_inf", "A_biinf_zigzag",
                        "A_biinf_line", "ray_fwd", "loop", "grid(2,3)"})
    EXPECT_NO_THROW(make_template(t)) << t;
  EXPECT_THROW(make_template("nope"), QuiverError);
}
