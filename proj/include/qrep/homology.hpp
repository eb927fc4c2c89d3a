#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qrep/category.hpp"
#include "qrep/fgmodule.hpp"
#include "qrep/functors.hpp"

// Projective resolutions, Ext and projective dimension for any category with
// the uniform surface (base categories and Rep(Q, C) alike). Ext^n(F, G) is
// the cohomology of Hom(P_•, G) presented as a Subquotient over the scalar
// ring, so over Z it comes out in diagonal form and over a field as a vector
// space.

namespace qrep {

// Needed resolution terms were cut off by the length cap.
class TruncatedResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class C>
struct Resolution {
  using Obj = typename C::Obj;
  using Mor = typename C::Mor;

  Obj f;
  std::vector<Obj> terms;  // P_0, P_1, ...
  std::vector<Mor> diffs;  // diffs[n] : P_{n+1} -> P_n
  Mor augmentation;        // P_0 -> F
  // syzygies[n] = ker(P_n -> previous); covers[n] : P_{n+1} ->> syzygies[n].obj.
  std::vector<typename C::Kernel> syzygies;
  std::vector<Mor> covers;
  bool truncated = false;

  std::size_t length() const { return terms.size() - 1; }
};

// 0 -> a -mono-> b -epi-> c -> 0.
template <class C>
struct Extension {
  typename C::Obj a, b, c;
  typename C::Mor mono, epi;
};

template <class C>
struct ExtGroup {
  using Ring = typename C::Ring;

  std::size_t degree = 0;
  Resolution<C> res;
  typename C::Hom cochains;  // Hom(P_n, G)
  Subquotient<Ring> group;   // cocycles modulo coboundaries
  std::optional<Extension<C>> representative;

  const Vec<Ring>& orders() const { return group.orders(); }
  // Minimal generator count (the dimension over a field).
  std::size_t size() const { return group.size(); }
  bool is_zero() const { return group.size() == 0; }
  // Cocycle P_n -> G for class coordinates c.
  typename C::Mor cocycle(const Vec<Ring>& c) const { return cochains.element(group.element(c)); }
  // Class coordinates of a cocycle P_n -> G.
  Vec<Ring> class_of(const typename C::Mor& z) const {
    return group.coordinates(cochains.coordinates(z));
  }
};

// Projective dimension; when exact is false only pd >= value is known.
struct ProjDim {
  std::size_t value = 0;
  bool exact = true;
  std::string str() const { return exact ? std::to_string(value) : ">=" + std::to_string(value); }
};

// P_0 ->> F with its kernel.
template <class C>
std::pair<typename C::Mor, typename C::Kernel> projective_presentation(const C& cat,
                                                                       const typename C::Obj& f) {
  auto p = cat.projective_cover(f);
  auto k = cat.kernel(p);
  return {std::move(p), std::move(k)};
}

// Resolution built from projective covers of successive syzygies; it stops
// at the first projective syzygy, which becomes the last term. With
// max_len = N the terms P_0..P_N are always available (zero past the end);
// truncated means Ω^{N+1} is not projective either.
template <class C>
Resolution<C> resolution(const C& cat, const typename C::Obj& f, std::size_t max_len) {
  Resolution<C> r;
  r.f = f;
  typename C::Obj omega = f;
  for (std::size_t n = 0;; ++n) {
    if (cat.is_projective(omega)) {
      if (n == 0) {
        r.terms.push_back(f);
        r.augmentation = cat.identity(f);
      } else {
        r.terms.push_back(omega);
        r.covers.push_back(cat.identity(omega));
        r.diffs.push_back(r.syzygies.back().emb);
      }
      return r;
    }
    if (n > max_len) {
      r.truncated = true;
      return r;
    }
    auto p = cat.projective_cover(omega);
    r.terms.push_back(p.src);
    if (n == 0) {
      r.augmentation = p;
    } else {
      r.diffs.push_back(cat.compose(r.syzygies.back().emb, p));
      r.covers.push_back(p);
    }
    r.syzygies.push_back(cat.kernel(p));
    omega = r.syzygies.back().obj;
  }
}

// P_m, zero past the end of an untruncated resolution.
template <class C>
typename C::Obj resolution_term(const C& cat, const Resolution<C>& r, std::size_t m) {
  if (m < r.terms.size()) return r.terms[m];
  if (r.truncated) throw TruncatedResolution("resolution term " + std::to_string(m) + " not built");
  return cat.zero_object();
}

// d_m : P_{m+1} -> P_m.
template <class C>
typename C::Mor resolution_diff(const C& cat, const Resolution<C>& r, std::size_t m) {
  if (m < r.diffs.size()) return r.diffs[m];
  return cat.zero_mor(resolution_term(cat, r, m + 1), resolution_term(cat, r, m));
}

// Ext^n(F, G) from a resolution of F reaching P_{n+1}.
template <class C>
ExtGroup<C> ext_from(const C& cat, const Resolution<C>& r, const typename C::Obj& g,
                     std::size_t n) {
  using Mor = typename C::Mor;
  const auto& ring = cat.ring();
  ExtGroup<C> e;
  e.degree = n;
  e.res = r;
  e.cochains = cat.hom(resolution_term(cat, r, n), g);
  const auto next = cat.hom(resolution_term(cat, r, n + 1), g);
  const Mor dn = resolution_diff(cat, r, n);
  const auto dmat =
      induced_matrix<C>(cat, e.cochains, next, [&](const Mor& x) { return cat.compose(x, dn); });
  const auto cocycles = kernel_mod(ring, dmat, next.orders());
  Mat<typename C::Ring> bounds(e.cochains.size(), 0, ring.zero());
  if (n > 0) {
    const auto prev = cat.hom(resolution_term(cat, r, n - 1), g);
    const Mor dp = resolution_diff(cat, r, n - 1);
    bounds = induced_matrix<C>(cat, prev, e.cochains,
                               [&](const Mor& x) { return cat.compose(x, dp); });
  }
  e.group = Subquotient<typename C::Ring>(ring, e.cochains.orders(), cocycles, bounds);
  return e;
}

// Ext^1 short exact sequence 0 -> G -> E -> F -> 0 from a cocycle P_1 -> G,
// by pushing the syzygy Ω^1 ↪ P_0 out along the induced map Ω^1 -> G.
template <class C>
std::optional<Extension<C>> extension_from_cocycle(const C& cat, const Resolution<C>& r,
                                                   const typename C::Obj& g,
                                                   const typename C::Mor& z) {
  using Mor = typename C::Mor;
  if (r.syzygies.empty() || r.covers.empty()) return std::nullopt;
  const auto& omega = r.syzygies[0];
  const auto zbar = factor_through_left(cat, r.covers[0], z);
  if (!zbar) return std::nullopt;
  const std::vector<typename C::Obj> sum{r.terms[0], g};
  std::map<BlockIndex, Mor> bl;
  bl.emplace(BlockIndex{0, 0}, cat.neg(omega.emb));
  bl.emplace(BlockIndex{1, 0}, *zbar);
  const auto q = cat.cokernel(cat.block(sum, {omega.obj}, bl));
  Extension<C> x;
  x.a = g;
  x.b = q.obj;
  x.c = r.f;
  x.mono = cat.compose(q.proj, injection(cat, sum, 1));
  std::map<BlockIndex, Mor> ab;
  ab.emplace(BlockIndex{0, 0}, r.augmentation);
  const auto epi = cat.descend_through_epi(q.proj, cat.block({r.f}, sum, ab));
  if (!epi) return std::nullopt;
  x.epi = *epi;
  return x;
}

// Ext^n(F, G); for n = 1 a representative extension of the first generator
// is attached when the group is nonzero.
template <class C>
ExtGroup<C> ext(const C& cat, const typename C::Obj& f, const typename C::Obj& g, std::size_t n,
                bool with_representative = false) {
  const auto r = resolution(cat, f, n + 1);
  auto e = ext_from(cat, r, g, n);
  if (with_representative && n == 1 && !e.is_zero()) {
    Vec<typename C::Ring> c(e.size(), cat.ring().zero());
    c[0] = cat.ring().one();
    e.representative = extension_from_cocycle(cat, r, g, e.cocycle(c));
  }
  return e;
}

// Cocycle P_1 -> A classifying 0 -> A -> B -> F -> 0.
template <class C>
typename C::Mor extension_cocycle(const C& cat, const Resolution<C>& r, const Extension<C>& x) {
  const auto lift = factor_through_right(cat, x.epi, r.augmentation);
  if (!lift) throw std::logic_error("extension_cocycle: augmentation does not lift");
  const auto t = cat.compose(*lift, resolution_diff(cat, r, 0));
  const auto z = cat.lift_through_mono(x.mono, t);
  if (!z) throw std::logic_error("extension_cocycle: lifted boundary misses the kernel");
  return *z;
}

// Yoneda product of z1 : P_1(X) -> Y (a class in Ext^1(X, Y)) and
// zn : Q_n(Y) -> Z (a class in Ext^n(Y, Z)) as a cocycle P_{n+1}(X) -> Z,
// by lifting z1 to a chain map P_{•+1}(X) -> Q_•(Y).
template <class C>
typename C::Mor yoneda_product(const C& cat, const Resolution<C>& rx, const typename C::Mor& z1,
                               const Resolution<C>& ry, const typename C::Mor& zn, std::size_t n) {
  auto alpha = factor_through_right(cat, ry.augmentation, z1);
  if (!alpha) throw std::logic_error("yoneda_product: cocycle does not lift to Q_0");
  for (std::size_t k = 1; k <= n; ++k) {
    const auto target = cat.compose(*alpha, resolution_diff(cat, rx, k));
    alpha = factor_through_right(cat, resolution_diff(cat, ry, k - 1), target);
    if (!alpha) throw std::logic_error("yoneda_product: chain map does not lift");
  }
  return cat.compose(zn, *alpha);
}

// pd(F) by split-testing the syzygies Ω^0, ..., Ω^{cap+1}; pd(0) = 0.
template <class C>
ProjDim projective_dimension(const C& cat, const typename C::Obj& f, std::size_t cap) {
  const auto r = resolution(cat, f, cap);
  if (r.truncated) return ProjDim{cap + 2, false};
  return ProjDim{r.length(), true};
}

// ---------------------------------------------------------------------------
// Rep(Q, C) specifics.

// f_y applied termwise to a resolution of C in the base: a projective
// resolution of f_y(C), since f_y is exact and keeps projectives.
template <class B>
Resolution<RepCategory<B>> free_resolution(const Functors<B>& fn, Vertex y, const Resolution<B>& q);

// pd(F) with cap sup_i pd(F_i) + 1; throws VerificationError if the
// resolution is longer than that bound.
template <class B>
ProjDim pd_rep(const RepCategory<B>& cat, const Representation<B>& f);

// Certificate that ι_S g_x(C) has projective dimension gl.dim(C) + 1 for
// S = {x -> y}: the sequence δ : f_y(C) ↪ g_y(C) ↠ g_x(C) in Rep(S) does not
// split, its Yoneda product with f_y(η) for a nonzero η ∈ Ext^n_C(C, D) is
// nonzero in Ext^{n+1}_S(g_x(C), f_y(D)), and Ext^{n+1}_Q(ι g_x(C), ι f_y(D))
// is nonzero.
template <class B>
struct Witness {
  Vertex x = 0, y = 0;
  ArrowId arrow = 0;
  std::string construction;
  std::size_t base_degree = 0;         // n
  bool delta_nonsplit = false;
  bool yoneda_nonzero = false;
  std::size_t certified_nonzero_degree = 0;
  std::size_t ext_generators = 0;      // of Ext^{n+1}_Q(ι g_x(C), ι f_y(D))
  mpz_class ext_order;                 // 0 when infinite
  ProjDim pd;                          // of ι g_x(C) in Rep(Q)

  bool certified() const {
    return delta_nonsplit && yoneda_nonzero && ext_generators > 0 && pd.exact &&
           pd.value == certified_nonzero_degree;
  }
};

// Uses the arrow x -> y (x ≠ y) of the quiver; degree defaults to gl.dim(C).
template <class B>
Witness<B> nonsplit_witness(const RepCategory<B>& cat, ArrowId arrow, const typename B::Obj& c,
                            const typename B::Obj& d, std::optional<std::size_t> degree = {});

// Objects C, D of the base with Ext^{gl.dim}(C, D) ≠ 0: (k, k) over a field,
// (Z/2, Z/2) over Z and (s_x k, s_y k) for an arrow x -> y of a Rep base.
std::pair<ModObj<PrimeField>, ModObj<PrimeField>> default_witness_objects(const FpMod& base);
std::pair<ModObj<RationalField>, ModObj<RationalField>> default_witness_objects(const QMod& base);
std::pair<ModObj<IntegerRing>, ModObj<IntegerRing>> default_witness_objects(const ZMod& base);
std::pair<Representation<FpMod>, Representation<FpMod>> default_witness_objects(const FpRep& base);

struct GldimReport {
  int bound = 0;
  std::size_t max_pd_observed = 0;
  bool all_samples_exact = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string witness_construction;
  std::size_t certified_nonzero_degree = 0;
  std::string witness_pd;
  bool witness_certified = false;

  bool ok() const {
    return all_samples_exact && max_pd_observed <= static_cast<std::size_t>(bound) &&
           witness_certified && certified_nonzero_degree == static_cast<std::size_t>(bound);
  }
};

// Samples random representations with vertex sizes ≤ dims_bound, records the
// largest pd and builds the witness on the first arrow with distinct ends.
template <class B>
GldimReport gldim_experiment(const RepCategory<B>& cat, std::size_t samples,
                             std::size_t dims_bound, std::uint64_t seed);

}  // namespace qrep
