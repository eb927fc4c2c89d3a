#include "qrep/homology.hpp"

#include <algorithm>
#include <random>

namespace qrep {

template <class B>
Resolution<RepCategory<B>> free_resolution(const Functors<B>& fn, Vertex y, const Resolution<B>& q) {
  Resolution<RepCategory<B>> r;
  r.f = fn.free_rep(y, q.f).rep;
  for (const auto& t : q.terms) r.terms.push_back(fn.free_rep(y, t).rep);
  for (const auto& d : q.diffs) r.diffs.push_back(fn.free_on_morphism(y, d));
  r.augmentation = fn.free_on_morphism(y, q.augmentation);
  r.truncated = q.truncated;
  return r;
}

template <class B>
ProjDim pd_rep(const RepCategory<B>& cat, const Representation<B>& f) {
  const B& base = cat.base();
  const auto base_cap = static_cast<std::size_t>(std::max(base.gl_dim(), 0));
  std::size_t sup = 0;
  for (const auto& [v, o] : f.objs) {
    const auto p = projective_dimension(base, o, base_cap);
    if (!p.exact) throw VerificationError("pd of a vertex object exceeds gl.dim of the base");
    sup = std::max(sup, p.value);
  }
  const std::size_t cap = sup + 1;
  const auto p = projective_dimension(cat, f, cap);
  if (!p.exact || p.value > cap)
    throw VerificationError("pd(F) = " + p.str() + " exceeds sup pd(F_i) + 1 = " +
                            std::to_string(cap));
  return p;
}

namespace {

template <class B>
RepMorphism<B> extend_morphism(const RepCategory<B>& cat, const RepCategory<B>& sub,
                               const RepMorphism<B>& m) {
  return cat.make_morphism(cat.extend_from(sub, m.src), cat.extend_from(sub, m.tgt), m.comps);
}

}  // namespace

template <class B>
Witness<B> nonsplit_witness(const RepCategory<B>& cat, ArrowId arrow, const typename B::Obj& c,
                            const typename B::Obj& d, std::optional<std::size_t> degree) {
  using Cat = RepCategory<B>;
  const B& base = cat.base();
  const Arrow a = cat.quiver().arrow(arrow);
  if (a.src == a.tgt) throw std::invalid_argument("nonsplit_witness: the arrow must join x ≠ y");
  if (base.is_zero(c)) throw std::invalid_argument("nonsplit_witness: C must be nonzero");
  Witness<B> w;
  w.x = a.src;
  w.y = a.tgt;
  w.arrow = arrow;
  w.base_degree = degree.value_or(static_cast<std::size_t>(std::max(base.gl_dim(), 0)));
  const std::size_t n = w.base_degree;
  w.certified_nonzero_degree = n + 1;

  // S = {x -> y}: the full subquiver on the two ends, required to be A_2.
  const Quiver sq = cat.quiver().subquiver({a.src, a.tgt}, std::set<ArrowId>{arrow});
  if (cat.quiver().full_subquiver({a.src, a.tgt}).arrows().size() != 1)
    throw std::invalid_argument("nonsplit_witness: {x, y} must span exactly one arrow");
  const Cat scat(sq, base, cat.budget());
  const Functors<B> sfn(scat);

  // δ_C : f_y(C) ↪ g_y(C) ↠ g_x(C).
  const auto gx = scat.cofree_rep(a.src, c);
  const auto gy = scat.cofree_rep(a.tgt, c);
  const auto fy = scat.free_rep(a.tgt, c);
  Extension<Cat> delta;
  delta.a = fy;
  delta.b = gy;
  delta.c = gx;
  delta.mono = scat.cofree_adjoint(a.tgt, base.identity(c), fy);
  delta.epi = scat.cofree_adjoint(a.src, base.identity(c), gy);
  if (!is_short_exact(scat, delta.mono, delta.epi))
    throw VerificationError("nonsplit_witness: δ is not short exact");
  w.delta_nonsplit = !split_retraction(scat, delta.mono).has_value();

  // η ∈ Ext^n_C(C, D), the first generator.
  const auto eta = ext(base, c, d, n);
  if (eta.is_zero())
    throw std::invalid_argument("nonsplit_witness: Ext^" + std::to_string(n) +
                                "(C, D) vanishes in the base");
  Vec<typename B::Ring> e0(eta.size(), base.ring().zero());
  e0[0] = base.ring().one();
  const auto zeta = eta.cocycle(e0);

  const auto rx = resolution(scat, gx, n + 2);
  const auto z1 = extension_cocycle(scat, rx, delta);
  const auto ry = free_resolution(sfn, a.tgt, eta.res);
  const auto zn = sfn.free_on_morphism(a.tgt, zeta);
  const auto prod = yoneda_product(scat, rx, z1, ry, zn, n);
  const auto fyd = scat.free_rep(a.tgt, d);
  const auto es = ext_from(scat, rx, fyd, n + 1);
  const auto cls = es.class_of(prod);
  w.yoneda_nonzero =
      std::any_of(cls.begin(), cls.end(), [&](const auto& v) { return v != base.ring().zero(); });

  const auto x_q = cat.extend_from(scat, gx);
  const auto eq = ext(cat, x_q, cat.extend_from(scat, fyd), n + 1);
  w.ext_generators = eq.size();
  w.ext_order = module_order(cat.ring(), eq.orders());
  w.pd = projective_dimension(cat, x_q, n + 1);

  w.construction = "delta: f_" + cat.quiver().vertex_name(a.tgt) + "(C) -> g_" +
                   cat.quiver().vertex_name(a.tgt) + "(C) -> g_" + cat.quiver().vertex_name(a.src) +
                   "(C) on arrow " + cat.quiver().arrow_name(arrow) + ", C = " + base.describe(c) +
                   ", D = " + base.describe(d) + ", base class in Ext^" + std::to_string(n);
  return w;
}

std::pair<ModObj<PrimeField>, ModObj<PrimeField>> default_witness_objects(const FpMod& base) {
  return {base.free(1), base.free(1)};
}

std::pair<ModObj<RationalField>, ModObj<RationalField>> default_witness_objects(const QMod& base) {
  return {base.free(1), base.free(1)};
}

std::pair<ModObj<IntegerRing>, ModObj<IntegerRing>> default_witness_objects(const ZMod& base) {
  const auto z2 = base.make({IntegerRing::Elem(2)});
  return {z2, z2};
}

std::pair<Representation<FpMod>, Representation<FpMod>> default_witness_objects(const FpRep& base) {
  for (const auto& a : base.quiver().arrows())
    if (a.src != a.tgt) {
      const auto k = base.base().free(1);
      return {base.stalk(a.src, k), base.stalk(a.tgt, k)};
    }
  throw std::invalid_argument("default_witness_objects: the base quiver needs an arrow x -> y");
}

template <class B>
GldimReport gldim_experiment(const RepCategory<B>& cat, std::size_t samples,
                             std::size_t dims_bound, std::uint64_t seed) {
  GldimReport rep;
  rep.bound = cat.base().gl_dim() + 1;
  rep.samples = samples;
  rep.seed = seed;
  for (std::size_t s = 0; s < samples; ++s) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(s)};
    Rng rng(seq);
    const auto f = cat.random_object(rng, dims_bound);
    const auto p = projective_dimension(cat, f, static_cast<std::size_t>(rep.bound));
    rep.all_samples_exact = rep.all_samples_exact && p.exact;
    rep.max_pd_observed = std::max(rep.max_pd_observed, p.value);
  }
  std::optional<Arrow> arrow;
  for (const auto& a : cat.quiver().arrows())
    if (a.src != a.tgt && cat.quiver().full_subquiver({a.src, a.tgt}).arrows().size() == 1) {
      arrow = a;
      break;
    }
  if (!arrow) throw std::invalid_argument("gldim_experiment: no arrow x -> y spanning A_2");
  const auto [c, d] = default_witness_objects(cat.base());
  const auto w = nonsplit_witness(cat, arrow->id, c, d);
  rep.witness_construction = w.construction;
  rep.certified_nonzero_degree = w.certified() ? w.certified_nonzero_degree : 0;
  rep.witness_pd = w.pd.str();
  rep.witness_certified = w.certified();
  return rep;
}

#define QREP_INSTANTIATE_HOMOLOGY(B)                                                            \
  template Resolution<RepCategory<B>> free_resolution(const Functors<B>&, Vertex,              \
                                                      const Resolution<B>&);                   \
  template ProjDim pd_rep(const RepCategory<B>&, const Representation<B>&);                    \
  template Witness<B> nonsplit_witness(const RepCategory<B>&, ArrowId, const B::Obj&,          \
                                       const B::Obj&, std::optional<std::size_t>);             \
  template GldimReport gldim_experiment(const RepCategory<B>&, std::size_t, std::size_t,       \
                                        std::uint64_t);

QREP_INSTANTIATE_HOMOLOGY(FpMod)
QREP_INSTANTIATE_HOMOLOGY(QMod)
QREP_INSTANTIATE_HOMOLOGY(ZMod)
QREP_INSTANTIATE_HOMOLOGY(FpRep)

}  // namespace qrep
