#include "qrep/canonical.hpp"

#include <algorithm>
#include <string>

namespace qrep {

namespace {

template <class B>
std::vector<Representation<B>> sources_of(const std::vector<RepMorphism<B>>& legs) {
  std::vector<Representation<B>> out;
  for (const auto& t : legs) out.push_back(t.src);
  return out;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ", ") + std::to_string(v);
  return s;
}

// Position of (summand, path) in a flattened list of labelled coordinates.
using Coord = std::pair<std::size_t, std::vector<ArrowId>>;

}  // namespace

template <class B>
CanonicalPresentation<B> Canonical<B>::presentation(const Obj& f, SplittingMethod method) const {
  const Cat& cat = category();
  const B& base = cat.base();
  CanonicalPresentation<B> p;
  p.f = f;
  std::map<Vertex, std::size_t> vidx;
  for (const auto& [i, fi] : f.objs) {
    vidx.emplace(i, p.vertices.size());
    p.vertices.push_back(i);
    for (const auto& a : cat.quiver().out_arrows(i)) p.arrows.push_back(a);
  }

  std::vector<Obj> parts0, parts1;
  for (Vertex i : p.vertices) parts0.push_back(fn_.free_rep(i, f.objs.at(i)).rep);
  for (const auto& a : p.arrows) parts1.push_back(fn_.free_rep(a.tgt, f.objs.at(a.src)).rep);
  p.p0 = cat.direct_sum(parts0);
  p.p1 = cat.direct_sum(parts1);

  // Γ ∘ μ_ρ = μ_{s(ρ)} ∘ f_ρ(F_{s(ρ)}) − μ_{t(ρ)} ∘ f_{t(ρ)}(F_ρ).
  std::map<BlockIndex, Mor> gb;
  for (std::size_t r = 0; r < p.arrows.size(); ++r) {
    const Arrow& a = p.arrows[r];
    const Path rho{a.src, a.tgt, {a.id}};
    gb.emplace(BlockIndex{vidx.at(a.src), r}, fn_.path_transformation(rho, f.objs.at(a.src)));
    if (vidx.count(a.tgt))
      gb.emplace(BlockIndex{vidx.at(a.tgt), r},
                 cat.neg(fn_.free_on_morphism(a.tgt, cat.arrow_map(f, a.id))));
  }
  p.gamma = cat.block(parts0, parts1, gb);

  std::map<BlockIndex, Mor> pb;
  for (std::size_t t = 0; t < p.vertices.size(); ++t)
    pb.emplace(BlockIndex{0, t}, fn_.counit(p.vertices[t], f));
  p.proj = cat.block({f}, parts0, pb);

  for (const auto& [k, obj] : p.p1.objs) {
    if (method == SplittingMethod::Explicit) {
      p.lambda.emplace(k, explicit_lambda(p, k));
    } else {
      auto r = split_retraction(base, cat.component(p.gamma, k));
      if (!r) throw VerificationError("canonical presentation: Γ does not split at vertex " +
                                      std::to_string(k));
      p.lambda.emplace(k, *r);
    }
  }

  if (!is_short_exact(cat, p.gamma, p.proj))
    throw VerificationError("canonical presentation is not exact (vertices: " +
                            vertex_list(cat.inexact_vertices(p.gamma, p.proj)) + ")");
  const auto defects = splitting_defects(p);
  if (!defects.empty())
    throw VerificationError("canonical presentation: Λ ∘ Γ ≠ 1 at vertices " + vertex_list(defects));
  return p;
}

// Coordinates (i, γ) of P0 at k map to Σ_m μ_{(a_m, a_{m+1}⋯a_n)} F_{a_1⋯a_{m-1}}
// where γ = a_1⋯a_n; the trivial path maps to zero.
template <class B>
typename B::Mor Canonical<B>::explicit_lambda(const CanonicalPresentation<B>& p, Vertex k) const {
  const Cat& cat = category();
  const B& base = cat.base();
  std::vector<BObj> rows, cols;
  std::map<Coord, std::size_t> row_of;
  std::map<ArrowId, std::size_t> arrow_of;
  for (std::size_t r = 0; r < p.arrows.size(); ++r) {
    const Arrow& a = p.arrows[r];
    arrow_of.emplace(a.id, r);
    const auto cone = cat.certified_right_cone(a.tgt).value;
    for (const auto& l : cone.at(k)) {
      row_of.emplace(Coord{r, l.arrows}, rows.size());
      rows.push_back(p.f.objs.at(a.src));
    }
  }
  std::map<BlockIndex, BMor> bl;
  for (Vertex i : p.vertices) {
    const auto cone = cat.certified_right_cone(i).value;
    for (const auto& g : cone.at(k)) {
      const std::size_t col = cols.size();
      cols.push_back(p.f.objs.at(i));
      Path prefix = Path::trivial(i);
      for (std::size_t m = 0; m < g.arrows.size(); ++m) {
        const Arrow a = cat.quiver().arrow(g.arrows[m]);
        if (p.f.objs.count(a.src)) {
          std::vector<ArrowId> rest(g.arrows.begin() + m + 1, g.arrows.end());
          bl.emplace(BlockIndex{row_of.at(Coord{arrow_of.at(a.id), rest}), col},
                     cat.along(p.f, prefix));
        }
        prefix = concat(prefix, Path{a.src, a.tgt, {a.id}});
      }
    }
  }
  return base.block(rows, cols, bl);
}

template <class B>
CanonicalCopresentation<B> Canonical<B>::copresentation(const Obj& f,
                                                        SplittingMethod method) const {
  const Cat& cat = category();
  const B& base = cat.base();
  CanonicalCopresentation<B> p;
  p.f = f;
  std::map<Vertex, std::size_t> vidx;
  for (const auto& [i, fi] : f.objs) {
    vidx.emplace(i, p.vertices.size());
    p.vertices.push_back(i);
    for (const auto& a : cat.quiver().in_arrows(i)) p.arrows.push_back(a);
  }

  std::vector<Obj> parts0, parts1;
  for (Vertex i : p.vertices) parts0.push_back(fn_.cofree_rep(i, f.objs.at(i)).rep);
  for (const auto& a : p.arrows) parts1.push_back(fn_.cofree_rep(a.src, f.objs.at(a.tgt)).rep);
  p.i0 = cat.direct_sum(parts0);
  p.i1 = cat.direct_sum(parts1);

  // π_ρ ∘ Γ = g_{s(ρ)}(F_ρ) ∘ π_{s(ρ)} − g_ρ(F_{t(ρ)}) ∘ π_{t(ρ)}.
  std::map<BlockIndex, Mor> gb;
  for (std::size_t r = 0; r < p.arrows.size(); ++r) {
    const Arrow& a = p.arrows[r];
    const Path rho{a.src, a.tgt, {a.id}};
    if (vidx.count(a.src))
      gb.emplace(BlockIndex{r, vidx.at(a.src)},
                 fn_.cofree_on_morphism(a.src, cat.arrow_map(f, a.id)));
    gb.emplace(BlockIndex{r, vidx.at(a.tgt)},
               cat.neg(fn_.cofree_path_transformation(rho, f.objs.at(a.tgt))));
  }
  p.gamma = cat.block(parts1, parts0, gb);

  std::map<BlockIndex, Mor> ub;
  for (std::size_t t = 0; t < p.vertices.size(); ++t)
    ub.emplace(BlockIndex{t, 0}, fn_.unit(p.vertices[t], f));
  p.unit = cat.block(parts0, {f}, ub);

  for (const auto& [k, obj] : p.i1.objs) {
    if (method == SplittingMethod::Explicit) {
      p.sigma.emplace(k, explicit_sigma(p, k));
    } else {
      auto s = split_section(base, cat.component(p.gamma, k));
      if (!s) throw VerificationError("canonical co-presentation: Γ does not split at vertex " +
                                      std::to_string(k));
      p.sigma.emplace(k, *s);
    }
  }

  if (!is_short_exact(cat, p.unit, p.gamma))
    throw VerificationError("canonical co-presentation is not exact (vertices: " +
                            vertex_list(cat.inexact_vertices(p.unit, p.gamma)) + ")");
  const auto defects = splitting_defects(p);
  if (!defects.empty())
    throw VerificationError("canonical co-presentation: Γ ∘ Σ ≠ 1 at vertices " +
                            vertex_list(defects));
  return p;
}

// Coordinate (i, γ) of I0 at k, γ = a_1⋯a_n ∈ Q(k, i), receives
// −Σ_m F_{a_{m+1}⋯a_n} z_{(a_m, a_1⋯a_{m-1})}.
template <class B>
typename B::Mor Canonical<B>::explicit_sigma(const CanonicalCopresentation<B>& p, Vertex k) const {
  const Cat& cat = category();
  const B& base = cat.base();
  std::vector<BObj> rows, cols;
  std::map<Coord, std::size_t> col_of;
  std::map<ArrowId, std::size_t> arrow_of;
  for (std::size_t r = 0; r < p.arrows.size(); ++r) {
    const Arrow& a = p.arrows[r];
    arrow_of.emplace(a.id, r);
    const auto cone = cat.certified_left_cone(a.src).value;
    for (const auto& l : cone.at(k)) {
      col_of.emplace(Coord{r, l.arrows}, cols.size());
      cols.push_back(p.f.objs.at(a.tgt));
    }
  }
  std::map<BlockIndex, BMor> bl;
  for (Vertex i : p.vertices) {
    const auto cone = cat.certified_left_cone(i).value;
    for (const auto& g : cone.at(k)) {
      const std::size_t row = rows.size();
      rows.push_back(p.f.objs.at(i));
      for (std::size_t m = 0; m < g.arrows.size(); ++m) {
        const Arrow a = cat.quiver().arrow(g.arrows[m]);
        if (!p.f.objs.count(a.tgt)) continue;
        std::vector<ArrowId> head(g.arrows.begin(), g.arrows.begin() + m);
        const Path tail{a.tgt, i, std::vector<ArrowId>(g.arrows.begin() + m + 1, g.arrows.end())};
        bl.emplace(BlockIndex{row, col_of.at(Coord{arrow_of.at(a.id), head})},
                   base.neg(cat.along(p.f, tail)));
      }
    }
  }
  return base.block(rows, cols, bl);
}

template <class B>
std::vector<Vertex> Canonical<B>::splitting_defects(const CanonicalPresentation<B>& p) const {
  const Cat& cat = category();
  const B& base = cat.base();
  std::vector<Vertex> out;
  for (const auto& [k, obj] : p.p1.objs) {
    auto it = p.lambda.find(k);
    if (it == p.lambda.end() ||
        !base.equal(base.compose(it->second, cat.component(p.gamma, k)), base.identity(obj)))
      out.push_back(k);
  }
  return out;
}

template <class B>
std::vector<Vertex> Canonical<B>::splitting_defects(const CanonicalCopresentation<B>& p) const {
  const Cat& cat = category();
  const B& base = cat.base();
  std::vector<Vertex> out;
  for (const auto& [k, obj] : p.i1.objs) {
    auto it = p.sigma.find(k);
    if (it == p.sigma.end() ||
        !base.equal(base.compose(cat.component(p.gamma, k), it->second), base.identity(obj)))
      out.push_back(k);
  }
  return out;
}

template <class B>
ShortExactSequence<B> Canonical<B>::stalk_presentation(Vertex x, const BObj& c) const {
  const Cat& cat = category();
  ShortExactSequence<B> s;
  s.b = fn_.free_rep(x, c).rep;
  s.c = cat.stalk(x, c);
  std::vector<Obj> parts;
  std::map<BlockIndex, Mor> bl;
  if (!cat.base().is_zero(c)) {
    for (const auto& a : cat.quiver().out_arrows(x)) {
      bl.emplace(BlockIndex{0, parts.size()}, fn_.path_transformation(Path{x, a.tgt, {a.id}}, c));
      parts.push_back(fn_.free_rep(a.tgt, c).rep);
    }
  }
  s.a = cat.direct_sum(parts);
  s.mono = cat.block({s.b}, parts, bl);
  s.epi = fn_.transport_from_base(x, cat.base().identity(c), s.c);
  if (!is_short_exact(cat, s.mono, s.epi))
    throw VerificationError("stalk presentation is not exact at vertex " + std::to_string(x));
  return s;
}

template <class B>
ShortExactSequence<B> Canonical<B>::path_length_filtration(Vertex x, const BObj& c,
                                                          std::size_t k) const {
  if (k == 0) throw std::invalid_argument("path_length_filtration: k must be at least 1");
  const Cat& cat = category();
  const B& base = cat.base();
  const auto cone = cat.certified_right_cone(x).value;
  std::vector<Path> longer, shorter;
  for (const auto& [v, ps] : cone.paths)
    for (const auto& p : ps) {
      if (p.arrows.size() == k) longer.push_back(p);
      if (p.arrows.size() + 1 == k) shorter.push_back(p);
    }
  std::sort(longer.begin(), longer.end(), path_less);
  std::sort(shorter.begin(), shorter.end(), path_less);

  ShortExactSequence<B> s;
  std::vector<Obj> frees_k, frees, stalks;
  std::map<BlockIndex, Mor> mb, eb;
  for (std::size_t t = 0; t < shorter.size(); ++t) {
    const Vertex v = shorter[t].target;
    frees.push_back(fn_.free_rep(v, c).rep);
    stalks.push_back(cat.stalk(v, c));
    eb.emplace(BlockIndex{t, t}, fn_.transport_from_base(v, base.identity(c), stalks.back()));
  }
  for (std::size_t t = 0; t < longer.size(); ++t) {
    const auto& p = longer[t];
    const Arrow last = cat.quiver().arrow(p.arrows.back());
    std::vector<ArrowId> head(p.arrows.begin(), p.arrows.end() - 1);
    const auto it = std::find_if(shorter.begin(), shorter.end(),
                                 [&](const Path& q) { return q.arrows == head; });
    frees_k.push_back(fn_.free_rep(p.target, c).rep);
    mb.emplace(BlockIndex{static_cast<std::size_t>(it - shorter.begin()), t},
               fn_.path_transformation(Path{last.src, last.tgt, {last.id}}, c));
  }
  s.a = cat.direct_sum(frees_k);
  s.b = cat.direct_sum(frees);
  s.c = cat.direct_sum(stalks);
  s.mono = cat.block(frees, frees_k, mb);
  s.epi = cat.block(stalks, frees, eb);
  if (!is_short_exact(cat, s.mono, s.epi))
    throw VerificationError("path-length filtration is not exact at step " + std::to_string(k));
  return s;
}

template <class B>
std::optional<typename Canonical<B>::Mor> Canonical<B>::descend_cocone(
    const CanonicalPresentation<B>& p, const std::vector<Mor>& legs, const Obj& g) const {
  const Cat& cat = category();
  std::map<BlockIndex, Mor> bl;
  for (std::size_t t = 0; t < legs.size(); ++t) bl.emplace(BlockIndex{0, t}, legs[t]);
  const Mor t = cat.block({g}, sources_of(legs), bl);
  return factor_through_left(cat, p.proj, t);
}

template class Canonical<FpMod>;
template class Canonical<QMod>;
template class Canonical<ZMod>;
template class Canonical<FpRep>;

}  // namespace qrep
