#include "qrep/repcat.hpp"

#include <sstream>

namespace qrep {

// ---------------------------------------------------------------------------
// RepHom

template <class B>
RepHom<B>::RepHom(const RepCategory<B>& cat, const Representation<B>& f,
                  const Representation<B>& g)
    : base_(cat.base()), f_(f), g_(g) {
  const B& base = *base_;
  const auto& ring = base.ring();
  Vec<Ring> ambient;
  std::map<Vertex, std::size_t> index;
  for (const auto& [v, fv] : f_.objs) {
    auto it = g_.objs.find(v);
    if (it == g_.objs.end()) continue;
    index[v] = verts_.size();
    verts_.push_back(v);
    offsets_.push_back(ambient.size());
    homs_.push_back(base.hom(fv, it->second));
    const auto& ords = homs_.back().orders();
    ambient.insert(ambient.end(), ords.begin(), ords.end());
  }
  const std::size_t n = ambient.size();

  // Constraints G_α η_i − η_j F_α ∈ Hom(F_i, G_j).
  struct Constraint {
    Arrow a;
    typename B::Hom target;
    std::size_t offset;
  };
  std::vector<Constraint> cons;
  Vec<Ring> wo;
  for (const auto& [v, fv] : f_.objs) {
    for (const auto& a : cat.quiver().out_arrows(v)) {
      auto gj = g_.objs.find(a.tgt);
      if (gj == g_.objs.end()) continue;
      if (!index.count(a.src) && !index.count(a.tgt)) continue;
      cons.push_back(Constraint{a, base.hom(fv, gj->second), wo.size()});
      const auto& ords = cons.back().target.orders();
      wo.insert(wo.end(), ords.begin(), ords.end());
    }
  }
  Mat<Ring> sys(wo.size(), n, ring.zero());
  for (std::size_t t = 0; t < verts_.size(); ++t) {
    const Vertex v = verts_[t];
    const auto& h = homs_[t];
    Vec<Ring> e(h.size(), ring.zero());
    for (std::size_t k = 0; k < h.size(); ++k) {
      e[k] = ring.one();
      const auto eta = h.element(e);
      e[k] = ring.zero();
      const std::size_t col = offsets_[t] + k;
      for (const auto& c : cons) {
        if (c.a.src == v) {
          const auto x = c.target.coordinates(base.compose(cat.arrow_map(g_, c.a.id), eta));
          for (std::size_t r = 0; r < x.size(); ++r)
            sys(c.offset + r, col) = ring.add(sys(c.offset + r, col), x[r]);
        }
        if (c.a.tgt == v) {
          const auto x = c.target.coordinates(base.compose(eta, cat.arrow_map(f_, c.a.id)));
          for (std::size_t r = 0; r < x.size(); ++r)
            sys(c.offset + r, col) = ring.sub(sys(c.offset + r, col), x[r]);
        }
      }
    }
  }
  const auto gens = kernel_mod(ring, sys, wo);
  sq_ = Subquotient<Ring>(ring, ambient, gens, Mat<Ring>(n, 0));
}

template <class B>
RepMorphism<B> RepHom<B>::element(const Vec<Ring>& c) const {
  const auto x = sq_.element(c);
  Mor eta{f_, g_, {}};
  for (std::size_t t = 0; t < verts_.size(); ++t) {
    const auto& h = homs_[t];
    Vec<Ring> slice(x.begin() + offsets_[t], x.begin() + offsets_[t] + h.size());
    eta.comps.emplace(verts_[t], h.element(slice));
  }
  return eta;
}

template <class B>
Vec<typename RepHom<B>::Ring> RepHom<B>::coordinates(const Mor& eta) const {
  Vec<Ring> x;
  x.reserve(sq_.ambient_size());
  for (std::size_t t = 0; t < verts_.size(); ++t) {
    auto it = eta.comps.find(verts_[t]);
    Vec<Ring> part;
    if (it != eta.comps.end()) {
      part = homs_[t].coordinates(it->second);
    } else {
      part.assign(homs_[t].size(), base_->ring().zero());
    }
    x.insert(x.end(), part.begin(), part.end());
  }
  return sq_.coordinates(x);
}

// ---------------------------------------------------------------------------
// Objects

template <class B>
RepCategory<B>::RepCategory(Quiver q, B base, std::uint64_t budget)
    : q_(std::move(q)), base_(std::move(base)), budget_(budget),
      cones_(std::make_shared<ConeCache>()) {}

template <class B>
std::string RepCategory<B>::name() const {
  return "rep(" + q_.name() + "," + base_.name() + ")";
}

template <class B>
int RepCategory<B>::gl_dim() const {
  const bool has_arrow = q_.is_explicit() ? !q_.arrows().empty() : true;
  return base_.gl_dim() + (has_arrow ? 1 : 0);
}

template <class B>
std::vector<Arrow> RepCategory<B>::arrows_within(const std::set<Vertex>& vs) const {
  std::vector<Arrow> out;
  for (Vertex v : vs)
    for (const auto& a : q_.out_arrows(v))
      if (vs.count(a.tgt)) out.push_back(a);
  return out;
}

template <class B>
Representation<B> RepCategory<B>::make(std::map<Vertex, BObj> objs,
                                       std::map<ArrowId, BMor> arrows) const {
  Obj f;
  for (auto& [v, o] : objs) {
    q_.require_vertex(v);
    if (!base_.is_zero(o)) f.objs.emplace(v, std::move(o));
  }
  const auto supp = f.support();
  for (const auto& a : arrows_within(supp)) {
    auto it = arrows.find(a.id);
    const BObj& s = f.objs.at(a.src);
    const BObj& t = f.objs.at(a.tgt);
    if (it == arrows.end()) {
      f.arrows.emplace(a.id, base_.zero_mor(s, t));
      continue;
    }
    if (!base_.equal(it->second.src, s) || !base_.equal(it->second.tgt, t))
      throw std::invalid_argument("arrow map " + q_.arrow_name(a.id) + " has wrong endpoints");
    f.arrows.emplace(a.id, std::move(it->second));
    arrows.erase(it);
  }
  for (const auto& [id, m] : arrows) {
    const Arrow a = q_.arrow(id);
    if (supp.count(a.src) && supp.count(a.tgt)) continue;
    if (!base_.is_zero_mor(m))
      throw std::invalid_argument("nonzero map on arrow " + q_.arrow_name(id) +
                                  " with a zero endpoint");
  }
  return f;
}

template <class B>
typename B::Obj RepCategory<B>::at(const Obj& f, Vertex v) const {
  auto it = f.objs.find(v);
  return it == f.objs.end() ? base_.zero_object() : it->second;
}

template <class B>
typename B::Mor RepCategory<B>::arrow_map(const Obj& f, ArrowId id) const {
  auto it = f.arrows.find(id);
  if (it != f.arrows.end()) return it->second;
  const Arrow a = q_.arrow(id);
  return base_.zero_mor(at(f, a.src), at(f, a.tgt));
}

template <class B>
typename B::Mor RepCategory<B>::along(const Obj& f, const Path& p) const {
  BMor m = base_.identity(at(f, p.source));
  for (ArrowId id : p.arrows) {
    const Arrow a = q_.arrow(id);
    if (!f.objs.count(a.tgt)) return base_.zero_mor(at(f, p.source), at(f, p.target));
    m = base_.compose(arrow_map(f, id), m);
  }
  return m;
}

template <class B>
bool RepCategory<B>::equal(const Obj& f, const Obj& g) const {
  if (f.objs.size() != g.objs.size() || f.arrows.size() != g.arrows.size()) return false;
  for (const auto& [v, o] : f.objs) {
    auto it = g.objs.find(v);
    if (it == g.objs.end() || !base_.equal(o, it->second)) return false;
  }
  for (const auto& [id, m] : f.arrows) {
    auto it = g.arrows.find(id);
    if (it == g.arrows.end() || !base_.equal(m, it->second)) return false;
  }
  return true;
}

template <class B>
Representation<B> RepCategory<B>::direct_sum(const std::vector<Obj>& parts) const {
  std::vector<Mor> ids;
  for (const auto& p : parts) ids.push_back(identity(p));
  return direct_sum_mor(*this, ids).src;
}

template <class B>
std::string RepCategory<B>::describe(const Obj& f) const {
  if (f.objs.empty()) return "0";
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [v, o] : f.objs) {
    out << (first ? "" : ", ") << q_.vertex_name(v) << ": " << base_.describe(o);
    first = false;
  }
  out << "}";
  return out.str();
}

template <class B>
std::size_t RepCategory<B>::measure(const Obj& f) const {
  std::size_t n = 0;
  for (const auto& [v, o] : f.objs) n += base_.measure(o);
  return n;
}

// ---------------------------------------------------------------------------
// Morphisms

template <class B>
RepMorphism<B> RepCategory<B>::make_morphism(const Obj& f, const Obj& g,
                                             std::map<Vertex, BMor> comps) const {
  Mor eta{f, g, {}};
  for (const auto& [v, fv] : f.objs) {
    auto gv = g.objs.find(v);
    if (gv == g.objs.end()) continue;
    auto it = comps.find(v);
    if (it == comps.end()) {
      eta.comps.emplace(v, base_.zero_mor(fv, gv->second));
      continue;
    }
    if (!base_.equal(it->second.src, fv) || !base_.equal(it->second.tgt, gv->second))
      throw std::invalid_argument("component at " + q_.vertex_name(v) + " has wrong endpoints");
    eta.comps.emplace(v, std::move(it->second));
  }
  return eta;
}

template <class B>
typename B::Mor RepCategory<B>::component(const Mor& eta, Vertex v) const {
  auto it = eta.comps.find(v);
  if (it != eta.comps.end()) return it->second;
  return base_.zero_mor(at(eta.src, v), at(eta.tgt, v));
}

template <class B>
bool RepCategory<B>::is_natural(const Mor& eta) const {
  for (const auto& [v, fv] : eta.src.objs) {
    for (const auto& a : q_.out_arrows(v)) {
      if (!eta.tgt.objs.count(a.tgt)) continue;
      const auto lhs = base_.compose(arrow_map(eta.tgt, a.id), component(eta, a.src));
      const auto rhs = base_.compose(component(eta, a.tgt), arrow_map(eta.src, a.id));
      if (!base_.equal(lhs, rhs)) return false;
    }
  }
  return true;
}

template <class B>
RepMorphism<B> RepCategory<B>::zero_mor(const Obj& f, const Obj& g) const {
  return make_morphism(f, g, {});
}

template <class B>
RepMorphism<B> RepCategory<B>::identity(const Obj& f) const {
  Mor eta{f, f, {}};
  for (const auto& [v, o] : f.objs) eta.comps.emplace(v, base_.identity(o));
  return eta;
}

template <class B>
RepMorphism<B> RepCategory<B>::compose(const Mor& g, const Mor& f) const {
  Mor eta{f.src, g.tgt, {}};
  for (const auto& [v, o] : f.src.objs) {
    if (!g.tgt.objs.count(v)) continue;
    eta.comps.emplace(v, base_.compose(component(g, v), component(f, v)));
  }
  return eta;
}

template <class B>
RepMorphism<B> RepCategory<B>::add(const Mor& f, const Mor& g) const {
  Mor eta{f.src, f.tgt, {}};
  for (const auto& [v, m] : f.comps) eta.comps.emplace(v, base_.add(m, component(g, v)));
  return eta;
}

template <class B>
RepMorphism<B> RepCategory<B>::sub(const Mor& f, const Mor& g) const {
  Mor eta{f.src, f.tgt, {}};
  for (const auto& [v, m] : f.comps) eta.comps.emplace(v, base_.sub(m, component(g, v)));
  return eta;
}

template <class B>
RepMorphism<B> RepCategory<B>::neg(const Mor& f) const {
  Mor eta{f.src, f.tgt, {}};
  for (const auto& [v, m] : f.comps) eta.comps.emplace(v, base_.neg(m));
  return eta;
}

template <class B>
RepMorphism<B> RepCategory<B>::scale(const Elem& c, const Mor& f) const {
  Mor eta{f.src, f.tgt, {}};
  for (const auto& [v, m] : f.comps) eta.comps.emplace(v, base_.scale(c, m));
  return eta;
}

template <class B>
bool RepCategory<B>::is_zero_mor(const Mor& f) const {
  for (const auto& [v, m] : f.comps)
    if (!base_.is_zero_mor(m)) return false;
  return true;
}

template <class B>
bool RepCategory<B>::equal(const Mor& f, const Mor& g) const {
  if (!equal(f.src, g.src) || !equal(f.tgt, g.tgt)) return false;
  for (const auto& [v, m] : f.comps)
    if (!base_.equal(m, component(g, v))) return false;
  return true;
}

template <class B>
RepMorphism<B> RepCategory<B>::block(const std::vector<Obj>& tgts, const std::vector<Obj>& srcs,
                                     const std::map<BlockIndex, Mor>& blocks) const {
  std::set<Vertex> vs;
  for (const auto& t : tgts) for (const auto& [v, o] : t.objs) vs.insert(v);
  for (const auto& s : srcs) for (const auto& [v, o] : s.objs) vs.insert(v);

  auto sum_at = [&](const std::vector<Obj>& parts, Vertex v) {
    std::vector<BObj> out;
    for (const auto& p : parts) out.push_back(at(p, v));
    return out;
  };
  // Arrow maps of both sums are block diagonal.
  auto sum_rep = [&](const std::vector<Obj>& parts) {
    std::map<Vertex, BObj> objs;
    std::map<ArrowId, BMor> arrows;
    std::set<Vertex> supp;
    for (Vertex v : vs) {
      auto o = base_.direct_sum(sum_at(parts, v));
      if (!base_.is_zero(o)) {
        objs.emplace(v, std::move(o));
        supp.insert(v);
      }
    }
    for (const auto& a : arrows_within(supp)) {
      std::map<BlockIndex, BMor> bl;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!parts[k].objs.count(a.src) || !parts[k].objs.count(a.tgt)) continue;
        bl.emplace(BlockIndex{k, k}, parts[k].arrows.at(a.id));
      }
      arrows.emplace(a.id, base_.block(sum_at(parts, a.tgt), sum_at(parts, a.src), bl));
    }
    Obj f;
    f.objs = std::move(objs);
    f.arrows = std::move(arrows);
    return f;
  };
  Obj src = sum_rep(srcs), tgt = sum_rep(tgts);
  Mor eta{src, tgt, {}};
  for (const auto& [v, o] : src.objs) {
    if (!tgt.objs.count(v)) continue;
    std::map<BlockIndex, BMor> bl;
    for (const auto& [idx, m] : blocks) {
      if (!m.src.objs.count(v) || !m.tgt.objs.count(v)) continue;
      bl.emplace(idx, component(m, v));
    }
    eta.comps.emplace(v, base_.block(sum_at(tgts, v), sum_at(srcs, v), bl));
  }
  return eta;
}

// ---------------------------------------------------------------------------
// Abelian structure

template <class B>
typename RepCategory<B>::Kernel RepCategory<B>::kernel(const Mor& eta) const {
  std::map<Vertex, typename B::Kernel> ks;
  Obj k;
  for (const auto& [v, o] : eta.src.objs) {
    auto kv = base_.kernel(component(eta, v));
    if (base_.is_zero(kv.obj)) continue;
    k.objs.emplace(v, kv.obj);
    ks.emplace(v, std::move(kv));
  }
  for (const auto& a : arrows_within(k.support())) {
    const auto& ki = ks.at(a.src);
    const auto& kj = ks.at(a.tgt);
    auto m = base_.lift_through_mono(kj.emb, base_.compose(arrow_map(eta.src, a.id), ki.emb));
    if (!m) throw std::logic_error("kernel: arrow map does not restrict");
    k.arrows.emplace(a.id, std::move(*m));
  }
  Mor emb{k, eta.src, {}};
  for (auto& [v, kv] : ks) emb.comps.emplace(v, kv.emb);
  return Kernel{std::move(k), std::move(emb)};
}

template <class B>
typename RepCategory<B>::Cokernel RepCategory<B>::cokernel(const Mor& eta) const {
  std::map<Vertex, typename B::Cokernel> cs;
  Obj c;
  for (const auto& [v, o] : eta.tgt.objs) {
    auto cv = base_.cokernel(component(eta, v));
    if (base_.is_zero(cv.obj)) continue;
    c.objs.emplace(v, cv.obj);
    cs.emplace(v, std::move(cv));
  }
  for (const auto& a : arrows_within(c.support())) {
    const auto& ci = cs.at(a.src);
    const auto& cj = cs.at(a.tgt);
    auto m = base_.descend_through_epi(ci.proj, base_.compose(cj.proj, arrow_map(eta.tgt, a.id)));
    if (!m) throw std::logic_error("cokernel: arrow map does not descend");
    c.arrows.emplace(a.id, std::move(*m));
  }
  Mor proj{eta.tgt, c, {}};
  for (auto& [v, cv] : cs) proj.comps.emplace(v, cv.proj);
  return Cokernel{std::move(c), std::move(proj)};
}

template <class B>
std::optional<RepMorphism<B>> RepCategory<B>::lift_through_mono(const Mor& m, const Mor& g) const {
  Mor h{g.src, m.src, {}};
  for (const auto& [v, o] : g.src.objs) {
    const auto gv = component(g, v);
    if (!m.src.objs.count(v)) {
      if (!base_.is_zero_mor(gv)) return std::nullopt;
      continue;
    }
    auto hv = base_.lift_through_mono(component(m, v), gv);
    if (!hv) return std::nullopt;
    h.comps.emplace(v, std::move(*hv));
  }
  return h;
}

template <class B>
std::optional<RepMorphism<B>> RepCategory<B>::descend_through_epi(const Mor& p,
                                                                  const Mor& g) const {
  Mor h{p.tgt, g.tgt, {}};
  for (const auto& [v, o] : p.src.objs) {
    if (!g.tgt.objs.count(v)) continue;
    const auto gv = component(g, v);
    if (!p.tgt.objs.count(v)) {
      if (!base_.is_zero_mor(gv)) return std::nullopt;
      continue;
    }
    auto hv = base_.descend_through_epi(component(p, v), gv);
    if (!hv) return std::nullopt;
    h.comps.emplace(v, std::move(*hv));
  }
  // Components on Supp(C) ∩ Supp(Y) outside Supp(B) are forced to be zero.
  for (const auto& [v, o] : p.tgt.objs)
    if (g.tgt.objs.count(v) && !h.comps.count(v))
      h.comps.emplace(v, base_.zero_mor(o, g.tgt.objs.at(v)));
  return h;
}

template <class B>
std::vector<Vertex> RepCategory<B>::inexact_vertices(const Mor& f, const Mor& g) const {
  std::set<Vertex> vs;
  for (const auto& [v, o] : f.src.objs) vs.insert(v);
  for (const auto& [v, o] : f.tgt.objs) vs.insert(v);
  for (const auto& [v, o] : g.tgt.objs) vs.insert(v);
  std::vector<Vertex> bad;
  for (Vertex v : vs)
    if (!is_exact_pair(base_, component(f, v), component(g, v))) bad.push_back(v);
  return bad;
}

// ---------------------------------------------------------------------------
// Free, cofree, stalk

template <class B>
Verdict<Cone> RepCategory<B>::certified_right_cone(Vertex i) const {
  {
    std::lock_guard<std::mutex> lock(cones_->mu);
    auto it = cones_->right.find(i);
    if (it != cones_->right.end()) return it->second;
  }
  auto c = right_cone(q_, i, budget_);
  if (c.value.infinite)
    throw InfiniteCone("right cone of " + q_.vertex_name(i) + " is infinite");
  if (!c.certified())
    throw InfiniteCone("right cone of " + q_.vertex_name(i) + " not certified finite within budget");
  std::lock_guard<std::mutex> lock(cones_->mu);
  cones_->right.emplace(i, c);
  return c;
}

template <class B>
Verdict<Cone> RepCategory<B>::certified_left_cone(Vertex i) const {
  {
    std::lock_guard<std::mutex> lock(cones_->mu);
    auto it = cones_->left.find(i);
    if (it != cones_->left.end()) return it->second;
  }
  auto c = left_cone(q_, i, budget_);
  if (c.value.infinite)
    throw InfiniteCone("left cone of " + q_.vertex_name(i) + " is infinite");
  if (!c.certified())
    throw InfiniteCone("left cone of " + q_.vertex_name(i) + " not certified finite within budget");
  std::lock_guard<std::mutex> lock(cones_->mu);
  cones_->left.emplace(i, c);
  return c;
}

namespace {

using PathIndex = std::map<std::vector<ArrowId>, std::size_t>;

PathIndex index_paths(const std::vector<Path>& ps) {
  PathIndex idx;
  for (std::size_t k = 0; k < ps.size(); ++k) idx.emplace(ps[k].arrows, k);
  return idx;
}

}  // namespace

template <class B>
Representation<B> RepCategory<B>::free_rep(Vertex i, const BObj& c) const {
  if (base_.is_zero(c)) return Obj{};
  const auto cone = certified_right_cone(i).value;
  std::map<Vertex, BObj> objs;
  std::map<Vertex, PathIndex> idx;
  for (const auto& [j, ps] : cone.paths) {
    if (ps.empty()) continue;
    objs.emplace(j, base_.direct_sum(std::vector<BObj>(ps.size(), c)));
    idx.emplace(j, index_paths(ps));
  }
  std::map<ArrowId, BMor> arrows;
  const BMor id = base_.identity(c);
  for (const auto& [j, ps] : cone.paths) {
    if (ps.empty()) continue;
    for (const auto& a : q_.out_arrows(j)) {
      const auto& tgt_paths = cone.at(a.tgt);
      std::map<BlockIndex, BMor> bl;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        auto key = ps[k].arrows;
        key.push_back(a.id);
        bl.emplace(BlockIndex{idx.at(a.tgt).at(key), k}, id);
      }
      arrows.emplace(a.id, base_.block(std::vector<BObj>(tgt_paths.size(), c),
                                       std::vector<BObj>(ps.size(), c), bl));
    }
  }
  return make(std::move(objs), std::move(arrows));
}

template <class B>
Representation<B> RepCategory<B>::cofree_rep(Vertex i, const BObj& c) const {
  if (base_.is_zero(c)) return Obj{};
  const auto cone = certified_left_cone(i).value;
  std::map<Vertex, BObj> objs;
  std::map<Vertex, PathIndex> idx;
  for (const auto& [j, ps] : cone.paths) {
    if (ps.empty()) continue;
    objs.emplace(j, base_.direct_sum(std::vector<BObj>(ps.size(), c)));
    idx.emplace(j, index_paths(ps));
  }
  std::map<ArrowId, BMor> arrows;
  const BMor id = base_.identity(c);
  // π_ρ ∘ g_α = π_{ρα} for α: j -> l and ρ ∈ Q(l, i).
  for (const auto& [l, ps] : cone.paths) {
    if (ps.empty()) continue;
    for (const auto& a : q_.in_arrows(l)) {
      const auto& src_paths = cone.at(a.src);
      std::map<BlockIndex, BMor> bl;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        std::vector<ArrowId> key{a.id};
        key.insert(key.end(), ps[k].arrows.begin(), ps[k].arrows.end());
        bl.emplace(BlockIndex{k, idx.at(a.src).at(key)}, id);
      }
      arrows.emplace(a.id, base_.block(std::vector<BObj>(ps.size(), c),
                                       std::vector<BObj>(src_paths.size(), c), bl));
    }
  }
  return make(std::move(objs), std::move(arrows));
}

template <class B>
Representation<B> RepCategory<B>::stalk(Vertex i, const BObj& c) const {
  std::map<Vertex, BObj> objs;
  objs.emplace(i, c);
  return make(std::move(objs), {});
}

template <class B>
RepMorphism<B> RepCategory<B>::free_adjoint(Vertex i, const BMor& u, const Obj& f) const {
  const Obj p = free_rep(i, u.src);
  if (p.objs.empty()) return zero_mor(p, f);
  const auto cone = certified_right_cone(i).value;
  std::map<Vertex, BMor> comps;
  for (const auto& [k, fk] : f.objs) {
    if (!p.objs.count(k)) continue;
    const auto& ps = cone.at(k);
    std::map<BlockIndex, BMor> bl;
    for (std::size_t t = 0; t < ps.size(); ++t)
      bl.emplace(BlockIndex{0, t}, base_.compose(along(f, ps[t]), u));
    comps.emplace(k, base_.block({fk}, std::vector<BObj>(ps.size(), u.src), bl));
  }
  return make_morphism(p, f, std::move(comps));
}

template <class B>
RepMorphism<B> RepCategory<B>::cofree_adjoint(Vertex i, const BMor& u, const Obj& f) const {
  const Obj g = cofree_rep(i, u.tgt);
  if (g.objs.empty()) return zero_mor(f, g);
  const auto cone = certified_left_cone(i).value;
  std::map<Vertex, BMor> comps;
  for (const auto& [k, fk] : f.objs) {
    if (!g.objs.count(k)) continue;
    const auto& ps = cone.at(k);
    std::map<BlockIndex, BMor> bl;
    for (std::size_t t = 0; t < ps.size(); ++t)
      bl.emplace(BlockIndex{t, 0}, base_.compose(u, along(f, ps[t])));
    comps.emplace(k, base_.block(std::vector<BObj>(ps.size(), u.tgt), {fk}, bl));
  }
  return make_morphism(f, g, std::move(comps));
}

template <class B>
RepMorphism<B> RepCategory<B>::projective_cover(const Obj& f) const {
  std::vector<Obj> srcs;
  std::map<BlockIndex, Mor> bl;
  for (const auto& [i, fi] : f.objs) {
    auto m = free_adjoint(i, base_.projective_cover(fi), f);
    bl.emplace(BlockIndex{0, srcs.size()}, m);
    srcs.push_back(m.src);
  }
  return block({f}, srcs, bl);
}

template <class B>
bool RepCategory<B>::is_projective(const Obj& f) const {
  if (f.objs.empty()) return true;
  return split_section(*this, projective_cover(f)).has_value();
}

template <class B>
std::optional<RepMorphism<B>> RepCategory<B>::injective_envelope(const Obj& f) const {
  std::vector<Obj> tgts;
  std::map<BlockIndex, Mor> bl;
  for (const auto& [i, fi] : f.objs) {
    auto e = base_.injective_envelope(fi);
    if (!e) return std::nullopt;
    auto m = cofree_adjoint(i, *e, f);
    bl.emplace(BlockIndex{tgts.size(), 0}, m);
    tgts.push_back(m.tgt);
  }
  return block(tgts, {f}, bl);
}

template <class B>
bool RepCategory<B>::is_injective(const Obj& f) const {
  if (f.objs.empty()) return true;
  auto e = injective_envelope(f);
  if (!e) return false;
  return split_retraction(*this, *e).has_value();
}

template <class B>
Representation<B> RepCategory<B>::random_object(Rng& rng, std::size_t bound) const {
  const auto& vs = q_.vertices();
  return random_object_on(rng, std::set<Vertex>(vs.begin(), vs.end()), bound);
}

template <class B>
Representation<B> RepCategory<B>::random_object_on(Rng& rng, const std::set<Vertex>& vs,
                                                   std::size_t bound) const {
  std::map<Vertex, BObj> objs;
  for (Vertex v : vs) objs.emplace(v, base_.random_object(rng, bound));
  std::map<ArrowId, BMor> arrows;
  for (const auto& a : arrows_within(vs))
    arrows.emplace(a.id, base_.random_morphism(objs.at(a.src), objs.at(a.tgt), rng));
  return make(std::move(objs), std::move(arrows));
}

template <class B>
RepMorphism<B> RepCategory<B>::random_morphism(const Obj& f, const Obj& g, Rng& rng) const {
  const Hom h = hom(f, g);
  Vec<Ring> c(h.size());
  for (std::size_t t = 0; t < c.size(); ++t)
    c[t] = ring().reduce(random_scalar(ring(), rng), h.orders()[t]);
  return h.element(c);
}

template <class B>
Representation<B> RepCategory<B>::restrict_to(const RepCategory& sub, const Obj& f) const {
  std::map<Vertex, BObj> objs;
  for (const auto& [v, o] : f.objs)
    if (sub.quiver().has_vertex(v)) objs.emplace(v, o);
  std::map<ArrowId, BMor> arrows;
  std::set<Vertex> keep;
  for (const auto& [v, o] : objs) keep.insert(v);
  for (const auto& a : sub.arrows_within(keep)) arrows.emplace(a.id, f.arrows.at(a.id));
  return sub.make(std::move(objs), std::move(arrows));
}

template <class B>
Representation<B> RepCategory<B>::extend_from(const RepCategory& sub, const Obj& f) const {
  (void)sub;
  return make(f.objs, f.arrows);
}

std::string to_string(SupportKind k) {
  switch (k) {
    case SupportKind::F:
      return "f";
    case SupportKind::FB:
      return "fb";
    case SupportKind::FT:
      return "ft";
    case SupportKind::FBT:
      break;
  }
  return "fbt";
}

SupportKind parse_support_kind(const std::string& text) {
  for (auto k : {SupportKind::F, SupportKind::FB, SupportKind::FT, SupportKind::FBT})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown support class '" + text + "'");
}

template class RepHom<FpMod>;
template class RepHom<QMod>;
template class RepHom<ZMod>;
template class RepHom<FpRep>;
template class RepCategory<FpMod>;
template class RepCategory<QMod>;
template class RepCategory<ZMod>;
template class RepCategory<FpRep>;

}  // namespace qrep
