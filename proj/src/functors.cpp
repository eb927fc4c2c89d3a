#include "qrep/functors.hpp"

namespace qrep {

namespace {

std::size_t label_index(const std::vector<Path>& labels, const std::vector<ArrowId>& arrows) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k].arrows == arrows) return k;
  throw std::out_of_range("path is not a coordinate label");
}

}  // namespace

template <class B>
FreeRep<B> Functors<B>::free_rep(Vertex i, const BObj& c) const {
  FreeRep<B> out{i, c, cat_.free_rep(i, c), {}};
  const auto cone = cat_.certified_right_cone(i).value;
  for (const auto& [j, ps] : cone.paths)
    if (!ps.empty()) out.labels.emplace(j, ps);
  return out;
}

template <class B>
FreeRep<B> Functors<B>::cofree_rep(Vertex i, const BObj& c) const {
  FreeRep<B> out{i, c, cat_.cofree_rep(i, c), {}};
  const auto cone = cat_.certified_left_cone(i).value;
  for (const auto& [j, ps] : cone.paths)
    if (!ps.empty()) out.labels.emplace(j, ps);
  return out;
}

template <class B>
typename B::Mor Functors<B>::mu(const FreeRep<B>& fr, const Path& rho) const {
  const auto& labels = fr.labels.at(rho.target);
  return injection(cat_.base(), std::vector<BObj>(labels.size(), fr.object),
                   label_index(labels, rho.arrows));
}

template <class B>
typename B::Mor Functors<B>::pi(const FreeRep<B>& gr, const Path& rho) const {
  const auto& labels = gr.labels.at(rho.source);
  return projection(cat_.base(), std::vector<BObj>(labels.size(), gr.object),
                    label_index(labels, rho.arrows));
}

template <class B>
typename Functors<B>::Mor Functors<B>::counit(Vertex i, const Obj& f) const {
  return cat_.free_adjoint(i, cat_.base().identity(cat_.at(f, i)), f);
}

template <class B>
typename Functors<B>::Mor Functors<B>::unit(Vertex i, const Obj& f) const {
  return cat_.cofree_adjoint(i, cat_.base().identity(cat_.at(f, i)), f);
}

template <class B>
typename B::Mor Functors<B>::transport_to_base(Vertex i, const BObj& c, const Mor& t) const {
  const auto fr = free_rep(i, c);
  if (cat_.base().is_zero(c)) return cat_.base().zero_mor(c, cat_.at(t.tgt, i));
  return cat_.base().compose(cat_.component(t, i), mu(fr, Path::trivial(i)));
}

template <class B>
typename Functors<B>::Mor Functors<B>::transport_from_base(Vertex i, const BMor& beta,
                                                           const Obj& f) const {
  return cat_.free_adjoint(i, beta, f);
}

template <class B>
typename B::Mor Functors<B>::cotransport_to_base(Vertex i, const BObj& c, const Mor& t) const {
  const auto gr = cofree_rep(i, c);
  if (cat_.base().is_zero(c)) return cat_.base().zero_mor(cat_.at(t.src, i), c);
  return cat_.base().compose(pi(gr, Path::trivial(i)), cat_.component(t, i));
}

template <class B>
typename Functors<B>::Mor Functors<B>::cotransport_from_base(Vertex i, const BMor& beta,
                                                             const Obj& f) const {
  return cat_.cofree_adjoint(i, beta, f);
}

template <class B>
typename Functors<B>::Mor Functors<B>::path_transformation(const Path& rho, const BObj& c) const {
  const B& base = cat_.base();
  const auto from = free_rep(rho.target, c);
  const auto to = free_rep(rho.source, c);
  std::map<Vertex, BMor> comps;
  const BMor id = base.identity(c);
  for (const auto& [k, ls] : from.labels) {
    const auto& tl = to.labels.at(k);
    std::map<BlockIndex, BMor> bl;
    for (std::size_t t = 0; t < ls.size(); ++t) {
      auto key = rho.arrows;
      key.insert(key.end(), ls[t].arrows.begin(), ls[t].arrows.end());
      bl.emplace(BlockIndex{label_index(tl, key), t}, id);
    }
    comps.emplace(k, base.block(std::vector<BObj>(tl.size(), c), std::vector<BObj>(ls.size(), c), bl));
  }
  return cat_.make_morphism(from.rep, to.rep, std::move(comps));
}

template <class B>
typename Functors<B>::Mor Functors<B>::cofree_path_transformation(const Path& rho,
                                                                  const BObj& c) const {
  const B& base = cat_.base();
  const auto from = cofree_rep(rho.target, c);
  const auto to = cofree_rep(rho.source, c);
  std::map<Vertex, BMor> comps;
  const BMor id = base.identity(c);
  for (const auto& [k, ls] : to.labels) {
    const auto& fl = from.labels.at(k);
    std::map<BlockIndex, BMor> bl;
    for (std::size_t t = 0; t < ls.size(); ++t) {
      auto key = ls[t].arrows;
      key.insert(key.end(), rho.arrows.begin(), rho.arrows.end());
      bl.emplace(BlockIndex{t, label_index(fl, key)}, id);
    }
    comps.emplace(k, base.block(std::vector<BObj>(ls.size(), c), std::vector<BObj>(fl.size(), c), bl));
  }
  return cat_.make_morphism(from.rep, to.rep, std::move(comps));
}

template <class B>
typename Functors<B>::Mor Functors<B>::free_on_morphism(Vertex i, const BMor& u) const {
  const auto from = free_rep(i, u.src);
  const auto to = free_rep(i, u.tgt);
  std::map<Vertex, BMor> comps;
  const auto cone = cat_.certified_right_cone(i).value;
  for (const auto& [k, ps] : cone.paths) {
    if (ps.empty()) continue;
    std::vector<BMor> diag(ps.size(), u);
    comps.emplace(k, direct_sum_mor(cat_.base(), diag));
  }
  return cat_.make_morphism(from.rep, to.rep, std::move(comps));
}

template <class B>
typename Functors<B>::Mor Functors<B>::cofree_on_morphism(Vertex i, const BMor& u) const {
  const auto from = cofree_rep(i, u.src);
  const auto to = cofree_rep(i, u.tgt);
  std::map<Vertex, BMor> comps;
  const auto cone = cat_.certified_left_cone(i).value;
  for (const auto& [k, ps] : cone.paths) {
    if (ps.empty()) continue;
    std::vector<BMor> diag(ps.size(), u);
    comps.emplace(k, direct_sum_mor(cat_.base(), diag));
  }
  return cat_.make_morphism(from.rep, to.rep, std::move(comps));
}

template <class B>
MeshMap<B> Functors<B>::phi_map(Vertex i, const Obj& f) const {
  MeshMap<B> out;
  std::vector<BObj> srcs;
  std::map<BlockIndex, BMor> bl;
  for (const auto& a : cat_.quiver().in_arrows(i)) {
    if (!f.objs.count(a.src)) continue;
    bl.emplace(BlockIndex{0, srcs.size()}, cat_.arrow_map(f, a.id));
    srcs.push_back(f.objs.at(a.src));
    out.arrows.push_back(a);
  }
  out.map = cat_.base().block({cat_.at(f, i)}, srcs, bl);
  return out;
}

template <class B>
MeshMap<B> Functors<B>::psi_map(Vertex i, const Obj& f) const {
  MeshMap<B> out;
  std::vector<BObj> tgts;
  std::map<BlockIndex, BMor> bl;
  for (const auto& a : cat_.quiver().out_arrows(i)) {
    if (!f.objs.count(a.tgt)) continue;
    bl.emplace(BlockIndex{tgts.size(), 0}, cat_.arrow_map(f, a.id));
    tgts.push_back(f.objs.at(a.tgt));
    out.arrows.push_back(a);
  }
  out.map = cat_.base().block(tgts, {cat_.at(f, i)}, bl);
  return out;
}

template <class B>
typename B::Obj Functors<B>::c_of(Vertex i, const Obj& f) const {
  return cat_.base().cokernel(phi_map(i, f).map).obj;
}

template <class B>
typename B::Obj Functors<B>::k_of(Vertex i, const Obj& f) const {
  return cat_.base().kernel(psi_map(i, f).map).obj;
}

template <class B>
typename B::Kernel Functors<B>::right_adjoint_of_g(Vertex z, const Obj& f) const {
  const B& base = cat_.base();
  const auto cone = cat_.certified_left_cone(z).value;
  // Domain summands (i, γ) with γ ∈ Q(i, z).
  std::vector<BObj> srcs;
  std::map<std::pair<Vertex, std::vector<ArrowId>>, std::size_t> dom;
  for (const auto& [i, ps] : cone.paths) {
    if (!f.objs.count(i)) continue;
    for (const auto& g : ps) {
      dom.emplace(std::make_pair(i, g.arrows), srcs.size());
      srcs.push_back(f.objs.at(i));
    }
  }
  // One constraint per (j, γ) in the cone and arrow α: j -> l into Supp F,
  // including j outside Supp F where only the −x_{l,ρ} term survives.
  std::vector<BObj> tgts;
  std::map<BlockIndex, BMor> bl;
  for (const auto& [j, ps] : cone.paths) {
    for (const auto& gamma : ps) {
      for (const auto& a : cat_.quiver().out_arrows(j)) {
        if (!f.objs.count(a.tgt)) continue;
        const bool starts = !gamma.arrows.empty() && gamma.arrows.front() == a.id;
        if (!f.objs.count(j) && !starts) continue;
        const std::size_t row = tgts.size();
        tgts.push_back(f.objs.at(a.tgt));
        if (f.objs.count(j))
          bl.emplace(BlockIndex{row, dom.at({j, gamma.arrows})}, cat_.arrow_map(f, a.id));
        if (starts) {
          std::vector<ArrowId> rho(gamma.arrows.begin() + 1, gamma.arrows.end());
          bl.emplace(BlockIndex{row, dom.at({a.tgt, rho})},
                     base.neg(base.identity(f.objs.at(a.tgt))));
        }
      }
    }
  }
  return base.kernel(base.block(tgts, srcs, bl));
}

template <class B>
typename B::Cokernel Functors<B>::left_adjoint_of_f(Vertex z, const Obj& f) const {
  const B& base = cat_.base();
  const auto cone = cat_.certified_right_cone(z).value;
  // Codomain summands (j, λ') with λ' ∈ Q(z, j).
  std::vector<BObj> tgts;
  std::map<std::pair<Vertex, std::vector<ArrowId>>, std::size_t> cod;
  for (const auto& [j, ps] : cone.paths) {
    if (!f.objs.count(j)) continue;
    for (const auto& l : ps) {
      cod.emplace(std::make_pair(j, l.arrows), tgts.size());
      tgts.push_back(f.objs.at(j));
    }
  }
  // One generator per (j, λ') in the cone and arrow α: i -> j out of Supp F,
  // including j outside Supp F where only the −x_{i,λ} term survives.
  std::vector<BObj> srcs;
  std::map<BlockIndex, BMor> bl;
  for (const auto& [j, ps] : cone.paths) {
    for (const auto& lam : ps) {
      for (const auto& a : cat_.quiver().in_arrows(j)) {
        if (!f.objs.count(a.src)) continue;
        const bool ends = !lam.arrows.empty() && lam.arrows.back() == a.id;
        if (!f.objs.count(j) && !ends) continue;
        const std::size_t col = srcs.size();
        srcs.push_back(f.objs.at(a.src));
        if (f.objs.count(j))
          bl.emplace(BlockIndex{cod.at({j, lam.arrows}), col}, cat_.arrow_map(f, a.id));
        if (ends) {
          std::vector<ArrowId> prefix(lam.arrows.begin(), lam.arrows.end() - 1);
          bl.emplace(BlockIndex{cod.at({a.src, prefix}), col},
                     base.neg(base.identity(f.objs.at(a.src))));
        }
      }
    }
  }
  return base.cokernel(base.block(tgts, srcs, bl));
}

template class Functors<FpMod>;
template class Functors<QMod>;
template class Functors<ZMod>;
template class Functors<FpRep>;

}  // namespace qrep
