#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrep/basecat.hpp"
#include "qrep/fgmodule.hpp"
#include "qrep/linalg.hpp"

// Algorithms that only use the uniform category surface (see basecat.hpp).

namespace qrep {

// A constructed object failed one of its own exactness or splitting checks.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class C>
bool is_mono(const C& cat, const typename C::Mor& f) {
  return cat.is_zero(cat.kernel(f).obj);
}

template <class C>
bool is_epi(const C& cat, const typename C::Mor& f) {
  return cat.is_zero(cat.cokernel(f).obj);
}

template <class C>
bool is_iso(const C& cat, const typename C::Mor& f) {
  return is_mono(cat, f) && is_epi(cat, f);
}

// Exactness of A -f-> B -g-> C at B: g∘f = 0 and ker g ⊆ im f.
template <class C>
bool is_exact_pair(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
  if (!cat.is_zero_mor(cat.compose(g, f))) return false;
  const auto k = cat.kernel(g);
  const auto q = cat.cokernel(f);
  return cat.is_zero_mor(cat.compose(q.proj, k.emb));
}

// 0 -> A -f-> B -g-> C -> 0 exact.
template <class C>
bool is_short_exact(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
  return is_mono(cat, f) && is_epi(cat, g) && is_exact_pair(cat, f, g);
}

// Matrix of the linear map hom_src -> hom_tgt induced by fn, in hom coordinates.
template <class C, class HomA, class HomB>
Mat<typename C::Ring> induced_matrix(
    const C& cat, const HomA& src, const HomB& tgt,
    const std::function<typename C::Mor(const typename C::Mor&)>& fn) {
  const auto& ring = cat.ring();
  Mat<typename C::Ring> m(tgt.size(), src.size(), ring.zero());
  Vec<typename C::Ring> e(src.size(), ring.zero());
  for (std::size_t t = 0; t < src.size(); ++t) {
    e[t] = ring.one();
    const auto col = tgt.coordinates(fn(src.element(e)));
    for (std::size_t r = 0; r < tgt.size(); ++r) m(r, t) = col[r];
    e[t] = ring.zero();
  }
  return m;
}

// h : X -> Z with p ∘ h = g, for arbitrary p : Z -> Y and g : X -> Y.
template <class C>
std::optional<typename C::Mor> factor_through_right(const C& cat, const typename C::Mor& p,
                                                    const typename C::Mor& g) {
  const auto src = cat.hom(g.src, p.src);
  const auto tgt = cat.hom(g.src, p.tgt);
  const auto m = induced_matrix<C>(cat, src, tgt,
                                   [&](const typename C::Mor& h) { return cat.compose(p, h); });
  auto x = solve_mod(cat.ring(), m, tgt.coordinates(g), tgt.orders());
  if (!x) return std::nullopt;
  return src.element(reduce_vec(cat.ring(), *x, src.orders()));
}

// h : Z -> Y with h ∘ m = g, for arbitrary m : X -> Z and g : X -> Y.
template <class C>
std::optional<typename C::Mor> factor_through_left(const C& cat, const typename C::Mor& m,
                                                   const typename C::Mor& g) {
  const auto src = cat.hom(m.tgt, g.tgt);
  const auto tgt = cat.hom(m.src, g.tgt);
  const auto mat = induced_matrix<C>(cat, src, tgt,
                                     [&](const typename C::Mor& h) { return cat.compose(h, m); });
  auto x = solve_mod(cat.ring(), mat, tgt.coordinates(g), tgt.orders());
  if (!x) return std::nullopt;
  return src.element(reduce_vec(cat.ring(), *x, src.orders()));
}

// Section s of p (p ∘ s = id), if p is a split epimorphism.
template <class C>
std::optional<typename C::Mor> split_section(const C& cat, const typename C::Mor& p) {
  return factor_through_right(cat, p, cat.identity(p.tgt));
}

// Retraction r of m (r ∘ m = id), if m is a split monomorphism.
template <class C>
std::optional<typename C::Mor> split_retraction(const C& cat, const typename C::Mor& m) {
  return factor_through_left(cat, m, cat.identity(m.src));
}

// Image factorization f = emb ∘ coim with emb mono.
template <class C>
struct Image {
  typename C::Obj obj;
  typename C::Mor emb;
  typename C::Mor coim;
};

template <class C>
Image<C> image(const C& cat, const typename C::Mor& f) {
  const auto q = cat.cokernel(f);
  const auto k = cat.kernel(q.proj);
  auto coim = cat.lift_through_mono(k.emb, f);
  if (!coim) throw std::logic_error("image: f does not factor through its image");
  return Image<C>{k.obj, k.emb, *coim};
}

// Injection and projection of summand k of ⊕ parts.
template <class C>
typename C::Mor injection(const C& cat, const std::vector<typename C::Obj>& parts, std::size_t k) {
  std::map<BlockIndex, typename C::Mor> blocks;
  blocks.emplace(BlockIndex{k, 0}, cat.identity(parts[k]));
  return cat.block(parts, {parts[k]}, blocks);
}

template <class C>
typename C::Mor projection(const C& cat, const std::vector<typename C::Obj>& parts,
                           std::size_t k) {
  std::map<BlockIndex, typename C::Mor> blocks;
  blocks.emplace(BlockIndex{0, k}, cat.identity(parts[k]));
  return cat.block({parts[k]}, parts, blocks);
}

// Diagonal morphism ⊕ f_k : ⊕ src_k -> ⊕ tgt_k.
template <class C>
typename C::Mor direct_sum_mor(const C& cat, const std::vector<typename C::Mor>& fs) {
  std::vector<typename C::Obj> srcs, tgts;
  std::map<BlockIndex, typename C::Mor> blocks;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    srcs.push_back(fs[k].src);
    tgts.push_back(fs[k].tgt);
    blocks.emplace(BlockIndex{k, k}, fs[k]);
  }
  return cat.block(tgts, srcs, blocks);
}

// Minimal generator count of a diagonal module (dimension over a field).
template <class R>
std::size_t generator_count(const Vec<R>& orders) {
  return orders.size();
}

}  // namespace qrep
