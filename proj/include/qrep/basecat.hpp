#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qrep/fgmodule.hpp"
#include "qrep/linalg.hpp"
#include "qrep/ring.hpp"

// Exact base categories. Every category type C used by the representation
// layer exposes the same surface:
//
//   C::Ring, C::Elem, C::Obj, C::Mor (with .src/.tgt), C::Hom, C::Kernel, C::Cokernel
//   zero_object, is_zero, direct_sum, block, identity, zero_mor, compose, add,
//   sub, neg, scale, is_zero_mor, equal, kernel, cokernel, lift_through_mono,
//   descend_through_epi, hom, projective_cover, is_projective, is_injective,
//   gl_dim, describe, random_object, random_morphism.
//
// Hom spaces are finitely presented modules over the scalar ring with explicit
// element/coordinate maps, so homological computations reduce to Subquotient.

namespace qrep {

using Rng = std::mt19937_64;

// Block index (target summand, source summand).
using BlockIndex = std::pair<std::size_t, std::size_t>;

// f.g. module ⊕ R/o_k in diagonal form; o_k = 0 is a free summand and no o_k
// is a unit. Over a field every o_k is 0 and the object is R^n.
template <class R>
struct ModObj {
  Vec<R> orders;

  std::size_t size() const { return orders.size(); }
  friend bool operator==(const ModObj&, const ModObj&) = default;
};

// Matrix with rows indexed by target generators and columns by source
// generators; entries are reduced modulo the target row orders.
template <class R>
struct ModMor {
  ModObj<R> src, tgt;
  Mat<R> m;
};

template <class R>
class ModuleHom {
 public:
  using Elem = typename R::Elem;

  ModuleHom() = default;
  ModuleHom(const R& ring, ModObj<R> a, ModObj<R> b);

  const Vec<R>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  ModMor<R> element(const Vec<R>& c) const;
  Vec<R> coordinates(const ModMor<R>& f) const;

 private:
  std::optional<R> ring_;
  ModObj<R> a_, b_;
  struct Entry {
    std::size_t row, col;
    Elem gen;
  };
  std::vector<Entry> entries_;
  Vec<R> orders_;
};

template <class R>
class ModuleCategory {
 public:
  using Ring = R;
  using Elem = typename R::Elem;
  using Obj = ModObj<R>;
  using Mor = ModMor<R>;
  using Hom = ModuleHom<R>;
  struct Kernel {
    Obj obj;
    Mor emb;
  };
  struct Cokernel {
    Obj obj;
    Mor proj;
  };

  explicit ModuleCategory(R ring) : ring_(std::move(ring)) {}

  const R& ring() const { return ring_; }
  std::string name() const;
  int gl_dim() const { return R::is_field ? 0 : 1; }

  // Objects.
  Obj zero_object() const { return Obj{}; }
  Obj free(std::size_t n) const { return Obj{Vec<R>(n, ring_.zero())}; }
  // Builds ⊕ R/o_k, dropping units and normalizing signs.
  Obj make(const Vec<R>& orders) const;
  // Over Z: free rank plus torsion list; normalized to invariant factors.
  Obj make_fgab(std::size_t rank, const std::vector<long long>& torsion) const;
  bool is_zero(const Obj& a) const { return a.orders.empty(); }
  bool equal(const Obj& a, const Obj& b) const { return a == b; }
  Obj direct_sum(const std::vector<Obj>& parts) const;
  // Invariant-factor form d_1 | d_2 | ... followed by the free rank.
  Vec<R> invariant_factors(const Obj& a) const;
  std::size_t free_rank(const Obj& a) const;

  // Morphisms.
  Mor zero_mor(const Obj& a, const Obj& b) const;
  Mor identity(const Obj& a) const;
  Mor from_matrix(const Obj& a, const Obj& b, Mat<R> m) const;
  Mor compose(const Mor& g, const Mor& f) const;  // g ∘ f
  Mor add(const Mor& f, const Mor& g) const;
  Mor sub(const Mor& f, const Mor& g) const;
  Mor neg(const Mor& f) const;
  Mor scale(const Elem& c, const Mor& f) const;
  bool is_zero_mor(const Mor& f) const;
  bool equal(const Mor& f, const Mor& g) const;
  // Morphism ⊕ srcs -> ⊕ tgts assembled from blocks (missing blocks are zero).
  Mor block(const std::vector<Obj>& tgts, const std::vector<Obj>& srcs,
            const std::map<BlockIndex, Mor>& blocks) const;
  // Whether the matrix respects the torsion of source and target.
  bool is_well_defined(const Mor& f) const;

  // Abelian structure.
  Kernel kernel(const Mor& f) const;
  Cokernel cokernel(const Mor& f) const;
  // h with m ∘ h = g for a monomorphism m, if g factors.
  std::optional<Mor> lift_through_mono(const Mor& m, const Mor& g) const;
  // h with h ∘ p = g for an epimorphism p, if g factors.
  std::optional<Mor> descend_through_epi(const Mor& p, const Mor& g) const;

  Hom hom(const Obj& a, const Obj& b) const { return Hom(ring_, a, b); }

  // Epimorphism from a projective object.
  Mor projective_cover(const Obj& a) const;
  bool is_projective(const Obj& a) const;
  bool is_injective(const Obj& a) const;
  // Monomorphism into an injective object; over Z only 0 has one.
  std::optional<Mor> injective_envelope(const Obj& a) const;

  std::string describe(const Obj& a) const;
  std::size_t measure(const Obj& a) const { return a.size(); }

  Obj random_object(Rng& rng, std::size_t bound) const;
  Mor random_morphism(const Obj& a, const Obj& b, Rng& rng) const;

 private:
  R ring_;
};

using FpMod = ModuleCategory<PrimeField>;
using QMod = ModuleCategory<RationalField>;
using ZMod = ModuleCategory<IntegerRing>;

extern template class ModuleHom<PrimeField>;
extern template class ModuleHom<RationalField>;
extern template class ModuleHom<IntegerRing>;
extern template class ModuleCategory<PrimeField>;
extern template class ModuleCategory<RationalField>;
extern template class ModuleCategory<IntegerRing>;

// Random ring element with small representatives (used by samplers).
template <class R>
typename R::Elem random_scalar(const R& ring, Rng& rng);

}  // namespace qrep
