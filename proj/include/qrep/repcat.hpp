#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/basecat.hpp"
#include "qrep/category.hpp"
#include "qrep/quiver.hpp"
#include "qrep/quiver_analysis.hpp"

// Rep(Q, C) for a base category C. Representations have finite support and
// are stored sparsely: objects on the support, arrow maps for arrows whose
// endpoints both lie in the support (every other arrow map is zero because
// one of its endpoints is the zero object).

namespace qrep {

// A cone needed by f_i or g_i is infinite or could not be certified finite.
class InfiniteCone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class B>
struct Representation {
  std::map<Vertex, typename B::Obj> objs;
  std::map<ArrowId, typename B::Mor> arrows;

  std::set<Vertex> support() const {
    std::set<Vertex> s;
    for (const auto& [v, o] : objs) s.insert(v);
    return s;
  }
};

template <class B>
struct RepMorphism {
  Representation<B> src, tgt;
  std::map<Vertex, typename B::Mor> comps;  // on Supp(src) ∩ Supp(tgt)
};

template <class B>
class RepCategory;

// Hom_Rep(F, G) as the solution module of the naturality system.
//
// Components live on Supp(F) ∩ Supp(G); outside that set one of F_v, G_v is 0
// and so is η_v. For an arrow α: i -> j the constraint G_α η_i = η_j F_α is
// an equation in Hom(F_i, G_j), vacuous unless F_i ≠ 0 and G_j ≠ 0. So only
// arrows leaving Supp(F) and entering Supp(G) contribute, and the system is
// finite for finite supports.
template <class B>
class RepHom {
 public:
  using Ring = typename B::Ring;
  using Mor = RepMorphism<B>;

  RepHom() = default;
  RepHom(const RepCategory<B>& cat, const Representation<B>& f, const Representation<B>& g);

  const Vec<Ring>& orders() const { return sq_.orders(); }
  std::size_t size() const { return sq_.size(); }
  Mor element(const Vec<Ring>& c) const;
  Vec<Ring> coordinates(const Mor& eta) const;

  // Unknown layout: base hom per vertex and its offset in the ambient vector.
  const std::vector<Vertex>& vertices() const { return verts_; }

 private:
  std::optional<B> base_;
  Representation<B> f_, g_;
  std::vector<Vertex> verts_;
  std::vector<typename B::Hom> homs_;
  std::vector<std::size_t> offsets_;
  Subquotient<Ring> sq_;
};

template <class B>
class RepCategory {
 public:
  using Base = B;
  using Ring = typename B::Ring;
  using Elem = typename Ring::Elem;
  using BObj = typename B::Obj;
  using BMor = typename B::Mor;
  using Obj = Representation<B>;
  using Mor = RepMorphism<B>;
  using Hom = RepHom<B>;
  struct Kernel {
    Obj obj;
    Mor emb;
  };
  struct Cokernel {
    Obj obj;
    Mor proj;
  };

  RepCategory(Quiver q, B base, std::uint64_t budget = kDefaultBudget);

  const Quiver& quiver() const { return q_; }
  const B& base() const { return base_; }
  const Ring& ring() const { return base_.ring(); }
  std::uint64_t budget() const { return budget_; }
  std::string name() const;
  // gl.dim(C) + 1 when the quiver has an arrow; verified separately.
  int gl_dim() const;

  // Objects.
  Obj zero_object() const { return Obj{}; }
  bool is_zero(const Obj& f) const { return f.objs.empty(); }
  // Drops zero objects, fills missing arrow maps with zeros and validates.
  Obj make(std::map<Vertex, BObj> objs, std::map<ArrowId, BMor> arrows) const;
  BObj at(const Obj& f, Vertex v) const;
  BMor arrow_map(const Obj& f, ArrowId a) const;
  // F_ρ for a path ρ (identity on trivial paths).
  BMor along(const Obj& f, const Path& p) const;
  // Arrows with source and target in the given vertex set.
  std::vector<Arrow> arrows_within(const std::set<Vertex>& vs) const;
  bool equal(const Obj& f, const Obj& g) const;
  Obj direct_sum(const std::vector<Obj>& parts) const;
  std::string describe(const Obj& f) const;
  std::size_t measure(const Obj& f) const;

  // Morphisms.
  Mor make_morphism(const Obj& f, const Obj& g, std::map<Vertex, BMor> comps) const;
  BMor component(const Mor& eta, Vertex v) const;
  bool is_natural(const Mor& eta) const;
  Mor zero_mor(const Obj& f, const Obj& g) const;
  Mor identity(const Obj& f) const;
  Mor compose(const Mor& g, const Mor& f) const;
  Mor add(const Mor& f, const Mor& g) const;
  Mor sub(const Mor& f, const Mor& g) const;
  Mor neg(const Mor& f) const;
  Mor scale(const Elem& c, const Mor& f) const;
  bool is_zero_mor(const Mor& f) const;
  bool equal(const Mor& f, const Mor& g) const;
  Mor block(const std::vector<Obj>& tgts, const std::vector<Obj>& srcs,
            const std::map<BlockIndex, Mor>& blocks) const;

  // Abelian structure, computed vertex-wise.
  Kernel kernel(const Mor& eta) const;
  Cokernel cokernel(const Mor& eta) const;
  std::optional<Mor> lift_through_mono(const Mor& m, const Mor& g) const;
  std::optional<Mor> descend_through_epi(const Mor& p, const Mor& g) const;
  // Vertices where A -f-> B -g-> C fails to be exact.
  std::vector<Vertex> inexact_vertices(const Mor& f, const Mor& g) const;

  Hom hom(const Obj& f, const Obj& g) const { return Hom(*this, f, g); }

  // Free, cofree and stalk representations. Coordinates of f_i(C) at j are
  // indexed by the sorted paths Q(i, j); those of g_i(C) by Q(j, i).
  Verdict<Cone> certified_right_cone(Vertex i) const;
  Verdict<Cone> certified_left_cone(Vertex i) const;
  Obj free_rep(Vertex i, const BObj& c) const;
  Obj cofree_rep(Vertex i, const BObj& c) const;
  Obj stalk(Vertex i, const BObj& c) const;
  // Morphism f_i(C) -> F adjoint to u : C -> F_i; the λ-coordinate at k maps
  // by F_λ ∘ u.
  Mor free_adjoint(Vertex i, const BMor& u, const Obj& f) const;
  // Morphism F -> g_i(C) adjoint to u : F_i -> C; its ρ-coordinate at k is
  // u ∘ F_ρ for ρ ∈ Q(k, i).
  Mor cofree_adjoint(Vertex i, const BMor& u, const Obj& f) const;

  // ⊕_{i ∈ Supp F} f_i(U_i) -> F with U_i -> F_i base projective covers.
  Mor projective_cover(const Obj& f) const;
  bool is_projective(const Obj& f) const;
  // F -> ∏_{i ∈ Supp F} g_i(E_i) with F_i -> E_i base injective envelopes;
  // nullopt when the base lacks them.
  std::optional<Mor> injective_envelope(const Obj& f) const;
  bool is_injective(const Obj& f) const;

  Obj random_object(Rng& rng, std::size_t bound) const;
  Obj random_object_on(Rng& rng, const std::set<Vertex>& vs, std::size_t bound) const;
  Mor random_morphism(const Obj& f, const Obj& g, Rng& rng) const;

  // π_S and ι_S between this category and a full subquiver category.
  Obj restrict_to(const RepCategory& sub, const Obj& f) const;
  Obj extend_from(const RepCategory& sub, const Obj& f) const;

 private:
  Quiver q_;
  B base_;
  std::uint64_t budget_;
  // Cone cache shared by copies of the category.
  struct ConeCache {
    std::mutex mu;
    std::map<Vertex, Verdict<Cone>> right, left;
  };
  std::shared_ptr<ConeCache> cones_;
};

// Rep^f, Rep^fb, Rep^ft and Rep^fbt: F belongs when Supp F lies in the matching
// subquiver family. Supports are always finite here, so f holds for every F;
// the zero representation belongs to every class.
enum class SupportKind { F, FB, FT, FBT };

std::string to_string(SupportKind k);
SupportKind parse_support_kind(const std::string& text);

template <class B>
Verdict<bool> support_class(const RepCategory<B>& cat, const Representation<B>& f,
                            SupportKind which) {
  if (f.objs.empty()) {
    Verdict<bool> v;
    v.value = true;
    return v;
  }
  const auto fam = subquiver_family(cat.quiver(), f.support(), cat.budget());
  switch (which) {
    case SupportKind::F:
      return fam.in_F;
    case SupportKind::FB:
      return fam.in_FB;
    case SupportKind::FT:
      return fam.in_FT;
    case SupportKind::FBT:
      break;
  }
  return fam.in_FBT;
}

using FpRep = RepCategory<FpMod>;
using QRep = RepCategory<QMod>;
using ZRep = RepCategory<ZMod>;
using NestedFpRep = RepCategory<FpRep>;

extern template class RepHom<FpMod>;
extern template class RepHom<QMod>;
extern template class RepHom<ZMod>;
extern template class RepHom<FpRep>;
extern template class RepCategory<FpMod>;
extern template class RepCategory<QMod>;
extern template class RepCategory<ZMod>;
extern template class RepCategory<FpRep>;

}  // namespace qrep
