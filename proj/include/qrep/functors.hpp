#pragma once

#include <map>
#include <vector>

#include "qrep/repcat.hpp"

// Evaluation, stalk, free and cofree functors with their (co)units, the
// mesh maps φ_i/ψ_i with c_i/k_i, the right adjoint r_z of g_z and the left
// adjoint l_z of f_z.

namespace qrep {

template <class B>
struct FreeRep {
  Vertex vertex = 0;
  typename B::Obj object;
  Representation<B> rep;
  // Coordinate labels: vertex j carries Q(i, j) (free) or Q(j, i) (cofree).
  std::map<Vertex, std::vector<Path>> labels;
};

// Mesh map together with the arrows indexing its (co)product side.
template <class B>
struct MeshMap {
  std::vector<Arrow> arrows;
  typename B::Mor map;
};

template <class B>
class Functors {
 public:
  using Cat = RepCategory<B>;
  using Obj = typename Cat::Obj;
  using Mor = typename Cat::Mor;
  using BObj = typename B::Obj;
  using BMor = typename B::Mor;

  explicit Functors(const Cat& cat) : cat_(cat) {}
  const Cat& category() const { return cat_; }

  FreeRep<B> free_rep(Vertex i, const BObj& c) const;
  FreeRep<B> cofree_rep(Vertex i, const BObj& c) const;
  Obj stalk(Vertex i, const BObj& c) const { return cat_.stalk(i, c); }
  BObj evaluate(const Obj& f, Vertex i) const { return cat_.at(f, i); }
  BMor evaluate(const Mor& eta, Vertex i) const { return cat_.component(eta, i); }

  // Coproduct inclusion μ_ρ : C -> f_i(C)_j for ρ ∈ Q(i, j).
  BMor mu(const FreeRep<B>& fr, const Path& rho) const;
  // Product projection π_ρ : g_i(C)_j -> C for ρ ∈ Q(j, i).
  BMor pi(const FreeRep<B>& gr, const Path& rho) const;

  // Counit ψ^i_F : f_i(F_i) -> F and unit F -> g_i(F_i).
  Mor counit(Vertex i, const Obj& f) const;
  Mor unit(Vertex i, const Obj& f) const;
  // h_i(t) = t_i ∘ μ_{ε_i} and its inverse β ↦ the morphism with λ-coordinate F_λ ∘ β.
  BMor transport_to_base(Vertex i, const BObj& c, const Mor& t) const;
  Mor transport_from_base(Vertex i, const BMor& beta, const Obj& f) const;
  // Dual transport for g_i: t ↦ π_{ε_i} ∘ t_i and back.
  BMor cotransport_to_base(Vertex i, const BObj& c, const Mor& t) const;
  Mor cotransport_from_base(Vertex i, const BMor& beta, const Obj& f) const;

  // f_ρ(C) : f_{t(ρ)}(C) -> f_{s(ρ)}(C) with (f_ρ)_k ∘ μ_λ = μ_{λρ}.
  Mor path_transformation(const Path& rho, const BObj& c) const;
  // g_ρ(C) : g_{t(ρ)}(C) -> g_{s(ρ)}(C) with π_λ ∘ (g_ρ)_k = π_{ρλ}, λ ∈ Q(k, s(ρ)).
  Mor cofree_path_transformation(const Path& rho, const BObj& c) const;
  // f_i(u) for a base morphism u.
  Mor free_on_morphism(Vertex i, const BMor& u) const;
  Mor cofree_on_morphism(Vertex i, const BMor& u) const;
  // e_ρ at F: F_ρ : F_{s(ρ)} -> F_{t(ρ)}.
  BMor e_path(const Path& rho, const Obj& f) const { return cat_.along(f, rho); }

  // φ_i^F : ⊕_{α: * -> i} F_{s(α)} -> F_i and ψ_i^F : F_i -> ∏_{α: i -> *} F_{t(α)},
  // restricted to arrows whose other endpoint lies in Supp F.
  MeshMap<B> phi_map(Vertex i, const Obj& f) const;
  MeshMap<B> psi_map(Vertex i, const Obj& f) const;
  BObj c_of(Vertex i, const Obj& f) const;
  BObj k_of(Vertex i, const Obj& f) const;

  // r_z(F) with Hom(g_z(C), F) ≅ Hom(C, r_z(F)): the kernel of
  //   Θ : ⊕_{i, γ ∈ Q(i,z)} F_i -> ⊕_{α: i -> j, γ ∈ Q(i,z)} F_j,
  //   x ↦ F_α x_{i,γ} − [γ = ρα] x_{j,ρ},
  // which is the naturality system of a map g_z(C) -> F read off coordinates.
  // Constraints from i outside Supp F keep only the second term.
  typename B::Kernel right_adjoint_of_g(Vertex z, const Obj& f) const;
  // l_z(F) with Hom(l_z(F), C) ≅ Hom(F, f_z(C)): the cokernel of
  //   Θ' : ⊕_{α: i -> j, λ' ∈ Q(z,j)} F_i -> ⊕_{j, λ' ∈ Q(z,j)} F_j,
  // sending the (α, λ') summand by F_α to (j, λ') and by −1 to (i, λ)
  // whenever λ' = αλ; summands with j outside Supp F keep only the second map.
  typename B::Cokernel left_adjoint_of_f(Vertex z, const Obj& f) const;

 private:
  Cat cat_;
};

extern template class Functors<FpMod>;
extern template class Functors<QMod>;
extern template class Functors<ZMod>;
extern template class Functors<FpRep>;

}  // namespace qrep
