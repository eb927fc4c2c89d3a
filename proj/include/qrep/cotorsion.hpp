#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrep/canonical.hpp"
#include "qrep/homology.hpp"

// Φ(A)/Ψ(B) membership for a cotorsion pair (A, B) of the base category,
// Ext-orthogonality tables, special approximations for the built-in pairs and
// sampled checks of the induced-pair identities on Rep(Q, C).

namespace qrep {

enum class GroundKind { ProjAll, AllInj, Custom };

std::string to_string(GroundKind k);

template <class B>
struct GroundPair {
  using BObj = typename B::Obj;

  GroundKind kind = GroundKind::Custom;
  std::string name;
  std::function<bool(const BObj&)> in_a, in_b;

  // (Proj(C), C).
  static GroundPair proj_all(const B& base) {
    return {GroundKind::ProjAll, "ProjAll",
            [base](const BObj& x) { return base.is_projective(x); },
            [](const BObj&) { return true; }};
  }
  // (C, Inj(C)); complete only over field bases.
  static GroundPair all_inj(const B& base) {
    return {GroundKind::AllInj, "AllInj", [](const BObj&) { return true; },
            [base](const BObj& x) { return base.is_injective(x); }};
  }
  static GroundPair custom(std::string name, std::function<bool(const BObj&)> a,
                           std::function<bool(const BObj&)> b) {
    return {GroundKind::Custom, std::move(name), std::move(a), std::move(b)};
  }
};

// Small indecomposables standing in for "all of C" when an identity
// quantifies over the base: k over a field; Z, Z/2, Z/3, Z/4 over Z.
std::vector<ModObj<PrimeField>> test_family(const FpMod& base);
std::vector<ModObj<RationalField>> test_family(const QMod& base);
std::vector<ModObj<IntegerRing>> test_family(const ZMod& base);

struct VertexCheck {
  Vertex vertex = 0;
  bool map_ok = true;    // φ_i mono, or ψ_i epi
  bool in_class = true;  // c_i(F) ∈ A, or k_i(F) ∈ B
  std::string object;    // c_i(F) or k_i(F)
};

struct Membership {
  bool holds = true;
  std::vector<VertexCheck> checks;
  // Why the vertices without a check are vacuous.
  std::string skipped;

  std::vector<Vertex> failures() const;
};

// Φ(A): φ_i^F mono with cokernel in A at every vertex. Only Supp F and the
// targets of arrows leaving it are checked; elsewhere φ_i is 0 -> 0.
template <class B>
Membership phi_membership(const Functors<B>& fn, const Representation<B>& f,
                          const GroundPair<B>& ground);
// Ψ(B): ψ_i^F epi with kernel in B; checked on Supp F and the sources of
// arrows entering it.
template <class B>
Membership psi_membership(const Functors<B>& fn, const Representation<B>& f,
                          const GroundPair<B>& ground);

template <class B>
struct ExtTable {
  using Ring = typename B::Ring;
  std::size_t degree = 0;
  std::vector<std::vector<Vec<Ring>>> orders;  // orders[a][b] for Ext^n(Fs[a], Gs[b])

  bool orthogonal() const;
  std::vector<std::vector<std::string>> render() const;
};

template <class B>
ExtTable<B> orthogonality(const RepCategory<B>& cat, const std::vector<Representation<B>>& fs,
                          const std::vector<Representation<B>>& gs, std::size_t degree);

// 0 -> B' -> A' -> F -> 0 (precover) or 0 -> F -> B' -> A' -> 0 (preenvelope)
// stored as seq = (a, b, c, mono, epi); `certificate` is the membership of the
// middle term and `split` records whether the approximation map splits.
template <class B>
struct ApproxSequence {
  bool precover = true;
  ShortExactSequence<B> seq;
  Membership certificate;
  bool split = false;
};

// Projective cover ⊕ f_i(U_i) -> F, a special Φ(Proj(C))-precover.
template <class B>
ApproxSequence<B> special_phi_precover(const Functors<B>& fn, const Representation<B>& f);
// Injective envelope F -> ∏ g_i(E_i), a special Ψ(Inj(C))-preenvelope; needs a
// base with injective envelopes.
template <class B>
ApproxSequence<B> special_psi_preenvelope(const Functors<B>& fn, const Representation<B>& f);

// Every morphism X -> F factors through the precover (or F -> X through the
// preenvelope).
template <class B>
bool approximates(const RepCategory<B>& cat, const ApproxSequence<B>& ap,
                  const Representation<B>& x);

struct IdentityTally {
  IdentityTally() = default;
  explicit IdentityTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;  // first few failing samples
};

struct IdentityReport {
  std::string quiver, ground, base;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool mutated = false;
  std::vector<IdentityTally> identities;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

struct PairOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t dim_bound = 2;
  std::size_t max_degree = 2;
  // Negative control: orthogonality is evaluated on F ⊕ s_x(A0) for the
  // source x of an arrow while membership is evaluated on F.
  bool mutate = false;
};

// Sampled check of
//   Φ(A) = ⊥₁s_*(B),  Ψ(B) = s_*(A)^⊥₁,  s_*(A)^⊥ = g_*(A)^⊥ = Ψ(B),
//   Φ(A) ⊆ Rep(Q, A),  Ψ(B) ⊆ Rep(Q, B),
// plus Φ(Proj) = Proj(Rep) or Ψ(Inj) = Inj(Rep) for the built-in pairs.
// The quantifiers over A and B run over test_family; ⊥ is tested in degrees
// 1..max_degree. The quiver must be finite.
template <class B>
IdentityReport verify_pair_identities(const RepCategory<B>& cat, const GroundPair<B>& ground,
                                      const PairOptions& opts);

// On a quiver declared finite-cone-shape and a field base: canonical
// (co)presentations and both special approximations of sampled finite-support
// representations stay in Rep^f with passing certificates, and Ext^{d+1}
// vanishes between samples where d = gl.dim Rep(Q, C).
template <class B>
IdentityReport relative_support_check(const RepCategory<B>& cat, const PairOptions& opts);

extern template struct ExtTable<FpMod>;
extern template struct ExtTable<QMod>;
extern template struct ExtTable<ZMod>;

}  // namespace qrep
