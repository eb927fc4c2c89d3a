#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrep/functors.hpp"

// Canonical presentation 0 -> P1 -Γ-> P0 -> F -> 0 with P0 = ⊕_{i ∈ Supp F} f_i(F_i)
// and P1 = ⊕_{ρ: s(ρ) ∈ Supp F} f_{t(ρ)}(F_{s(ρ)}), its dual co-presentation,
// stalk presentations and the path-length filtration of f_x(C).
//
// Coordinates of P0 at k are pairs (i, γ) with γ ∈ Q(i, k); those of P1 are
// pairs (ρ, λ) with λ ∈ Q(t(ρ), k). Paths are listed in traversal order.

namespace qrep {

enum class SplittingMethod {
  Explicit,  // telescoping formula along the path
  Solver,    // generic one-sided inverse, kept as a cross-check
};

template <class B>
struct ShortExactSequence {
  Representation<B> a, b, c;
  RepMorphism<B> mono, epi;
};

template <class B>
struct CanonicalPresentation {
  Representation<B> f, p1, p0;
  std::vector<Vertex> vertices;  // summands of P0
  std::vector<Arrow> arrows;     // summands of P1
  RepMorphism<B> gamma, proj;
  // Λ_k with Λ_k ∘ Γ_k = 1 at every vertex k of Supp P1.
  std::map<Vertex, typename B::Mor> lambda;
};

template <class B>
struct CanonicalCopresentation {
  Representation<B> f, i0, i1;
  std::vector<Vertex> vertices;  // factors of I0
  std::vector<Arrow> arrows;     // factors of I1, those with t(ρ) ∈ Supp F
  RepMorphism<B> unit, gamma;
  // Σ_k with Γ_k ∘ Σ_k = 1 at every vertex k of Supp I1.
  std::map<Vertex, typename B::Mor> sigma;
};

template <class B>
class Canonical {
 public:
  using Cat = RepCategory<B>;
  using Obj = typename Cat::Obj;
  using Mor = typename Cat::Mor;
  using BObj = typename B::Obj;
  using BMor = typename B::Mor;

  explicit Canonical(const Cat& cat) : fn_(cat) {}
  const Cat& category() const { return fn_.category(); }
  const Functors<B>& functors() const { return fn_; }

  // Throws InfiniteCone when a needed right cone is not certified finite and
  // VerificationError when the result fails its own checks.
  CanonicalPresentation<B> presentation(const Obj& f,
                                        SplittingMethod method = SplittingMethod::Explicit) const;
  CanonicalCopresentation<B> copresentation(
      const Obj& f, SplittingMethod method = SplittingMethod::Explicit) const;

  // ⊕_{ρ: x -> *} f_{t(ρ)}(C) ↪ f_x(C) ↠ s_x(C).
  ShortExactSequence<B> stalk_presentation(Vertex x, const BObj& c) const;
  // ⊕_{|ρ| = k} f_{t(ρ)}(C) ↪ ⊕_{|ρ| = k-1} f_{t(ρ)}(C) ↠ ⊕_{|ρ| = k-1} s_{t(ρ)}(C), paths from x.
  ShortExactSequence<B> path_length_filtration(Vertex x, const BObj& c, std::size_t k) const;

  // Morphism F -> G through which the legs t_i : f_i(F_i) -> G factor as
  // t_i = h ∘ proj ∘ μ_i, or nullopt if the legs are not a cocone.
  std::optional<Mor> descend_cocone(const CanonicalPresentation<B>& p,
                                    const std::vector<Mor>& legs, const Obj& g) const;

  // Vertices where the splitting identity fails (empty when it holds).
  std::vector<Vertex> splitting_defects(const CanonicalPresentation<B>& p) const;
  std::vector<Vertex> splitting_defects(const CanonicalCopresentation<B>& p) const;

 private:
  BMor explicit_lambda(const CanonicalPresentation<B>& p, Vertex k) const;
  BMor explicit_sigma(const CanonicalCopresentation<B>& p, Vertex k) const;

  Functors<B> fn_;
};

extern template class Canonical<FpMod>;
extern template class Canonical<QMod>;
extern template class Canonical<ZMod>;
extern template class Canonical<FpRep>;

}  // namespace qrep
