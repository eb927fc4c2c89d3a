#include "qrep/cotorsion.hpp"

#include <set>
#include <stdexcept>

namespace qrep {

std::string to_string(GroundKind k) {
  switch (k) {
    case GroundKind::ProjAll:
      return "ProjAll";
    case GroundKind::AllInj:
      return "AllInj";
    case GroundKind::Custom:
      break;
  }
  return "Custom";
}

std::vector<ModObj<PrimeField>> test_family(const FpMod& base) { return {base.free(1)}; }
std::vector<ModObj<RationalField>> test_family(const QMod& base) { return {base.free(1)}; }
std::vector<ModObj<IntegerRing>> test_family(const ZMod& base) {
  return {base.free(1), base.make_fgab(0, {2}), base.make_fgab(0, {3}), base.make_fgab(0, {4})};
}

std::vector<Vertex> Membership::failures() const {
  std::vector<Vertex> out;
  for (const auto& c : checks)
    if (!c.map_ok || !c.in_class) out.push_back(c.vertex);
  return out;
}

std::size_t IdentityReport::violations() const {
  std::size_t n = 0;
  for (const auto& t : identities) n += t.violations;
  return n;
}

namespace {

constexpr std::size_t kWitnessLimit = 3;

// Supp F together with the far ends of arrows crossing its boundary in the
// given direction.
template <class B>
std::set<Vertex> mesh_vertices(const RepCategory<B>& cat, const Representation<B>& f, bool out) {
  std::set<Vertex> vs = f.support();
  for (Vertex v : f.support())
    for (const auto& a : out ? cat.quiver().out_arrows(v) : cat.quiver().in_arrows(v))
      vs.insert(out ? a.tgt : a.src);
  return vs;
}

}  // namespace

template <class B>
Membership phi_membership(const Functors<B>& fn, const Representation<B>& f,
                          const GroundPair<B>& ground) {
  const auto& cat = fn.category();
  const B& base = cat.base();
  Membership m;
  m.skipped = "φ_i is 0 -> 0 away from Supp F and the targets of its out-arrows";
  for (Vertex i : mesh_vertices(cat, f, true)) {
    const auto mesh = fn.phi_map(i, f);
    VertexCheck c;
    c.vertex = i;
    c.map_ok = base.is_zero(base.kernel(mesh.map).obj);
    const auto coker = base.cokernel(mesh.map).obj;
    c.in_class = ground.in_a(coker);
    c.object = base.describe(coker);
    m.holds = m.holds && c.map_ok && c.in_class;
    m.checks.push_back(std::move(c));
  }
  return m;
}

template <class B>
Membership psi_membership(const Functors<B>& fn, const Representation<B>& f,
                          const GroundPair<B>& ground) {
  const auto& cat = fn.category();
  const B& base = cat.base();
  Membership m;
  m.skipped = "ψ_i is 0 -> 0 away from Supp F and the sources of its in-arrows";
  for (Vertex i : mesh_vertices(cat, f, false)) {
    const auto mesh = fn.psi_map(i, f);
    VertexCheck c;
    c.vertex = i;
    c.map_ok = base.is_zero(base.cokernel(mesh.map).obj);
    const auto ker = base.kernel(mesh.map).obj;
    c.in_class = ground.in_b(ker);
    c.object = base.describe(ker);
    m.holds = m.holds && c.map_ok && c.in_class;
    m.checks.push_back(std::move(c));
  }
  return m;
}

template <class B>
bool ExtTable<B>::orthogonal() const {
  for (const auto& row : orders)
    for (const auto& e : row)
      if (!e.empty()) return false;
  return true;
}

template <class B>
std::vector<std::vector<std::string>> ExtTable<B>::render() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : orders) {
    auto& r = out.emplace_back();
    for (const auto& e : row) {
      if constexpr (Ring::is_field) {
        r.push_back(std::to_string(e.size()));
      } else {
        std::string s;
        for (const auto& d : e) s += (s.empty() ? "" : "+") + (d == 0 ? std::string("Z") : "Z/" + d.get_str());
        r.push_back(s.empty() ? "0" : s);
      }
    }
  }
  return out;
}

template <class B>
ExtTable<B> orthogonality(const RepCategory<B>& cat, const std::vector<Representation<B>>& fs,
                          const std::vector<Representation<B>>& gs, std::size_t degree) {
  ExtTable<B> t;
  t.degree = degree;
  for (const auto& f : fs) {
    const auto r = resolution(cat, f, degree + 1);
    auto& row = t.orders.emplace_back();
    for (const auto& g : gs) row.push_back(ext_from(cat, r, g, degree).orders());
  }
  return t;
}

template <class B>
ApproxSequence<B> special_phi_precover(const Functors<B>& fn, const Representation<B>& f) {
  const auto& cat = fn.category();
  ApproxSequence<B> ap;
  ap.precover = true;
  const auto p = cat.projective_cover(f);
  const auto k = cat.kernel(p);
  ap.seq = {k.obj, p.src, f, k.emb, p};
  if (!is_short_exact(cat, k.emb, p))
    throw VerificationError("special precover: sequence is not exact");
  ap.certificate = phi_membership(fn, p.src, GroundPair<B>::proj_all(cat.base()));
  ap.split = split_section(cat, p).has_value();
  return ap;
}

template <class B>
ApproxSequence<B> special_psi_preenvelope(const Functors<B>& fn, const Representation<B>& f) {
  const auto& cat = fn.category();
  const auto e = cat.injective_envelope(f);
  if (!e) throw std::invalid_argument("special preenvelope needs a base with injective envelopes");
  ApproxSequence<B> ap;
  ap.precover = false;
  const auto c = cat.cokernel(*e);
  ap.seq = {f, e->tgt, c.obj, *e, c.proj};
  if (!is_short_exact(cat, *e, c.proj))
    throw VerificationError("special preenvelope: sequence is not exact");
  ap.certificate = psi_membership(fn, e->tgt, GroundPair<B>::all_inj(cat.base()));
  ap.split = split_retraction(cat, *e).has_value();
  return ap;
}

template <class B>
bool approximates(const RepCategory<B>& cat, const ApproxSequence<B>& ap,
                  const Representation<B>& x) {
  const auto& ring = cat.ring();
  if (ap.precover) {
    const auto h = cat.hom(x, ap.seq.c);
    for (std::size_t t = 0; t < h.size(); ++t) {
      Vec<typename B::Ring> c(h.size(), ring.zero());
      c[t] = ring.one();
      if (!factor_through_right(cat, ap.seq.epi, h.element(c))) return false;
    }
  } else {
    const auto h = cat.hom(ap.seq.a, x);
    for (std::size_t t = 0; t < h.size(); ++t) {
      Vec<typename B::Ring> c(h.size(), ring.zero());
      c[t] = ring.one();
      if (!factor_through_left(cat, ap.seq.mono, h.element(c))) return false;
    }
  }
  return true;
}

namespace {

template <class B>
std::string sample_label(const RepCategory<B>& cat, std::size_t k, const Representation<B>& f) {
  return "sample " + std::to_string(k) + ": " + cat.describe(f);
}

void tally(IdentityTally& t, bool ok, const std::string& witness) {
  ++t.checked;
  if (ok) return;
  ++t.violations;
  if (t.witnesses.size() < kWitnessLimit) t.witnesses.push_back(witness);
}

}  // namespace

template <class B>
IdentityReport verify_pair_identities(const RepCategory<B>& cat, const GroundPair<B>& ground,
                                      const PairOptions& opts) {
  using Obj = Representation<B>;
  using BObj = typename B::Obj;
  const Quiver& q = cat.quiver();
  if (!q.is_finite()) throw std::invalid_argument("verify_pair_identities needs a finite quiver");
  const B& base = cat.base();
  const Functors<B> fn(cat);

  std::vector<BObj> fam_a, fam_b;
  for (const auto& x : test_family(base)) {
    if (ground.in_a(x)) fam_a.push_back(x);
    if (ground.in_b(x)) fam_b.push_back(x);
  }

  IdentityReport rep;
  rep.quiver = q.name();
  rep.ground = ground.name;
  rep.base = base.name();
  rep.seed = opts.seed;
  rep.samples = opts.samples;
  rep.mutated = opts.mutate;
  IdentityTally phi_perp{"Phi(A) = perp1 s_*(B)"};
  IdentityTally psi_perp{"Psi(B) = s_*(A) perp1"};
  IdentityTally psi_s_all{"s_*(A) perp = Psi(B)"};
  IdentityTally psi_g_all{"g_*(A) perp = Psi(B)"};
  IdentityTally phi_in{"Phi(A) in Rep(Q, A)"};
  IdentityTally psi_in{"Psi(B) in Rep(Q, B)"};
  IdentityTally proj{"Phi(Proj) = Proj(Rep)"};
  IdentityTally inj{"Psi(Inj) = Inj(Rep)"};

  // Right-hand test objects: stalks s_i(B) for Φ; stalks s_i(A) and cofree
  // g_i(A) on the left for Ψ, resolved once.
  std::vector<Obj> stalks_b;
  for (Vertex i : q.vertices())
    for (const auto& x : fam_b) stalks_b.push_back(cat.stalk(i, x));
  std::vector<Resolution<RepCategory<B>>> res_s, res_g;
  for (Vertex i : q.vertices())
    for (const auto& x : fam_a) {
      res_s.push_back(resolution(cat, cat.stalk(i, x), opts.max_degree + 1));
      res_g.push_back(resolution(cat, cat.cofree_rep(i, x), opts.max_degree + 1));
    }

  // Anchors first: 0, the free f_i(A0) and cofree g_i(B0); then random samples.
  std::vector<Obj> samples{cat.zero_object()};
  for (Vertex i : q.vertices()) {
    if (!fam_a.empty()) samples.push_back(cat.free_rep(i, fam_a.front()));
    if (!fam_b.empty()) samples.push_back(cat.cofree_rep(i, fam_b.front()));
  }
  if (samples.size() > opts.samples) samples.resize(opts.samples);
  Rng rng(opts.seed);
  while (samples.size() < opts.samples) samples.push_back(cat.random_object(rng, opts.dim_bound));

  // Mutation: add s_x(A0) at the source of an arrow, which breaks φ at its target.
  std::optional<Obj> bump;
  if (opts.mutate && !q.arrows().empty() && !fam_a.empty())
    bump = cat.stalk(q.arrows().front().src, fam_a.front());

  // Injective envelopes exist over the field bases only.
  const bool inj_known = B::Ring::is_field;

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Obj& f = samples[k];
    const Obj probe = bump ? cat.direct_sum({f, *bump}) : f;
    const std::string label = sample_label(cat, k, f);
    const bool phi = phi_membership(fn, f, ground).holds;
    const bool psi = psi_membership(fn, f, ground).holds;

    // Φ(A) = ⊥₁ s_*(B).
    const auto rf = resolution(cat, probe, 2);
    bool perp = true;
    for (const auto& g : stalks_b)
      if (!ext_from(cat, rf, g, 1).is_zero()) {
        perp = false;
        break;
      }
    tally(phi_perp, phi == perp, label + (phi ? " in Phi but not perp" : " perp but not in Phi"));

    // Ψ(B) = s_*(A)^⊥₁ and the all-degree versions for s_* and g_*.
    bool s1 = true, s_all = true, g_all = true;
    for (const auto& r : res_s)
      for (std::size_t n = 1; n <= opts.max_degree; ++n)
        if (!ext_from(cat, r, probe, n).is_zero()) {
          if (n == 1) s1 = false;
          s_all = false;
        }
    for (const auto& r : res_g)
      for (std::size_t n = 1; n <= opts.max_degree && g_all; ++n)
        if (!ext_from(cat, r, probe, n).is_zero()) g_all = false;
    tally(psi_perp, psi == s1, label);
    tally(psi_s_all, psi == s_all, label);
    tally(psi_g_all, psi == g_all, label);

    bool all_a = true, all_b = true;
    for (const auto& [v, o] : f.objs) {
      all_a = all_a && ground.in_a(o);
      all_b = all_b && ground.in_b(o);
    }
    tally(phi_in, !phi || all_a, label);
    tally(psi_in, !psi || all_b, label);

    if (ground.kind == GroundKind::ProjAll) tally(proj, phi == cat.is_projective(probe), label);
    if (ground.kind == GroundKind::AllInj && inj_known)
      tally(inj, psi == cat.is_injective(probe), label);
  }

  rep.identities = {phi_perp, psi_perp, psi_s_all, psi_g_all, phi_in, psi_in};
  if (ground.kind == GroundKind::ProjAll) rep.identities.push_back(proj);
  if (ground.kind == GroundKind::AllInj && inj_known) rep.identities.push_back(inj);
  return rep;
}

template <class B>
IdentityReport relative_support_check(const RepCategory<B>& cat, const PairOptions& opts) {
  using Obj = Representation<B>;
  const Quiver& q = cat.quiver();
  if (!q.declares(Declaration::FiniteConeShape))
    throw std::invalid_argument("relative_support_check needs a quiver declared finite-cone-shape");
  if constexpr (!B::Ring::is_field) {
    throw std::invalid_argument("relative_support_check needs a field base");
  } else {
    const Functors<B> fn(cat);
    const Canonical<B> canon(cat);
    IdentityReport rep;
    rep.quiver = q.name();
    rep.ground = "ProjAll/AllInj";
    rep.base = cat.base().name();
    rep.seed = opts.seed;
    rep.samples = opts.samples;
    IdentityTally pres{"presentation in Rep^f"};
    IdentityTally copres{"co-presentation in Rep^f"};
    IdentityTally prec{"special precover in Rep^f, certified"};
    IdentityTally preenv{"special preenvelope in Rep^f, certified"};
    IdentityTally hered{"Ext^(d+1) vanishes"};

    auto in_f = [&](const Obj& x) { return support_class(cat, x, SupportKind::F).value; };
    Rng rng(opts.seed);
    std::vector<Obj> samples{cat.zero_object()};
    while (samples.size() < opts.samples) {
      const std::size_t start = rng() % 12, len = 1 + rng() % 3;
      std::set<Vertex> vs;
      for (std::size_t t = start; t < start + len; ++t)
        if (auto v = q.vertex_at(t)) vs.insert(*v);
      samples.push_back(cat.random_object_on(rng, vs, opts.dim_bound));
    }
    const std::size_t top = static_cast<std::size_t>(cat.gl_dim()) + 1;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const Obj& f = samples[k];
      const std::string label = sample_label(cat, k, f);
      const auto p = canon.presentation(f);
      tally(pres, in_f(p.p0) && in_f(p.p1), label);
      const auto c = canon.copresentation(f);
      tally(copres, in_f(c.i0) && in_f(c.i1), label);
      const auto pc = special_phi_precover(fn, f);
      tally(prec, pc.certificate.holds && in_f(pc.seq.a) && in_f(pc.seq.b), label);
      const auto pe = special_psi_preenvelope(fn, f);
      tally(preenv, pe.certificate.holds && in_f(pe.seq.b) && in_f(pe.seq.c), label);
      const Obj& g = samples[(k + 1) % samples.size()];
      tally(hered, ext(cat, f, g, top).is_zero(), label);
    }
    rep.identities = {pres, copres, prec, preenv, hered};
    return rep;
  }
}

#define QREP_INSTANTIATE_COTORSION(B)                                                          \
  template Membership phi_membership<B>(const Functors<B>&, const Representation<B>&,          \
                                        const GroundPair<B>&);                                 \
  template Membership psi_membership<B>(const Functors<B>&, const Representation<B>&,          \
                                        const GroundPair<B>&);                                 \
  template struct ExtTable<B>;                                                                 \
  template ExtTable<B> orthogonality<B>(const RepCategory<B>&,                                 \
                                        const std::vector<Representation<B>>&,                 \
                                        const std::vector<Representation<B>>&, std::size_t);   \
  template ApproxSequence<B> special_phi_precover<B>(const Functors<B>&,                       \
                                                     const Representation<B>&);                \
  template ApproxSequence<B> special_psi_preenvelope<B>(const Functors<B>&,                    \
                                                        const Representation<B>&);             \
  template bool approximates<B>(const RepCategory<B>&, const ApproxSequence<B>&,               \
                                const Representation<B>&);                                     \
  template IdentityReport verify_pair_identities<B>(const RepCategory<B>&,                     \
                                                    const GroundPair<B>&, const PairOptions&); \
  template IdentityReport relative_support_check<B>(const RepCategory<B>&, const PairOptions&);

QREP_INSTANTIATE_COTORSION(FpMod)
QREP_INSTANTIATE_COTORSION(QMod)
QREP_INSTANTIATE_COTORSION(ZMod)

}  // namespace qrep
