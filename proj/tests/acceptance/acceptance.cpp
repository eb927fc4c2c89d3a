// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qrep/cotorsion.hpp"
#include "qrep/linalg.hpp"
#include "qrep/quiver_analysis.hpp"
#include "qrep/sampling.hpp"
#include "support/ext_oracle.hpp"

using namespace qrep;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t failures = 0;

  // Records a failed check; the first few are kept for the report.
  void fail(const std::string& what) {
    pass = false;
    if (failures++ < 3) detail << " [" << what << "]";
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

FpMod f5() { return FpMod(PrimeField(5)); }

std::size_t dim_at(const FpRep& cat, const Representation<FpMod>& f, Vertex v) {
  return cat.at(f, v).size();
}

std::size_t base_rank(const FpMod& base, const ModMor<PrimeField>& m) {
  return rank(base.ring(), m.m);
}

bool is_identity(const FpMod& base, const ModMor<PrimeField>& m) {
  return base.equal(m, base.identity(m.src));
}

// Random finite acyclic samples shared by criteria 1 and 2.
struct Sample {
  Quiver q;
  Representation<FpMod> f;
};

std::vector<Sample> acyclic_samples(std::uint64_t seed, std::size_t n, std::size_t dims) {
  Rng rng(seed);
  std::vector<Sample> out;
  for (std::size_t t = 0; t < n; ++t) {
    Quiver q = random_acyclic_quiver(rng, 8, 12, 64);
    FpRep cat(q, f5());
    auto f = cat.random_object(rng, dims);
    out.push_back({std::move(q), std::move(f)});
  }
  return out;
}

// 1. Canonical presentation exact at every vertex with Λ_k ∘ Γ_k = 1.
Outcome canonical_presentations() {
  Outcome o;
  const auto samples = acyclic_samples(101, 200, 4);
  std::size_t vertices = 0;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const FpRep cat(samples[t].q, f5());
    const auto& base = cat.base();
    const Canonical<FpMod> canon(cat);
    const auto& f = samples[t].f;
    try {
      const auto p = canon.presentation(f);
      for (Vertex v : cat.quiver().vertices()) {
        ++vertices;
        const auto g = cat.component(p.gamma, v), pr = cat.component(p.proj, v);
        const std::size_t d1 = dim_at(cat, p.p1, v), d0 = dim_at(cat, p.p0, v),
                          df = dim_at(cat, f, v);
        const bool exact = d0 == d1 + df && base_rank(base, g) == d1 &&
                           base_rank(base, pr) == df && base.is_zero_mor(base.compose(pr, g));
        o.check(exact, "sample " + std::to_string(t) + " inexact at " + std::to_string(v));
        if (d1 == 0) continue;
        const auto it = p.lambda.find(v);
        o.check(it != p.lambda.end() && is_identity(base, base.compose(it->second, g)),
                "sample " + std::to_string(t) + " Lambda*Gamma != 1 at " + std::to_string(v));
      }
    } catch (const std::exception& e) {
      o.fail("sample " + std::to_string(t) + ": " + e.what());
    }
  }
  o.detail << " 200 quivers, " << vertices << " vertices checked";
  return o;
}

// 2. The four adjunctions as Hom-dimension identities.
Outcome adjunctions() {
  Outcome o;
  const auto samples = acyclic_samples(101, 200, 4);
  Rng rng(202);
  std::size_t checks = 0;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const FpRep cat(samples[t].q, f5());
    const auto& base = cat.base();
    const Functors<FpMod> fn(cat);
    const auto& f = samples[t].f;
    for (Vertex i : cat.quiver().vertices()) {
      const auto c = base.free(1 + rng() % 2);
      const auto fi = cat.at(f, i);
      const std::string at = "sample " + std::to_string(t) + " vertex " + std::to_string(i);
      o.check(cat.hom(cat.free_rep(i, c), f).size() == base.hom(c, fi).size(), at + " f_i");
      o.check(cat.hom(f, cat.cofree_rep(i, c)).size() == base.hom(fi, c).size(), at + " g_i");
      o.check(base.hom(fn.c_of(i, f), c).size() == cat.hom(f, cat.stalk(i, c)).size(), at + " c_i");
      o.check(cat.hom(cat.stalk(i, c), f).size() == base.hom(c, fn.k_of(i, f)).size(), at + " k_i");
      checks += 4;
    }
  }
  o.detail << " " << checks << " identities";
  return o;
}

// 3. Global dimension experiments and witnesses.
Outcome global_dimension() {
  Outcome o;
  auto run = [&](const std::string& label, const auto& cat, int bound, std::size_t samples) {
    const auto g = gldim_experiment(cat, samples, 2, 7);
    o.check(g.bound == bound, label + " bound " + std::to_string(g.bound));
    o.check(g.witness_pd == std::to_string(bound), label + " witness pd " + g.witness_pd);
    o.check(g.witness_certified, label + " witness not certified");
    o.check(g.all_samples_exact && g.max_pd_observed <= static_cast<std::size_t>(bound),
            label + " sample pd " + std::to_string(g.max_pd_observed));
    o.detail << " " << label << ": bound " << g.bound << ", witness pd " << g.witness_pd
             << ", max observed " << g.max_pd_observed << ";";
    return g;
  };
  run("A2/F5", FpRep(make_linear_a(2), f5()), 1, 200);
  const ZRep zcat(make_linear_a(2), ZMod(IntegerRing()));
  const auto gz = run("A2/FgAb", zcat, 2, 100);
  // The base class: Ext^1_Z(Z/2, Z/2) has order 2.
  const auto& z = zcat.base();
  const auto two = z.make_fgab(0, {2});
  const auto e = ext(z, two, two, 1);
  o.check(e.size() == 1 && e.orders()[0] == 2, "Ext^1_Z(Z/2, Z/2) is not Z/2");
  o.check(gz.witness_construction.find("Z/2") != std::string::npos,
          "FgAb witness does not use Z/2: " + gz.witness_construction);
  const NestedFpRep nested(make_linear_a(2), FpRep(make_linear_a(2), f5()));
  run("A2(x)A2/F5", nested, 2, 60);
  return o;
}

// 4. Ext^1 against the brute-force extension counter over F2.
Outcome ext_oracle() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n : {2, 3}) {
    const FpRep cat(make_linear_a(n), FpMod(PrimeField(2)));
    const auto reps = qrep::testing::all_reps_f2(cat, 4);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      const auto r = resolution(cat, reps[a], 2);
      for (std::size_t b = 0; b < reps.size(); ++b) {
        ++pairs;
        const std::size_t mine = ext_from(cat, r, reps[b], 1).size();
        const std::size_t oracle = qrep::testing::brute_force_ext1_log2(cat, reps[a], reps[b]);
        o.check(mine == oracle, "A" + std::to_string(n) + " " + cat.describe(reps[a]) + " / " +
                                    cat.describe(reps[b]) + ": " + std::to_string(mine) +
                                    " vs " + std::to_string(oracle));
      }
    }
  }
  o.detail << " " << pairs << " pairs (F, G) on A2 and A3, total dimension <= 4 each";
  return o;
}

// 5. Φ(Proj) ⟺ presentation splits; Ψ(Inj) ⟺ copresentation splits.
Outcome proj_inj_characterization() {
  Outcome o;
  Rng rng(505);
  std::size_t proj = 0, inj = 0;
  for (int t = 0; t < 100; ++t) {
    const FpRep cat(random_acyclic_quiver(rng, 6, 8, 40), f5());
    const auto& base = cat.base();
    const Functors<FpMod> fn(cat);
    const Canonical<FpMod> canon(cat);
    const auto& vs = cat.quiver().vertices();
    // Mix random objects with sums of (co)free ones so both answers occur.
    std::vector<Representation<FpMod>> parts = {cat.random_object(rng, 3)};
    for (int k = 0; k < 2; ++k) {
      const Vertex i = vs[rng() % vs.size()];
      parts.push_back(t % 3 == 1 ? cat.cofree_rep(i, base.free(1 + rng() % 2))
                                 : cat.free_rep(i, base.free(1 + rng() % 2)));
    }
    const auto f = t % 3 == 0 ? parts[0] : cat.direct_sum({parts[1], parts[2]});
    const auto p = canon.presentation(f);
    const bool phi = phi_membership(fn, f, GroundPair<FpMod>::proj_all(base)).holds;
    const bool splits = split_section(cat, p.proj).has_value();
    o.check(phi == splits, "instance " + std::to_string(t) + ": phi " + std::to_string(phi));
    const auto c = canon.copresentation(f);
    const bool psi = psi_membership(fn, f, GroundPair<FpMod>::all_inj(base)).holds;
    const bool cosplits = split_retraction(cat, c.unit).has_value();
    o.check(psi == cosplits, "instance " + std::to_string(t) + ": psi " + std::to_string(psi));
    proj += phi;
    inj += psi;
  }
  o.detail << " 100 instances, " << proj << " in Phi(Proj), " << inj << " in Psi(Inj)";
  return o;
}

// 6. Induced cotorsion pair identities and the negative control.
Outcome cotorsion_identities() {
  Outcome o;
  PairOptions opts;
  opts.samples = 100;
  opts.seed = 606;
  auto tally = [&](const IdentityReport& rep) {
    for (const auto& t : rep.identities) {
      o.check(t.checked == opts.samples, rep.ground + " " + t.name + " checked " +
                                             std::to_string(t.checked));
      if (t.violations) o.fail(rep.ground + " " + t.name + ": " + t.witnesses.at(0));
    }
    o.detail << " " << rep.quiver << "/" << rep.base << " " << rep.ground << ": "
             << rep.identities.size() << " identities x " << rep.samples << ";";
  };
  const ZRep z(make_linear_a(3), ZMod(IntegerRing()));
  tally(verify_pair_identities(z, GroundPair<ZMod>::proj_all(z.base()), opts));
  const FpRep a2(make_linear_a(2), f5());
  tally(verify_pair_identities(a2, GroundPair<FpMod>::all_inj(a2.base()), opts));
  PairOptions mutated = opts;
  mutated.samples = 20;
  mutated.mutate = true;
  const auto m1 = verify_pair_identities(z, GroundPair<ZMod>::proj_all(z.base()), mutated);
  const auto m2 = verify_pair_identities(a2, GroundPair<FpMod>::all_inj(a2.base()), mutated);
  o.check(m1.violations() > 0, "mutation on A3/FgAb not detected");
  o.check(m2.violations() > 0, "mutation on A2/F5 not detected");
  o.detail << " mutation detected: " << m1.violations() << " and " << m2.violations()
           << " violations";
  return o;
}

// 7. Cone cardinals of the loop and of the line.
Outcome cardinals() {
  Outcome o;
  auto expect = [&](const std::string& t, Invariant inv, Cardinal want) {
    const auto v = invariant(make_template(t), inv);
    o.detail << " " << t << " " << to_string(inv) << "=" << v.value.to_string() << ";";
    o.check(v.value == want && v.certified(), t + " " + to_string(inv) + " = " +
                                                  v.value.to_string() + ", expected " +
                                                  want.to_string());
  };
  for (Invariant inv : {Invariant::lccn, Invariant::rccn, Invariant::ltccn, Invariant::rtccn})
    expect("loop", inv, Cardinal::aleph1());
  expect("A_biinf_line", Invariant::rccn, Cardinal::aleph0());
  expect("A_biinf_line", Invariant::lccn, Cardinal::aleph0());
  expect("A_biinf_line", Invariant::ltccn, Cardinal::aleph1());
  expect("A_biinf_line", Invariant::rtccn, Cardinal::aleph1());
  return o;
}

// 8. Rootedness filtrations.
Outcome rootedness() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    const Quiver q = make_linear_a(n);
    for (Side side : {Side::Left, Side::Right}) {
      const auto f = root_filtration(q, side);
      o.check(f.covers_all && f.strata.size() == static_cast<std::size_t>(n),
              "A_" + std::to_string(n) + " filtration length " + std::to_string(f.strata.size()));
    }
    const auto c = classify(q);
    o.check(c.flags.at("left_rooted").value && c.flags.at("right_rooted").value,
            "A_" + std::to_string(n) + " not rooted");
  }
  const Quiver loop = make_template("loop");
  const auto lf = root_filtration(loop, Side::Right);
  o.check(!lf.covers_all && lf.converged && lf.strata.size() == 1 && lf.strata[0].empty(),
          "loop filtration");
  o.check(!classify(loop).flags.at("right_rooted").value, "loop right rooted");
  const auto ray = classify(make_template("ray_fwd"));
  const auto& l = ray.flags.at("left_rooted");
  const auto& r = ray.flags.at("right_rooted");
  o.check(l.value && l.certified(), "ray_fwd left_rooted " + l.status_string());
  o.check(!r.value && r.certified(), "ray_fwd right_rooted " + r.status_string());
  o.detail << " A_1..A_7 lengths n; loop fixed point {}; ray_fwd left " << l.status_string()
           << ", not right " << r.status_string();
  return o;
}

// 9. Relative suite on the zig-zag.
Outcome relative_support() {
  Outcome o;
  const FpRep cat(make_template("A_inf_zigzag"), f5());
  PairOptions opts;
  opts.samples = 50;
  opts.seed = 909;
  const auto rep = relative_support_check(cat, opts);
  for (const auto& t : rep.identities) {
    o.check(t.checked == opts.samples, t.name + " checked " + std::to_string(t.checked));
    if (t.violations) o.fail(t.name + ": " + t.witnesses.at(0));
  }
  o.detail << " " << rep.identities.size() << " checks x " << rep.samples << " samples";
  return o;
}

template <class Seq>
bool supp_additive(const FpRep& cat, const Seq& s) {
  std::set<Vertex> u = s.a.support();
  for (Vertex v : s.c.support()) u.insert(v);
  if (s.b.support() != u) return false;
  for (Vertex v : u)
    if (dim_at(cat, s.b, v) != dim_at(cat, s.a, v) + dim_at(cat, s.c, v)) return false;
  return true;
}

// 10. Supp additivity and closure of the support classes.
Outcome support_and_closure() {
  Outcome o;
  Rng rng(1010);
  std::size_t ses = 0, nonsplit = 0;
  while (ses < 200) {
    const FpRep cat(random_acyclic_quiver(rng, 6, 8, 40), f5());
    const auto f = cat.random_object(rng, 3), g = cat.random_object(rng, 3);
    const auto eta = cat.random_morphism(f, g, rng);
    std::vector<Extension<FpRep>> seqs;
    const auto k = cat.kernel(eta);
    const auto im = cat.cokernel(k.emb);
    seqs.push_back({k.obj, f, im.obj, k.emb, im.proj});
    const auto c = cat.cokernel(eta);
    const auto i = cat.kernel(c.proj);
    seqs.push_back({i.obj, g, c.obj, i.emb, c.proj});
    const auto e = ext(cat, f, g, 1, true);
    if (e.representative) {
      seqs.push_back(*e.representative);
      ++nonsplit;
    }
    for (const auto& s : seqs) {
      ++ses;
      o.check(is_short_exact(cat, s.mono, s.epi), "sequence " + std::to_string(ses) + " not exact");
      o.check(supp_additive(cat, s), "Supp not additive on sequence " + std::to_string(ses));
    }
  }

  // Closure on infinite quivers: finite-support objects on vertex windows.
  std::size_t closure_checks = 0;
  const SupportKind kinds[] = {SupportKind::F, SupportKind::FB, SupportKind::FT, SupportKind::FBT};
  for (const char* t : {"ray_fwd", "A_inf_zigzag", "D_inf", "A_biinf_zigzag", "A_biinf_line"}) {
    const FpRep cat(make_template(t), f5(), 20000);
    const Quiver& q = cat.quiver();
    for (int inst = 0; inst < 20; ++inst) {
      const std::size_t start = rng() % 5, width = 2 + rng() % 3;
      std::set<Vertex> w;
      for (std::size_t k = start; k < start + width; ++k) w.insert(*q.vertex_at(k));
      const auto f = cat.random_object_on(rng, w, 2), g = cat.random_object_on(rng, w, 2);
      const auto eta = cat.random_morphism(f, g, rng);
      const FpRep sub(q.full_subquiver(w), f5());
      const auto e = ext(sub, cat.restrict_to(sub, g), cat.restrict_to(sub, f), 1, true);
      const auto middle = e.representative ? cat.extend_from(sub, e.representative->b)
                                           : cat.direct_sum({g, f});
      const auto sum = cat.direct_sum({f, g});
      const std::string at = std::string(t) + " instance " + std::to_string(inst);
      for (SupportKind kind : kinds) {
        auto in = [&](const Representation<FpMod>& x) {
          const auto v = support_class(cat, x, kind);
          o.check(v.certified(), at + " " + to_string(kind) + " not certified");
          return v.value;
        };
        const bool fi = in(f), gi = in(g);
        const std::string k = " " + to_string(kind);
        if (fi) o.check(in(cat.kernel(eta).obj), at + k + " kernel");
        if (gi) o.check(in(cat.cokernel(eta).obj), at + k + " cokernel");
        if (fi && gi) o.check(in(middle), at + k + " extension");
        if (in(sum)) o.check(fi && gi, at + k + " summand");
        closure_checks += 4;
      }
    }
  }
  o.detail << " " << ses << " short exact sequences (" << nonsplit << " nonsplit); "
           << closure_checks << " closure checks on 5 infinite templates";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"canonical presentation", canonical_presentations},
      {"adjunctions", adjunctions},
      {"global dimension", global_dimension},
      {"Ext oracle over F2", ext_oracle},
      {"projectivity/injectivity characterization", proj_inj_characterization},
      {"cotorsion identities", cotorsion_identities},
      {"cardinal classification", cardinals},
      {"rootedness", rootedness},
      {"finite-support relative suite", relative_support},
      {"support and closure", support_and_closure},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s (%.1fs):%s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
