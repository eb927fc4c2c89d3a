#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qrep/cotorsion.hpp"
#include "qrep/io.hpp"
#include "qrep/quiver_analysis.hpp"

#ifndef QREP_VERSION
#define QREP_VERSION "0.0.0"
#endif

using namespace qrep;
using io::Json;

namespace {

enum Exit { kOk = 0, kInput = 1, kViolation = 2, kInternal = 3 };

struct Options {
  std::string command;
  std::string quiver_path, tmpl, base;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t dims = 2;
  bool json = false;
  std::string rep, f, g;
  std::size_t n = 1;
  std::string ground = "proj_all";
  std::string side = "both";
  std::string vertex;
  bool mutate = false;
};

// A report is JSON first; `text` is its human-readable rendering.
struct Report {
  Json result = Json::object();
  std::vector<std::string> text;
  int code = kOk;

  void line(std::string s) { text.push_back(std::move(s)); }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Representation files may carry their own "quiver" and "base" entries.
std::optional<Json> load_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return io::read_file(path);
}

Quiver resolve_quiver(const Options& o, const std::vector<const Json*>& docs) {
  if (!o.quiver_path.empty() && !o.tmpl.empty())
    throw InputError("give either --quiver or --template, not both");
  if (!o.tmpl.empty()) return make_template(o.tmpl);
  if (!o.quiver_path.empty()) return io::quiver_from_json(io::read_file(o.quiver_path));
  for (const Json* d : docs)
    if (d && d->is_object() && d->contains("quiver")) return io::quiver_from_json(d->at("quiver"));
  throw InputError("no quiver: use --quiver FILE or --template NAME");
}

io::BaseSpec resolve_base(const Options& o, const std::vector<const Json*>& docs) {
  if (!o.base.empty()) return io::parse_base_spec(o.base);
  for (const Json* d : docs)
    if (d && d->is_object() && d->contains("base") && d->at("base").is_string())
      return io::parse_base_spec(d->at("base").get<std::string>());
  return io::parse_base_spec("fp:5");
}

Json verdict_json(const Verdict<bool>& v) {
  return {{"value", v.value}, {"status", v.status_string()}, {"budget_used", v.budget_used}};
}

Json verdict_json(const Verdict<Cardinal>& v) {
  return {{"value", v.value.to_string()}, {"status", v.status_string()},
          {"budget_used", v.budget_used}};
}

std::vector<Vertex> invariant_vertices(const Quiver& q, const std::string& requested) {
  if (!requested.empty()) {
    auto v = q.find_vertex(requested);
    if (!v) throw InputError("unknown vertex '" + requested + "'");
    return {*v};
  }
  if (q.is_explicit()) return q.vertices();
  if (!q.representatives().empty()) return q.representatives();
  if (auto v = q.vertex_at(0)) return {*v};
  return {};
}

Report cmd_classify(const Options& o, const Quiver& q) {
  Report r;
  const auto c = classify(q, o.budget);
  Json flags = Json::object();
  for (const auto& [name, v] : c.flags) {
    flags[name] = verdict_json(v);
    r.line(name + ": " + (v.value ? "true" : "false") + " (" + v.status_string() + ")");
  }
  Json invs = Json::object();
  const auto vs = invariant_vertices(q, o.vertex);
  for (Invariant inv : all_invariants()) {
    const std::string name = to_string(inv);
    if (!is_vertex_indexed(inv)) {
      const auto v = invariant(q, inv, std::nullopt, o.budget);
      invs[name] = verdict_json(v);
      r.line(name + ": " + v.value.to_string() + " (" + v.status_string() + ")");
      continue;
    }
    Json per = Json::object();
    for (Vertex x : vs) {
      const auto v = invariant(q, inv, x, o.budget);
      per[q.vertex_name(x)] = verdict_json(v);
      r.line(name + "(" + q.vertex_name(x) + "): " + v.value.to_string() + " (" +
             v.status_string() + ")");
    }
    invs[name] = per;
  }
  r.result = {{"flags", flags}, {"invariants", invs}};
  return r;
}

template <class Ring>
Json orders_json(const Ring& ring, const Vec<Ring>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(ring.to_string(x));
  return a;
}

template <class Ring>
std::string orders_text(const Ring& ring, const Vec<Ring>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    const std::string t = ring.to_string(v[i]);
    s += t == "0" ? ring.name() : t;
  }
  return s + "]";
}

std::string vertex_list(const Quiver& q, const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ",") + q.vertex_name(v);
  return "{" + s + "}";
}

template <class B>
Representation<B> load_rep(const RepCategory<B>& cat, const std::optional<Json>& doc,
                           const char* flag) {
  if (!doc) throw InputError(std::string("missing ") + flag + " FILE");
  return io::rep_from_json(cat, *doc);
}

template <class B>
Report cmd_present(const Options& o, const RepCategory<B>& cat, const std::optional<Json>& doc) {
  Report r;
  const auto f = load_rep(cat, doc, "--rep");
  const Canonical<B> canon(cat);
  const Quiver& q = cat.quiver();
  if (o.side != "both" && o.side != "presentation" && o.side != "copresentation")
    throw InputError("--side must be presentation, copresentation or both");
  if (o.side != "copresentation") {
    const auto p = canon.presentation(f);
    const auto d = canon.splitting_defects(p);
    Json j = io::to_json(cat, p);
    j["splitting_defects"] = Json::array();
    for (Vertex v : d) j["splitting_defects"].push_back(q.vertex_name(v));
    r.result["presentation"] = j;
    r.line("presentation: P1 = " + cat.describe(p.p1) + ", P0 = " + cat.describe(p.p0));
    r.line("  splits vertex-wise: " + std::string(d.empty() ? "yes" : "no, at " + vertex_list(q, d)));
    if (!d.empty()) r.code = kViolation;
  }
  if (o.side != "presentation") {
    const auto p = canon.copresentation(f);
    const auto d = canon.splitting_defects(p);
    Json j = io::to_json(cat, p);
    j["splitting_defects"] = Json::array();
    for (Vertex v : d) j["splitting_defects"].push_back(q.vertex_name(v));
    r.result["copresentation"] = j;
    r.line("copresentation: I0 = " + cat.describe(p.i0) + ", I1 = " + cat.describe(p.i1));
    r.line("  splits vertex-wise: " + std::string(d.empty() ? "yes" : "no, at " + vertex_list(q, d)));
    if (!d.empty()) r.code = kViolation;
  }
  return r;
}

template <class B>
Report cmd_ext(const Options& o, const RepCategory<B>& cat, const std::optional<Json>& fd,
               const std::optional<Json>& gd) {
  Report r;
  const auto f = load_rep(cat, fd, "--F");
  const auto g = load_rep(cat, gd, "--G");
  const auto e = ext(cat, f, g, o.n);
  r.result = {{"degree", o.n}, {"generators", e.size()}, {"orders", orders_json(cat.ring(), e.orders())}};
  r.line("Ext^" + std::to_string(o.n) + "(F, G): dim = " + std::to_string(e.size()));
  r.line("orders = " + orders_text(cat.ring(), e.orders()));
  return r;
}

template <class B>
Report cmd_pd(const RepCategory<B>& cat, const std::optional<Json>& doc) {
  Report r;
  const auto pd = pd_rep(cat, load_rep(cat, doc, "--rep"));
  r.result = {{"pd", pd.str()}, {"exact", pd.exact}};
  r.line("pd = " + pd.str());
  return r;
}

template <class B>
Report cmd_gldim(const Options& o, const RepCategory<B>& cat) {
  Report r;
  if (!cat.quiver().is_finite()) throw InputError("gldim needs a finite quiver");
  const auto g = gldim_experiment(cat, o.samples, o.dims, o.seed);
  r.result = {{"bound", g.bound},
              {"max_pd_observed", g.max_pd_observed},
              {"all_samples_exact", g.all_samples_exact},
              {"samples", g.samples},
              {"witness", {{"construction", g.witness_construction},
                           {"pd", g.witness_pd},
                           {"certified_nonzero_degree", g.certified_nonzero_degree},
                           {"certified", g.witness_certified}}},
              {"ok", g.ok()}};
  r.line("bound " + std::to_string(g.bound) + ", witness pd " + g.witness_pd + ", max observed " +
         std::to_string(g.max_pd_observed));
  r.line("witness: " + g.witness_construction + " (" +
         (g.witness_certified ? "certified" : "NOT certified") + ")");
  if (!g.ok()) r.code = kViolation;
  return r;
}

template <class B>
GroundPair<B> parse_ground(const std::string& s, const B& base) {
  if (s == "proj_all" || s == "ProjAll") return GroundPair<B>::proj_all(base);
  if (s == "all_inj" || s == "AllInj") return GroundPair<B>::all_inj(base);
  throw InputError("--ground must be proj_all or all_inj");
}

Json identity_json(const IdentityReport& rep) {
  Json ids = Json::array();
  for (const auto& t : rep.identities)
    ids.push_back({{"name", t.name}, {"checked", t.checked}, {"violations", t.violations},
                   {"witnesses", t.witnesses}});
  return {{"ground", rep.ground}, {"samples", rep.samples}, {"mutated", rep.mutated},
          {"identities", ids}, {"violations", rep.violations()}};
}

template <class B>
Json membership_json(const Quiver& q, const Membership& m) {
  Json checks = Json::array();
  for (const auto& c : m.checks)
    checks.push_back({{"vertex", q.vertex_name(c.vertex)}, {"map_ok", c.map_ok},
                      {"in_class", c.in_class}, {"object", c.object}});
  return {{"holds", m.holds}, {"checks", checks}, {"skipped", m.skipped}};
}

template <class B>
Report cmd_cotorsion(const Options& o, const RepCategory<B>& cat, const std::optional<Json>& doc) {
  Report r;
  const auto ground = parse_ground(o.ground, cat.base());
  PairOptions po;
  po.samples = o.samples;
  po.seed = o.seed;
  po.dim_bound = o.dims;
  po.mutate = o.mutate;
  const Quiver& q = cat.quiver();
  IdentityReport rep;
  if (q.is_finite()) {
    rep = verify_pair_identities(cat, ground, po);
  } else if (q.declares(Declaration::FiniteConeShape)) {
    rep = relative_support_check(cat, po);
  } else {
    throw InputError("cotorsion needs a finite or finite-cone-shape quiver");
  }
  r.result = identity_json(rep);
  for (const auto& t : rep.identities)
    r.line(t.name + ": " + std::to_string(t.checked - t.violations) + "/" +
           std::to_string(t.checked) + (t.violations ? "  FAIL" : ""));
  if (doc) {
    const Functors<B> fn(cat);
    const auto f = io::rep_from_json(cat, *doc);
    const auto phi = phi_membership(fn, f, ground);
    const auto psi = psi_membership(fn, f, ground);
    r.result["rep"] = {{"phi", membership_json<B>(q, phi)}, {"psi", membership_json<B>(q, psi)}};
    r.line("F in Phi(A): " + std::string(phi.holds ? "yes" : "no, fails at " + vertex_list(q, phi.failures())));
    r.line("F in Psi(B): " + std::string(psi.holds ? "yes" : "no, fails at " + vertex_list(q, psi.failures())));
  }
  if (!rep.ok()) r.code = kViolation;
  return r;
}

template <class B>
Report cmd_approx(const Options& o, const RepCategory<B>& cat, const std::optional<Json>& doc) {
  Report r;
  const auto f = load_rep(cat, doc, "--rep");
  const Functors<B> fn(cat);
  const Quiver& q = cat.quiver();
  std::optional<ApproxSequence<B>> ap;
  if (o.side == "precover" || o.side == "both")
    ap = special_phi_precover(fn, f);
  else if (o.side == "preenvelope")
    ap = special_psi_preenvelope(fn, f);
  else
    throw InputError("--side must be precover or preenvelope");
  const auto& s = ap->seq;
  r.result = {{"kind", ap->precover ? "precover" : "preenvelope"},
              {"a", io::rep_to_json(cat, s.a)},
              {"b", io::rep_to_json(cat, s.b)},
              {"c", io::rep_to_json(cat, s.c)},
              {"mono", io::rep_morphism_to_json(cat, s.mono)},
              {"epi", io::rep_morphism_to_json(cat, s.epi)},
              {"certificate", membership_json<B>(q, ap->certificate)},
              {"split", ap->split}};
  r.line(std::string(ap->precover ? "special precover" : "special preenvelope") + ": 0 -> " +
         cat.describe(s.a) + " -> " + cat.describe(s.b) + " -> " + cat.describe(s.c) + " -> 0");
  r.line("middle term certificate: " + std::string(ap->certificate.holds ? "holds" : "FAILS"));
  r.line(std::string("split: ") + (ap->split ? "yes" : "no"));
  if (!ap->certificate.holds) r.code = kViolation;
  return r;
}

template <class B>
Report dispatch(const Options& o, const RepCategory<B>& cat, const std::optional<Json>& rep,
                const std::optional<Json>& fd, const std::optional<Json>& gd) {
  if (o.command == "present") return cmd_present(o, cat, rep);
  if (o.command == "ext") return cmd_ext(o, cat, fd, gd);
  if (o.command == "pd") return cmd_pd(cat, rep);
  if (o.command == "gldim") return cmd_gldim(o, cat);
  if constexpr (std::is_same_v<B, FpRep>) {
    throw InputError(o.command + " is not available over a nested base");
  } else {
    if (o.command == "cotorsion") return cmd_cotorsion(o, cat, rep);
    if (o.command == "approx") return cmd_approx(o, cat, rep);
  }
  throw InputError("unknown command " + o.command);
}

Report run(const Options& o, Json& context) {
  const auto rep = load_optional(o.rep);
  const auto fd = load_optional(o.f);
  const auto gd = load_optional(o.g);
  const std::vector<const Json*> docs = {rep ? &*rep : nullptr, fd ? &*fd : nullptr,
                                         gd ? &*gd : nullptr};
  const Quiver q = resolve_quiver(o, docs);
  context["quiver"] = q.name();
  if (o.command == "classify") return cmd_classify(o, q);
  const auto base = resolve_base(o, docs);
  context["base"] = base.str();
  const auto any = io::make_category(q, base, o.budget);
  return std::visit([&](const auto& cat) { return dispatch(o, cat, rep, fd, gd); }, any);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--quiver", o.quiver_path, "quiver JSON file");
  sub->add_option("--template", o.tmpl, "built-in quiver template");
  sub->add_option("--base", o.base, "q | fp:P | fgab | nested:<template>:fp:P");
  sub->add_option("--budget", o.budget, "exploration budget for infinite quivers");
  sub->add_option("--seed", o.seed, "sampling seed");
  sub->add_option("--samples", o.samples, "sample count");
  sub->add_option("--dims", o.dims, "bound on sampled vertex sizes");
  sub->add_flag("--json", o.json, "emit JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrep: representations of quivers in abelian categories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QREP_VERSION);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "quiver classification and cardinal invariants");
  classify_cmd->add_option("--vertex", o.vertex, "vertex for the vertex-indexed invariants");
  auto* present = app.add_subcommand("present", "canonical presentation and copresentation");
  present->add_option("--rep", o.rep, "representation JSON file");
  present->add_option("--side", o.side, "presentation | copresentation | both");
  auto* ext_cmd = app.add_subcommand("ext", "Ext^n(F, G)");
  ext_cmd->add_option("--F", o.f, "first representation")->required();
  ext_cmd->add_option("--G", o.g, "second representation")->required();
  ext_cmd->add_option("--n", o.n, "degree");
  auto* pd = app.add_subcommand("pd", "projective dimension");
  pd->add_option("--rep", o.rep, "representation JSON file")->required();
  auto* gldim = app.add_subcommand("gldim", "global dimension experiment");
  auto* cot = app.add_subcommand("cotorsion", "induced cotorsion pair checks");
  cot->add_option("--ground", o.ground, "proj_all | all_inj");
  cot->add_option("--rep", o.rep, "also test membership of this representation");
  cot->add_flag("--mutate", o.mutate, "negative control: perturb the orthogonality side");
  auto* approx = app.add_subcommand("approx", "special precover or preenvelope");
  approx->add_option("--rep", o.rep, "representation JSON file")->required();
  approx->add_option("--side", o.side, "precover | preenvelope");
  for (auto* s : {classify_cmd, present, ext_cmd, pd, gldim, cot, approx}) add_common(s, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  o.command = app.get_subcommands().front()->get_name();

  Json out = {{"tool", "qrep"},
              {"version", QREP_VERSION},
              {"command", o.command},
              {"seed", o.seed},
              {"budget", o.budget},
              {"samples", o.samples}};
  Report r;
  try {
    r = run(o, out);
  } catch (const io::ParseError& e) {
    std::cerr << "qrep: input error: " << e.what() << "\n";
    return kInput;
  } catch (const VerificationError& e) {
    std::cerr << "qrep: verification failed: " << e.what() << "\n";
    return kViolation;
  } catch (const InfiniteCone& e) {
    std::cerr << "qrep: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qrep: input error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "qrep: " << e.what() << "\n";
    return kInput;
  } catch (const ArithmeticError& e) {
    std::cerr << "qrep: input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "qrep: internal error: " << e.what() << "\n";
    return kInternal;
  }

  out["result"] = r.result;
  out["exit"] = r.code;
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "qrep " << QREP_VERSION << " " << o.command << "  quiver=" << out["quiver"].get<std::string>();
    if (out.contains("base")) std::cout << " base=" << out["base"].get<std::string>();
    std::cout << " seed=" << o.seed << " budget=" << o.budget << "\n";
    for (const auto& l : r.text) std::cout << l << "\n";
  }
  return r.code;
}
