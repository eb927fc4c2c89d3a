#include "qrep/quiver_analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace qrep {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Exact:
      return "Exact";
    case VerdictStatus::BudgetExhausted:
      return "BudgetExhausted";
    case VerdictStatus::UsedDeclaration:
      return "UsedDeclaration";
  }
  return "?";
}

namespace {

// Arrows restricted to a finite vertex region, with both adjacency directions.
struct Region {
  std::set<Vertex> vertices;
  std::map<Vertex, std::vector<Arrow>> out;
  std::map<Vertex, std::vector<Arrow>> in;

  void add_arrow(const Arrow& a) {
    if (!vertices.count(a.src) || !vertices.count(a.tgt)) return;
    auto& o = out[a.src];
    if (std::find(o.begin(), o.end(), a) != o.end()) return;
    o.push_back(a);
    in[a.tgt].push_back(a);
  }
  void sort_arrows() {
    auto by_id = [](const Arrow& x, const Arrow& y) { return x.id < y.id; };
    for (auto& [v, l] : out) std::sort(l.begin(), l.end(), by_id);
    for (auto& [v, l] : in) std::sort(l.begin(), l.end(), by_id);
  }
  const std::vector<Arrow>& outs(Vertex v) const {
    static const std::vector<Arrow> none;
    auto it = out.find(v);
    return it == out.end() ? none : it->second;
  }
  const std::vector<Arrow>& ins(Vertex v) const {
    static const std::vector<Arrow> none;
    auto it = in.find(v);
    return it == in.end() ? none : it->second;
  }
};

// BFS along out-arrows (forward) or in-arrows (backward). `keep` prunes.
// Returns nullopt when the budget runs out; `partial` then holds what was seen.
std::optional<Region> explore(const Quiver& q, const std::set<Vertex>& seeds, bool forward,
                              Budget& budget, const std::function<bool(Vertex)>& keep,
                              std::set<Vertex>* partial = nullptr) {
  Region r;
  std::vector<Arrow> seen_arrows;
  std::deque<Vertex> queue;
  for (Vertex v : seeds) {
    q.require_vertex(v);
    if (r.vertices.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (!budget.charge()) {
      if (partial) *partial = r.vertices;
      return std::nullopt;
    }
    const auto arrows = forward ? q.out_arrows(v) : q.in_arrows(v);
    for (const auto& a : arrows) {
      const Vertex w = forward ? a.tgt : a.src;
      if (keep && !keep(w)) continue;
      seen_arrows.push_back(a);
      if (r.vertices.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& a : seen_arrows) r.add_arrow(a);
  r.sort_arrows();
  if (partial) *partial = r.vertices;
  return r;
}

std::set<Vertex> reach(const Region& r, const std::set<Vertex>& seeds, bool forward) {
  std::set<Vertex> seen;
  std::vector<Vertex> stack;
  for (Vertex v : seeds)
    if (r.vertices.count(v) && seen.insert(v).second) stack.push_back(v);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& a : forward ? r.outs(v) : r.ins(v)) {
      const Vertex w = forward ? a.tgt : a.src;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

// A directed cycle inside the region restricted to `allowed`, if any.
std::optional<InfinitudeCertificate> find_cycle(const Region& r, const std::set<Vertex>& allowed) {
  enum Color { White, Grey, Black };
  std::map<Vertex, Color> color;
  std::vector<Vertex> trail;
  std::optional<InfinitudeCertificate> found;
  std::function<bool(Vertex)> dfs = [&](Vertex v) {
    color[v] = Grey;
    trail.push_back(v);
    for (const auto& a : r.outs(v)) {
      if (!allowed.count(a.tgt)) continue;
      const Color c = color.count(a.tgt) ? color[a.tgt] : White;
      if (c == Grey) {
        auto it = std::find(trail.begin(), trail.end(), a.tgt);
        found = InfinitudeCertificate{std::vector<Vertex>(it, trail.end())};
        return true;
      }
      if (c == White && dfs(a.tgt)) return true;
    }
    trail.pop_back();
    color[v] = Black;
    return false;
  };
  for (Vertex v : allowed) {
    if (color.count(v)) continue;
    if (dfs(v)) return found;
  }
  return std::nullopt;
}

// Depth-first listing of all paths from `from` inside `allowed` (which must
// carry no cycle). Backward mode walks in-arrows and reverses at the end.
bool list_paths(const Region& r, const std::set<Vertex>& allowed, Vertex from, bool forward,
                Budget& budget, const std::function<void(const Path&)>& emit) {
  std::vector<ArrowId> trail;
  bool ok = true;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (!ok) return;
    if (!budget.charge()) {
      ok = false;
      return;
    }
    Path p;
    if (forward) {
      p = Path{from, v, trail};
    } else {
      p = Path{v, from, std::vector<ArrowId>(trail.rbegin(), trail.rend())};
    }
    emit(p);
    for (const auto& a : forward ? r.outs(v) : r.ins(v)) {
      const Vertex w = forward ? a.tgt : a.src;
      if (!allowed.count(w)) continue;
      trail.push_back(a.id);
      dfs(w);
      trail.pop_back();
      if (!ok) return;
    }
  };
  dfs(from);
  return ok;
}

template <class V>
Verdict<V> exhausted(V value, const Budget& b) {
  Verdict<V> out;
  out.value = std::move(value);
  out.status = VerdictStatus::BudgetExhausted;
  out.budget_used = b.used();
  return out;
}

template <class V>
Verdict<V> exact(V value, const Budget& b) {
  Verdict<V> out;
  out.value = std::move(value);
  out.budget_used = b.used();
  return out;
}

template <class V>
Verdict<V> declared(V value, std::set<Declaration> used, std::uint64_t budget_used = 0) {
  Verdict<V> out;
  out.value = std::move(value);
  out.status = VerdictStatus::UsedDeclaration;
  out.used = std::move(used);
  out.budget_used = budget_used;
  return out;
}

// Folds statuses: exhaustion dominates declarations, which dominate exactness.
struct StatusFold {
  VerdictStatus status = VerdictStatus::Exact;
  std::set<Declaration> used;
  std::uint64_t budget_used = 0;

  template <class V>
  void add(const Verdict<V>& v) {
    budget_used += v.budget_used;
    used.insert(v.used.begin(), v.used.end());
    if (v.status == VerdictStatus::BudgetExhausted) status = VerdictStatus::BudgetExhausted;
    else if (v.status == VerdictStatus::UsedDeclaration && status == VerdictStatus::Exact)
      status = VerdictStatus::UsedDeclaration;
  }
  void use(Declaration d) {
    used.insert(d);
    if (status == VerdictStatus::Exact) status = VerdictStatus::UsedDeclaration;
  }
  template <class V>
  Verdict<V> make(V value) const {
    Verdict<V> out;
    out.value = std::move(value);
    out.status = status;
    out.used = used;
    out.budget_used = budget_used;
    return out;
  }
};

}  // namespace

Verdict<PathSet> enumerate_paths(const Quiver& q, Vertex i, Vertex j, std::uint64_t budget) {
  q.require_vertex(i);
  q.require_vertex(j);
  Budget b(budget);
  std::set<Declaration> used;
  std::optional<Region> region;
  if (q.is_explicit()) {
    region = explore(q, {i}, true, b, nullptr);
  } else if (q.declares(Declaration::Graded)) {
    const auto top = *q.potential(j);
    if (*q.potential(i) > top) return declared(PathSet{}, {Declaration::Graded}, b.used());
    region = explore(q, {i}, true, b, [&](Vertex w) { return *q.potential(w) <= top; });
    used.insert(Declaration::Graded);
  } else {
    Budget half(budget / 2);
    region = explore(q, {i}, true, half, nullptr);
    std::uint64_t spent = half.used();
    if (!region) {
      Budget rest(budget - std::min(budget, spent));
      region = explore(q, {j}, false, rest, nullptr);
      spent += rest.used();
    }
    b.charge(spent);
  }
  if (!region) return exhausted(PathSet{}, b);

  const auto from_i = reach(*region, {i}, true);
  const auto to_j = reach(*region, {j}, false);
  std::set<Vertex> route;
  std::set_intersection(from_i.begin(), from_i.end(), to_j.begin(), to_j.end(),
                        std::inserter(route, route.end()));
  PathSet result;
  auto finish = [&](PathSet value) {
    return used.empty() ? exact(std::move(value), b) : declared(std::move(value), used, b.used());
  };
  if (!route.count(i)) return finish(std::move(result));
  if (auto cyc = find_cycle(*region, route)) {
    result.infinite = std::move(cyc);
    return finish(std::move(result));
  }
  const bool ok = list_paths(*region, route, i, true, b, [&](const Path& p) {
    if (p.target == j) result.paths.push_back(p);
  });
  std::sort(result.paths.begin(), result.paths.end(), path_less);
  if (!ok) return exhausted(std::move(result), b);
  return finish(std::move(result));
}

std::size_t Cone::total() const {
  std::size_t n = 0;
  for (const auto& [v, ps] : paths) n += ps.size();
  return n;
}

const std::vector<Path>& Cone::at(Vertex v) const {
  static const std::vector<Path> none;
  auto it = paths.find(v);
  return it == paths.end() ? none : it->second;
}

namespace {

Verdict<Cone> cone(const Quiver& q, Vertex i, bool forward, std::uint64_t budget) {
  Budget b(budget);
  auto region = explore(q, {i}, forward, b, nullptr);
  if (!region) return exhausted(Cone{}, b);
  Cone c;
  if (auto cyc = find_cycle(*region, region->vertices)) {
    c.infinite = std::move(cyc);
    return exact(std::move(c), b);
  }
  const bool ok = list_paths(*region, region->vertices, i, forward, b, [&](const Path& p) {
    c.paths[forward ? p.target : p.source].push_back(p);
  });
  for (auto& [v, ps] : c.paths) std::sort(ps.begin(), ps.end(), path_less);
  if (!ok) return exhausted(std::move(c), b);
  return exact(std::move(c), b);
}

}  // namespace

Verdict<Cone> right_cone(const Quiver& q, Vertex i, std::uint64_t budget) {
  return cone(q, i, true, budget);
}

Verdict<Cone> left_cone(const Quiver& q, Vertex i, std::uint64_t budget) {
  return cone(q, i, false, budget);
}

Verdict<std::set<Vertex>> forward_closure(const Quiver& q, const std::set<Vertex>& from,
                                          std::uint64_t budget) {
  Budget b(budget);
  std::set<Vertex> partial;
  auto r = explore(q, from, true, b, nullptr, &partial);
  if (!r) return exhausted(std::move(partial), b);
  return exact(std::move(r->vertices), b);
}

Verdict<std::set<Vertex>> backward_closure(const Quiver& q, const std::set<Vertex>& to,
                                           std::uint64_t budget) {
  Budget b(budget);
  std::set<Vertex> partial;
  auto r = explore(q, to, false, b, nullptr, &partial);
  if (!r) return exhausted(std::move(partial), b);
  return exact(std::move(r->vertices), b);
}

// ---------------------------------------------------------------------------
// Cardinal invariants

namespace {

const std::pair<Invariant, const char*> kInvariantNames[] = {
    {Invariant::lmcn, "lmcn"},   {Invariant::rmcn, "rmcn"},   {Invariant::mcn, "mcn"},
    {Invariant::lccn_i, "lccn_i"}, {Invariant::rccn_i, "rccn_i"}, {Invariant::lccn, "lccn"},
    {Invariant::rccn, "rccn"},   {Invariant::ltccn, "ltccn"}, {Invariant::rtccn, "rtccn"},
    {Invariant::ccn, "ccn"},     {Invariant::tccn, "tccn"},   {Invariant::rscn, "rscn"},
    {Invariant::lscn, "lscn"},   {Invariant::alpha, "alpha"},
};

// |Q(i,-)| or |Q(-,i)|.
Verdict<Cardinal> thick_cone_size(const Quiver& q, Vertex i, bool forward, std::uint64_t budget) {
  auto c = cone(q, i, forward, budget);
  if (c.certified()) {
    Verdict<Cardinal> out;
    out.value = c.value.infinite ? Cardinal::aleph0() : Cardinal::finite(c.value.total());
    out.budget_used = c.budget_used;
    return out;
  }
  // No sinks (sources) means paths of every length leave (enter) i.
  const Declaration d = forward ? Declaration::NoSinks : Declaration::NoSources;
  if (q.declares(d)) return declared(Cardinal::aleph0(), {d}, c.budget_used);
  Verdict<Cardinal> out;
  out.value = Cardinal::finite(c.value.total());
  out.status = VerdictStatus::BudgetExhausted;
  out.budget_used = c.budget_used;
  return out;
}

// |t(Q(i,-))| or |s(Q(-,i))|.
Verdict<Cardinal> support_size(const Quiver& q, Vertex i, bool forward, std::uint64_t budget) {
  auto c = forward ? forward_closure(q, {i}, budget) : backward_closure(q, {i}, budget);
  if (c.certified()) {
    Verdict<Cardinal> out;
    out.value = Cardinal::finite(c.value.size());
    out.budget_used = c.budget_used;
    return out;
  }
  const Declaration d = forward ? Declaration::NoSinks : Declaration::NoSources;
  if (q.declares(d) && q.declares(Declaration::Acyclic))
    return declared(Cardinal::aleph0(), {d, Declaration::Acyclic}, c.budget_used);
  Verdict<Cardinal> out;
  out.value = Cardinal::finite(c.value.size());
  out.status = VerdictStatus::BudgetExhausted;
  out.budget_used = c.budget_used;
  return out;
}

// The family {|Q(i,j)|}_j (forward) or {|Q(j,i)|}_j, packed as a verdict.
Verdict<CardinalFamily> cone_family(const Quiver& q, Vertex i, bool forward,
                                    std::uint64_t budget) {
  StatusFold fold;
  CardinalFamily family;
  if (q.is_explicit()) {
    for (Vertex j : q.vertices()) {
      auto p = forward ? enumerate_paths(q, i, j, budget) : enumerate_paths(q, j, i, budget);
      fold.add(p);
      family.add(p.value.cardinality());
    }
    return fold.make(std::move(family));
  }
  auto c = cone(q, i, forward, budget);
  fold.budget_used += c.budget_used;
  if (c.certified()) {
    if (c.value.infinite) {
      // A vertex on a reachable cycle receives aleph0 paths.
      family.add(Cardinal::aleph0());
      return fold.make(std::move(family));
    }
    for (const auto& [v, ps] : c.value.paths) family.add(Cardinal::finite(ps.size()));
    family.add(Cardinal::finite(0));  // the remaining, infinitely many, vertices
    return fold.make(std::move(family));
  }
  if (q.declares(Declaration::Thin)) {
    fold.use(Declaration::Thin);
    family.add(Cardinal::finite(1));
    family.add(Cardinal::finite(0));
    return fold.make(std::move(family));
  }
  fold.status = VerdictStatus::BudgetExhausted;
  for (const auto& [v, ps] : c.value.paths) family.add(Cardinal::finite(ps.size()));
  return fold.make(std::move(family));
}

// Vertices over which a quiver-wide family is taken.
std::vector<Vertex> family_index(const Quiver& q, StatusFold& fold) {
  if (q.is_explicit()) return q.vertices();
  if (q.declares(Declaration::Periodic)) {
    fold.use(Declaration::Periodic);
    return q.representatives();
  }
  fold.status = VerdictStatus::BudgetExhausted;
  std::vector<Vertex> probe;
  for (std::size_t n = 0; n < 8; ++n)
    if (auto v = q.vertex_at(n)) probe.push_back(*v);
  return probe;
}

Verdict<Cardinal> size_over_vertices(
    const Quiver& q, const std::function<Verdict<Cardinal>(Vertex)>& per_vertex) {
  StatusFold fold;
  CardinalFamily family;
  for (Vertex v : family_index(q, fold)) {
    auto c = per_vertex(v);
    fold.add(c);
    family.add(c.value);
  }
  return fold.make(cardinal_size(family));
}

Verdict<Cardinal> sup_over_vertices(
    const Quiver& q, const std::function<Verdict<Cardinal>(Vertex)>& per_vertex) {
  StatusFold fold;
  CardinalFamily family;
  for (Vertex v : family_index(q, fold)) {
    auto c = per_vertex(v);
    fold.add(c);
    family.add(c.value);
  }
  return fold.make(cardinal_sup(family));
}

Verdict<Cardinal> cone_invariant_at(const Quiver& q, Vertex i, bool forward,
                                    std::uint64_t budget) {
  auto fam = cone_family(q, i, forward, budget);
  Verdict<Cardinal> out;
  out.value = cardinal_size(fam.value);
  out.status = fam.status;
  out.used = fam.used;
  out.budget_used = fam.budget_used;
  return out;
}

Verdict<Cardinal> max_of(const Verdict<Cardinal>& a, const Verdict<Cardinal>& b) {
  StatusFold fold;
  fold.add(a);
  fold.add(b);
  return fold.make(std::max(a.value, b.value));
}

}  // namespace

std::string to_string(Invariant inv) {
  for (const auto& [i, name] : kInvariantNames)
    if (i == inv) return name;
  return "?";
}

Invariant parse_invariant(const std::string& text) {
  for (const auto& [i, name] : kInvariantNames)
    if (text == name) return i;
  throw std::invalid_argument("unknown invariant: " + text);
}

std::vector<Invariant> all_invariants() {
  std::vector<Invariant> out;
  for (const auto& [i, name] : kInvariantNames) out.push_back(i);
  return out;
}

bool is_vertex_indexed(Invariant inv) {
  return inv == Invariant::lccn_i || inv == Invariant::rccn_i;
}

Verdict<Cardinal> invariant(const Quiver& q, Invariant which, std::optional<Vertex> vertex,
                            std::uint64_t budget) {
  switch (which) {
    case Invariant::lmcn:
      return size_over_vertices(q, [&](Vertex v) {
        return exact(Cardinal::finite(q.in_arrows(v).size()), Budget(0));
      });
    case Invariant::rmcn:
      return size_over_vertices(q, [&](Vertex v) {
        return exact(Cardinal::finite(q.out_arrows(v).size()), Budget(0));
      });
    case Invariant::mcn:
      return max_of(invariant(q, Invariant::lmcn, {}, budget),
                    invariant(q, Invariant::rmcn, {}, budget));
    case Invariant::lccn_i:
    case Invariant::rccn_i: {
      if (!vertex) throw std::invalid_argument(to_string(which) + " needs a vertex");
      q.require_vertex(*vertex);
      return cone_invariant_at(q, *vertex, which == Invariant::rccn_i, budget);
    }
    case Invariant::lccn:
      return sup_over_vertices(q, [&](Vertex v) { return cone_invariant_at(q, v, false, budget); });
    case Invariant::rccn:
      return sup_over_vertices(q, [&](Vertex v) { return cone_invariant_at(q, v, true, budget); });
    case Invariant::ltccn:
      return size_over_vertices(q, [&](Vertex v) { return thick_cone_size(q, v, false, budget); });
    case Invariant::rtccn:
      return size_over_vertices(q, [&](Vertex v) { return thick_cone_size(q, v, true, budget); });
    case Invariant::ccn:
      return max_of(invariant(q, Invariant::lccn, {}, budget),
                    invariant(q, Invariant::rccn, {}, budget));
    case Invariant::tccn:
      return max_of(invariant(q, Invariant::ltccn, {}, budget),
                    invariant(q, Invariant::rtccn, {}, budget));
    case Invariant::rscn:
      return size_over_vertices(q, [&](Vertex v) { return support_size(q, v, true, budget); });
    case Invariant::lscn:
      return size_over_vertices(q, [&](Vertex v) { return support_size(q, v, false, budget); });
    case Invariant::alpha: {
      StatusFold fold;
      CardinalFamily family;
      const auto index = family_index(q, fold);
      for (Vertex x : index) {
        std::map<Vertex, std::uint64_t> parallel;
        for (const auto& a : q.out_arrows(x)) ++parallel[a.tgt];
        for (const auto& [y, n] : parallel) family.add(Cardinal::finite(n));
        if (!q.is_explicit() || parallel.size() < q.vertices().size())
          family.add(Cardinal::finite(0));
      }
      return fold.make(cardinal_size(family));
    }
  }
  throw std::logic_error("unhandled invariant");
}

// ---------------------------------------------------------------------------
// Rooting filtrations, boundaries, classification

RootFiltration root_filtration(const Quiver& q, Side side, std::size_t max_steps) {
  RootFiltration f;
  f.side = side;
  if (!q.is_explicit()) return f;
  const auto& all = q.vertices();
  std::set<Vertex> current;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::set<Vertex> next = current;
    for (Vertex v : all) {
      const auto arrows = side == Side::Right ? q.out_arrows(v) : q.in_arrows(v);
      const bool settled = std::all_of(arrows.begin(), arrows.end(), [&](const Arrow& a) {
        return current.count(side == Side::Right ? a.tgt : a.src) != 0;
      });
      if (settled) next.insert(v);
    }
    const bool fixed = next == current;
    if (!fixed || f.strata.empty()) f.strata.push_back(next);
    current = std::move(next);
    if (fixed || current.size() == all.size()) {
      f.converged = true;
      break;
    }
  }
  f.covers_all = f.converged && current.size() == all.size();
  return f;
}

Verdict<std::set<Vertex>> boundary(const Quiver& q, const std::set<Vertex>& s, BoundarySide side,
                                   std::uint64_t budget) {
  auto closure = side == BoundarySide::Minus ? backward_closure(q, s, budget)
                                             : forward_closure(q, s, budget);
  for (Vertex v : s) closure.value.erase(v);
  return closure;
}

namespace {

Verdict<bool> truth(bool value) {
  Verdict<bool> v;
  v.value = value;
  return v;
}

Verdict<bool> unknown(std::uint64_t used = 0) {
  Verdict<bool> v;
  v.status = VerdictStatus::BudgetExhausted;
  v.budget_used = used;
  return v;
}

// Certified false wins; otherwise both must be certified true.
Verdict<bool> both(const Verdict<bool>& a, const Verdict<bool>& b) {
  if (a.certified() && !a.value) return a;
  if (b.certified() && !b.value) return b;
  StatusFold fold;
  fold.add(a);
  fold.add(b);
  return fold.make(a.value && b.value);
}

// Vertices to probe for counterexamples on generated quivers.
std::vector<Vertex> probes(const Quiver& q) {
  if (q.is_explicit()) return q.vertices();
  std::vector<Vertex> out = q.representatives();
  for (std::size_t n = 0; n < 16; ++n)
    if (auto v = q.vertex_at(n)) out.push_back(*v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool explicit_acyclic(const Quiver& q) {
  for (Vertex v : q.vertices()) {
    auto c = right_cone(q, v);
    if (c.value.infinite) return false;
  }
  return true;
}

// Searches the probe vertices for a reachable cycle.
bool probe_finds_cycle(const Quiver& q, std::uint64_t budget) {
  for (Vertex v : probes(q)) {
    auto c = right_cone(q, v, budget);
    if (c.certified() && c.value.infinite) return true;
  }
  return false;
}

Verdict<bool> support_finite_side(const Quiver& q, bool forward, std::uint64_t budget) {
  if (q.is_explicit()) return truth(true);
  const Declaration finite = forward ? Declaration::RightSupportFinite
                                     : Declaration::LeftSupportFinite;
  const Declaration endless = forward ? Declaration::NoSinks : Declaration::NoSources;
  if (q.declares(endless) && q.declares(Declaration::Acyclic))
    return declared(false, {endless, Declaration::Acyclic});
  if (q.declares(Declaration::Periodic)) {
    StatusFold fold;
    fold.use(Declaration::Periodic);
    for (Vertex v : q.representatives()) {
      auto c = forward ? forward_closure(q, {v}, budget) : backward_closure(q, {v}, budget);
      fold.add(c);
    }
    if (fold.status != VerdictStatus::BudgetExhausted) return fold.make(true);
  }
  if (q.declares(finite)) return declared(true, {finite});
  return unknown();
}

}  // namespace

Classification classify(const Quiver& q, std::uint64_t budget) {
  Classification c;
  auto& f = c.flags;
  // Oracles return finite neighbourhoods by contract.
  f["locally_finite"] = truth(true);

  if (q.is_explicit()) {
    const bool acyclic = explicit_acyclic(q);
    f["acyclic"] = truth(acyclic);
    f["interval_finite"] = truth(acyclic);
    f["finite_cone_shape"] = truth(acyclic);
    f["right_support_finite"] = truth(true);
    f["left_support_finite"] = truth(true);
    f["right_rooted"] = truth(root_filtration(q, Side::Right).covers_all);
    f["left_rooted"] = truth(root_filtration(q, Side::Left).covers_all);
  } else {
    const bool cycle = probe_finds_cycle(q, budget);
    // acyclic
    if (cycle) f["acyclic"] = truth(false);
    else if (q.declares(Declaration::Acyclic)) f["acyclic"] = declared(true, {Declaration::Acyclic});
    else if (q.declares(Declaration::Graded)) f["acyclic"] = declared(true, {Declaration::Graded});
    else f["acyclic"] = unknown();
    // interval finite
    if (cycle) f["interval_finite"] = truth(false);
    else if (q.declares(Declaration::IntervalFinite))
      f["interval_finite"] = declared(true, {Declaration::IntervalFinite});
    else if (q.declares(Declaration::FiniteConeShape))
      f["interval_finite"] = declared(true, {Declaration::FiniteConeShape});
    else f["interval_finite"] = unknown();
    // finite cone shape
    if (cycle) {
      f["finite_cone_shape"] = truth(false);
    } else if (q.declares(Declaration::NoSinks)) {
      f["finite_cone_shape"] = declared(false, {Declaration::NoSinks});
    } else if (q.declares(Declaration::NoSources)) {
      f["finite_cone_shape"] = declared(false, {Declaration::NoSources});
    } else {
      Verdict<bool> fcs = unknown();
      if (q.declares(Declaration::Periodic)) {
        StatusFold fold;
        fold.use(Declaration::Periodic);
        bool all_finite = true;
        for (Vertex v : q.representatives()) {
          auto r = right_cone(q, v, budget);
          auto l = left_cone(q, v, budget);
          fold.add(r);
          fold.add(l);
          all_finite = all_finite && !r.value.infinite && !l.value.infinite;
        }
        if (fold.status != VerdictStatus::BudgetExhausted) fcs = fold.make(all_finite);
      }
      if (!fcs.certified() && q.declares(Declaration::FiniteConeShape))
        fcs = declared(true, {Declaration::FiniteConeShape});
      f["finite_cone_shape"] = fcs;
    }
    f["right_support_finite"] = support_finite_side(q, true, budget);
    f["left_support_finite"] = support_finite_side(q, false, budget);
    // Rooting: an endless chain breaks it; acyclic plus finite reach forces it.
    auto rooted = [&](bool right) -> Verdict<bool> {
      const Declaration endless = right ? Declaration::NoSinks : Declaration::NoSources;
      if (cycle) return truth(false);
      if (q.declares(endless)) return declared(false, {endless});
      const auto& reach = f[right ? "right_support_finite" : "left_support_finite"];
      return both(f["acyclic"], reach);
    };
    f["right_rooted"] = rooted(true);
    f["left_rooted"] = rooted(false);
  }
  f["strongly_locally_finite"] = both(f["locally_finite"], f["interval_finite"]);
  f["support_finite"] = both(f["right_support_finite"], f["left_support_finite"]);
  return c;
}

SubquiverFamily subquiver_family(const Quiver& q, const std::set<Vertex>& s,
                                 std::uint64_t budget) {
  if (s.empty()) throw QuiverError("subquiver_family needs a nonempty vertex set");
  SubquiverFamily fam;
  fam.in_F = truth(true);
  auto side = [&](BoundarySide bs) -> Verdict<bool> {
    auto b = boundary(q, s, bs, budget);
    if (b.certified()) {
      Verdict<bool> v;
      v.value = true;  // an exact boundary of a finite set is finite
      v.budget_used = b.budget_used;
      return v;
    }
    const bool minus = bs == BoundarySide::Minus;
    const Declaration endless = minus ? Declaration::NoSources : Declaration::NoSinks;
    const Declaration finite = minus ? Declaration::LeftSupportFinite
                                     : Declaration::RightSupportFinite;
    if (q.declares(endless) && q.declares(Declaration::Acyclic))
      return declared(false, {endless, Declaration::Acyclic}, b.budget_used);
    if (q.declares(finite)) return declared(true, {finite}, b.budget_used);
    return unknown(b.budget_used);
  };
  fam.in_B = side(BoundarySide::Minus);
  fam.in_T = side(BoundarySide::Plus);
  fam.in_FB = both(fam.in_F, fam.in_B);
  fam.in_FT = both(fam.in_F, fam.in_T);
  fam.in_FBT = both(fam.in_FB, fam.in_T);
  return fam;
}

}  // namespace qrep
