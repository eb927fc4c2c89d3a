#include "qrep/quiver.hpp"

#include <algorithm>
#include <unordered_map>

namespace qrep {

namespace {

const std::pair<Declaration, const char*> kDeclarationNames[] = {
    {Declaration::Acyclic, "acyclic"},
    {Declaration::RightSupportFinite, "right_support_finite"},
    {Declaration::LeftSupportFinite, "left_support_finite"},
    {Declaration::FiniteConeShape, "finite_cone_shape"},
    {Declaration::IntervalFinite, "interval_finite"},
    {Declaration::NoSinks, "no_sinks"},
    {Declaration::NoSources, "no_sources"},
    {Declaration::Thin, "thin"},
    {Declaration::Graded, "graded"},
    {Declaration::Periodic, "periodic"},
};

}  // namespace

std::string to_string(Declaration d) {
  for (const auto& [decl, name] : kDeclarationNames)
    if (decl == d) return name;
  return "unknown";
}

Declaration parse_declaration(const std::string& text) {
  std::string key = text;
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto& [decl, name] : kDeclarationNames)
    if (key == name) return decl;
  throw QuiverError("unknown declaration: " + text);
}

UnknownVertex::UnknownVertex(Vertex v)
    : QuiverError("unknown vertex " + std::to_string(v)), v_(v) {}

bool path_less(const Path& a, const Path& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return std::lexicographical_compare(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                                      b.arrows.end());
}

Path concat(const Path& first, const Path& second) {
  if (first.target != second.source)
    throw QuiverError("paths do not compose: " + std::to_string(first.target) + " vs " +
                      std::to_string(second.source));
  Path out{first.source, second.target, first.arrows};
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

struct Quiver::Impl {
  std::string name;
  bool is_explicit = true;
  std::set<Declaration> declarations;

  // explicit data
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  std::unordered_map<Vertex, std::vector<Arrow>> out;
  std::unordered_map<Vertex, std::vector<Arrow>> in;
  std::unordered_map<ArrowId, Arrow> by_id;
  std::map<Vertex, std::string> vertex_names;
  std::map<ArrowId, std::string> arrow_names;

  GeneratedOracle oracle;
};

Quiver::Quiver() : Quiver(make_explicit({}, {})) {}

Quiver Quiver::make_explicit(std::vector<Vertex> vertices, std::vector<Arrow> arrows,
                             std::set<Declaration> declarations, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->name = name.empty() ? "explicit" : std::move(name);
  impl->declarations = std::move(declarations);
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw QuiverError("duplicate vertex");
  for (Vertex v : vertices) {
    impl->out[v];
    impl->in[v];
  }
  for (const auto& a : arrows) {
    if (!impl->out.count(a.src) || !impl->out.count(a.tgt))
      throw QuiverError("arrow " + std::to_string(a.id) + " has an endpoint outside the quiver");
    if (!impl->by_id.emplace(a.id, a).second)
      throw QuiverError("duplicate arrow id " + std::to_string(a.id));
    impl->out[a.src].push_back(a);
    impl->in[a.tgt].push_back(a);
  }
  auto by_id = [](const Arrow& x, const Arrow& y) { return x.id < y.id; };
  for (auto& [v, list] : impl->out) std::sort(list.begin(), list.end(), by_id);
  for (auto& [v, list] : impl->in) std::sort(list.begin(), list.end(), by_id);
  std::sort(arrows.begin(), arrows.end(), by_id);
  impl->vertices = std::move(vertices);
  impl->arrows = std::move(arrows);
  return Quiver(std::move(impl));
}

Quiver Quiver::make_generated(std::string name, GeneratedOracle oracle,
                              std::set<Declaration> declarations) {
  if (!oracle.has_vertex || !oracle.out_arrows || !oracle.in_arrows || !oracle.arrow)
    throw QuiverError("generated quiver needs vertex, arrow and neighbourhood oracles");
  if (declarations.count(Declaration::Graded) && !oracle.potential)
    throw QuiverError("graded declaration without a potential");
  if (declarations.count(Declaration::Periodic) && oracle.representatives.empty())
    throw QuiverError("periodic declaration without representatives");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->is_explicit = false;
  impl->declarations = std::move(declarations);
  impl->oracle = std::move(oracle);
  return Quiver(std::move(impl));
}

bool Quiver::is_explicit() const { return impl_->is_explicit; }
const std::string& Quiver::name() const { return impl_->name; }

bool Quiver::has_vertex(Vertex v) const {
  if (impl_->is_explicit) return impl_->out.count(v) != 0;
  return impl_->oracle.has_vertex(v);
}

void Quiver::require_vertex(Vertex v) const {
  if (!has_vertex(v)) throw UnknownVertex(v);
}

std::vector<Arrow> Quiver::out_arrows(Vertex v) const {
  if (impl_->is_explicit) {
    auto it = impl_->out.find(v);
    if (it == impl_->out.end()) throw UnknownVertex(v);
    return it->second;
  }
  require_vertex(v);
  auto list = impl_->oracle.out_arrows(v);
  std::sort(list.begin(), list.end(), [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  return list;
}

std::vector<Arrow> Quiver::in_arrows(Vertex v) const {
  if (impl_->is_explicit) {
    auto it = impl_->in.find(v);
    if (it == impl_->in.end()) throw UnknownVertex(v);
    return it->second;
  }
  require_vertex(v);
  auto list = impl_->oracle.in_arrows(v);
  std::sort(list.begin(), list.end(), [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  return list;
}

Arrow Quiver::arrow(ArrowId id) const {
  if (impl_->is_explicit) {
    auto it = impl_->by_id.find(id);
    if (it == impl_->by_id.end()) throw QuiverError("unknown arrow " + std::to_string(id));
    return it->second;
  }
  auto a = impl_->oracle.arrow(id);
  if (!a) throw QuiverError("unknown arrow " + std::to_string(id));
  return *a;
}

bool Quiver::has_arrow(ArrowId id) const {
  if (impl_->is_explicit) return impl_->by_id.count(id) != 0;
  return impl_->oracle.arrow(id).has_value();
}

const std::vector<Vertex>& Quiver::vertices() const {
  if (!impl_->is_explicit) throw QuiverError("vertex list of a generated quiver is infinite");
  return impl_->vertices;
}

const std::vector<Arrow>& Quiver::arrows() const {
  if (!impl_->is_explicit) throw QuiverError("arrow list of a generated quiver is infinite");
  return impl_->arrows;
}

std::optional<Vertex> Quiver::vertex_at(std::size_t n) const {
  if (impl_->is_explicit) {
    if (n >= impl_->vertices.size()) return std::nullopt;
    return impl_->vertices[n];
  }
  if (!impl_->oracle.vertex_at) return std::nullopt;
  return impl_->oracle.vertex_at(n);
}

bool Quiver::declares(Declaration d) const { return impl_->declarations.count(d) != 0; }
const std::set<Declaration>& Quiver::declarations() const { return impl_->declarations; }

std::optional<std::int64_t> Quiver::potential(Vertex v) const {
  if (!declares(Declaration::Graded)) return std::nullopt;
  return impl_->oracle.potential(v);
}

const std::vector<Vertex>& Quiver::representatives() const {
  if (impl_->is_explicit) return impl_->vertices;
  return impl_->oracle.representatives;
}

std::string Quiver::vertex_name(Vertex v) const {
  if (impl_->is_explicit) {
    auto it = impl_->vertex_names.find(v);
    if (it != impl_->vertex_names.end()) return it->second;
  } else if (impl_->oracle.vertex_name) {
    return impl_->oracle.vertex_name(v);
  }
  return std::to_string(v);
}

std::string Quiver::arrow_name(ArrowId id) const {
  if (impl_->is_explicit) {
    auto it = impl_->arrow_names.find(id);
    if (it != impl_->arrow_names.end()) return it->second;
  } else if (impl_->oracle.arrow_name) {
    return impl_->oracle.arrow_name(id);
  }
  return "a" + std::to_string(id);
}

std::optional<Vertex> Quiver::find_vertex(const std::string& name) const {
  if (impl_->is_explicit) {
    for (const auto& [v, n] : impl_->vertex_names)
      if (n == name) return v;
  }
  try {
    std::size_t used = 0;
    const Vertex v = std::stoll(name, &used);
    if (used == name.size() && has_vertex(v)) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
  if (impl_->is_explicit) {
    for (const auto& [id, n] : impl_->arrow_names)
      if (n == name) return id;
    for (const auto& a : impl_->arrows)
      if (arrow_name(a.id) == name) return a.id;
  }
  std::string digits = name;
  if (!digits.empty() && digits[0] == 'a') digits = digits.substr(1);
  try {
    std::size_t used = 0;
    const ArrowId id = std::stoll(digits, &used);
    if (used == digits.size() && has_arrow(id)) return id;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

Quiver Quiver::subquiver(const std::set<Vertex>& vertices,
                         const std::optional<std::set<ArrowId>>& arrows) const {
  std::vector<Arrow> kept;
  for (Vertex v : vertices) {
    for (const auto& a : out_arrows(v)) {
      if (!vertices.count(a.tgt)) continue;
      if (arrows && !arrows->count(a.id)) continue;
      kept.push_back(a);
    }
  }
  if (arrows) {
    for (ArrowId id : *arrows) {
      const Arrow a = arrow(id);
      if (!vertices.count(a.src) || !vertices.count(a.tgt))
        throw QuiverError("subquiver arrow " + std::to_string(id) + " leaves the vertex set");
    }
  }
  Quiver sub = make_explicit(std::vector<Vertex>(vertices.begin(), vertices.end()), kept, {},
                             name() + "|sub");
  auto impl = std::const_pointer_cast<Impl>(sub.impl_);
  for (Vertex v : vertices) impl->vertex_names[v] = vertex_name(v);
  for (const auto& a : kept) impl->arrow_names[a.id] = arrow_name(a.id);
  return sub;
}

Quiver Quiver::with_names(const std::map<Vertex, std::string>& vertex_names,
                          const std::map<ArrowId, std::string>& arrow_names) const {
  if (!impl_->is_explicit) throw QuiverError("names can only be attached to explicit quivers");
  auto impl = std::make_shared<Impl>(*impl_);
  for (const auto& [v, n] : vertex_names) impl->vertex_names[v] = n;
  for (const auto& [id, n] : arrow_names) impl->arrow_names[id] = n;
  return Quiver(std::move(impl));
}

Quiver Quiver::with_loops(const std::vector<Vertex>& at) const {
  for (Vertex v : at) require_vertex(v);
  if (impl_->is_explicit) {
    auto arrows = impl_->arrows;
    ArrowId next = 0;
    for (const auto& a : arrows) next = std::max(next, a.id + 1);
    for (Vertex v : at) arrows.push_back(Arrow{next++, v, v});
    std::set<Declaration> decls;
    Quiver q = make_explicit(impl_->vertices, arrows, decls, name() + "+loops");
    auto impl = std::const_pointer_cast<Impl>(q.impl_);
    impl->vertex_names = impl_->vertex_names;
    impl->arrow_names = impl_->arrow_names;
    return q;
  }
  // Loop ids are negative so they never collide with template ids.
  auto base = *this;
  std::map<Vertex, ArrowId> loop_id;
  ArrowId next = -1000000;
  for (Vertex v : at) loop_id.emplace(v, next--);
  GeneratedOracle o = impl_->oracle;
  o.out_arrows = [base, loop_id](Vertex v) {
    auto list = base.out_arrows(v);
    if (auto it = loop_id.find(v); it != loop_id.end()) list.push_back(Arrow{it->second, v, v});
    return list;
  };
  o.in_arrows = [base, loop_id](Vertex v) {
    auto list = base.in_arrows(v);
    if (auto it = loop_id.find(v); it != loop_id.end()) list.push_back(Arrow{it->second, v, v});
    return list;
  };
  o.arrow = [base, loop_id](ArrowId id) -> std::optional<Arrow> {
    for (const auto& [v, lid] : loop_id)
      if (lid == id) return Arrow{id, v, v};
    if (base.has_arrow(id)) return base.arrow(id);
    return std::nullopt;
  };
  auto old_names = impl_->oracle.arrow_name;
  o.arrow_name = [old_names, loop_id](ArrowId id) {
    for (const auto& [v, lid] : loop_id)
      if (lid == id) return "loop" + std::to_string(v);
    return old_names ? old_names(id) : "a" + std::to_string(id);
  };
  for (Vertex v : at)
    if (std::find(o.representatives.begin(), o.representatives.end(), v) ==
        o.representatives.end())
      o.representatives.push_back(v);
  // Loops invalidate cone finiteness and periodicity; reachability survives.
  std::set<Declaration> decls;
  for (Declaration d : impl_->declarations) {
    switch (d) {
      case Declaration::RightSupportFinite:
      case Declaration::LeftSupportFinite:
      case Declaration::NoSinks:
      case Declaration::NoSources:
        decls.insert(d);
        break;
      default:
        break;
    }
  }
  return make_generated(name() + "+loops", std::move(o), std::move(decls));
}

Quiver make_linear_a(int n) {
  if (n < 1) throw QuiverError("A_n needs n >= 1");
  std::vector<Vertex> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  for (int i = 1; i < n; ++i) as.push_back(Arrow{i, i, i + 1});
  return Quiver::make_explicit(vs, as, {}, "A_" + std::to_string(n));
}

}  // namespace qrep
