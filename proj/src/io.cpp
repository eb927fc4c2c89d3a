#include "qrep/io.hpp"

#include <fstream>
#include <sstream>

namespace qrep::io {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ": invalid JSON", line, col);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

namespace {

std::string key_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("expected a vertex or arrow name, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\" in " + j.dump());
  return j.at(name);
}

Vertex vertex_of(const Quiver& q, const Json& j) {
  const auto name = key_of(j);
  const auto v = q.find_vertex(name);
  if (!v) throw ParseError("unknown vertex " + name);
  return *v;
}

ArrowId arrow_of(const Quiver& q, const std::string& name) {
  const auto a = q.find_arrow(name);
  if (!a) throw ParseError("unknown arrow " + name);
  return *a;
}

template <class R>
typename R::Elem scalar_from_json(const R& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<long long>());
  if (j.is_string()) return ring.from_string(j.get<std::string>());
  throw ParseError("bad matrix entry " + j.dump());
}

template <class R>
Json scalar_to_json(const R& ring, const typename R::Elem& x) {
  if constexpr (std::is_same_v<R, PrimeField>) {
    (void)ring;
    return x;
  } else if constexpr (std::is_same_v<R, IntegerRing>) {
    if (x.fits_slong_p()) return x.get_si();
    return ring.to_string(x);
  } else {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return ring.to_string(x);
  }
}

template <class R>
Mat<R> matrix_from_json(const R& ring, std::size_t rows, std::size_t cols, const Json& j) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("matrix needs " + std::to_string(rows) + " rows: " + j.dump());
  Mat<R> m(rows, cols, ring.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("matrix row needs " + std::to_string(cols) + " entries: " + j[i].dump());
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(ring, j[i][k]);
  }
  return m;
}

template <class R>
Json matrix_to_json(const R& ring, const Mat<R>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(ring, m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t field_dim(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer()) {
    if (j.get<long long>() < 0) throw ParseError("negative dimension");
    return static_cast<std::size_t>(j.get<long long>());
  }
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError("bad dim " + d.dump());
  return d.get<std::size_t>();
}

void expect_base(const Json& j, const char* name) {
  if (j.is_object() && j.contains("base") && j.at("base") != name)
    throw ParseError(std::string("expected a ") + name + " object, got " + j.dump());
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  if (j.is_string()) return make_template(j.get<std::string>());
  if (j.contains("template")) return make_template(field(j, "template").get<std::string>());
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  // Integer entries are used as vertex ids; string entries get ids 1, 2, ...
  // in order and keep their names.
  std::vector<Vertex> ids;
  std::map<Vertex, std::string> vnames;
  std::map<std::string, Vertex> by_name;
  Vertex next = 1;
  for (const auto& v : vs) {
    Vertex id;
    if (v.is_number_integer()) {
      id = v.get<Vertex>();
    } else if (v.is_string()) {
      while (std::find(ids.begin(), ids.end(), next) != ids.end()) ++next;
      id = next++;
      vnames[id] = v.get<std::string>();
    } else {
      throw ParseError("bad vertex " + v.dump());
    }
    by_name[key_of(v)] = id;
    ids.push_back(id);
  }
  std::vector<Arrow> arrows;
  std::map<ArrowId, std::string> anames;
  ArrowId next_arrow = 1;
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      auto endpoint = [&](const char* name) {
        const auto k = key_of(field(a, name));
        auto it = by_name.find(k);
        if (it == by_name.end()) throw ParseError("arrow endpoint " + k + " is not a vertex");
        return it->second;
      };
      ArrowId id = next_arrow++;
      if (a.contains("id")) {
        const auto& n = a.at("id");
        if (n.is_number_integer()) {
          id = n.get<ArrowId>();
        } else {
          anames[id] = key_of(n);
        }
      }
      arrows.push_back(Arrow{id, endpoint("src"), endpoint("tgt")});
    }
  }
  std::set<Declaration> decls;
  if (j.contains("declarations"))
    for (const auto& d : j.at("declarations")) {
      try {
        decls.insert(parse_declaration(d.get<std::string>()));
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "json";
  Quiver q;
  try {
    q = Quiver::make_explicit(ids, arrows, decls, name);
  } catch (const QuiverError& e) {
    throw ParseError(e.what());
  }
  if (!vnames.empty() || !anames.empty()) q = q.with_names(vnames, anames);
  return q;
}

Json to_json(const Quiver& q) {
  if (!q.is_explicit()) return Json{{"template", q.name()}};
  Json out;
  out["name"] = q.name();
  out["vertices"] = Json::array();
  for (Vertex v : q.vertices()) out["vertices"].push_back(v);
  out["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    out["arrows"].push_back({{"id", q.arrow_name(a.id)}, {"src", a.src}, {"tgt", a.tgt}});
  out["declarations"] = Json::array();
  for (auto d : q.declarations()) out["declarations"].push_back(to_string(d));
  return out;
}

std::string BaseSpec::str() const {
  switch (kind) {
    case Kind::Q:
      return "q";
    case Kind::Fp:
      return "fp:" + std::to_string(p);
    case Kind::FgAb:
      return "fgab";
    case Kind::Nested:
      break;
  }
  return "nested:" + inner_template + ":fp:" + std::to_string(p);
}

BaseSpec parse_base_spec(const std::string& text) {
  BaseSpec b;
  auto prime = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const auto p = std::stoull(s, &used);
      if (used == s.size()) {
        PrimeField{static_cast<std::uint64_t>(p)};
        return static_cast<std::uint64_t>(p);
      }
    } catch (const std::exception&) {
    }
    throw ParseError("bad prime '" + s + "' in base spec");
  };
  if (text == "q") {
    b.kind = BaseSpec::Kind::Q;
  } else if (text == "fgab") {
    b.kind = BaseSpec::Kind::FgAb;
  } else if (text.rfind("fp:", 0) == 0) {
    b.kind = BaseSpec::Kind::Fp;
    b.p = prime(text.substr(3));
  } else if (text.rfind("nested:", 0) == 0) {
    const std::string rest = text.substr(7);
    const auto at = rest.find(":fp:");
    if (at == std::string::npos) throw ParseError("nested base must be nested:<template>:fp:P");
    b.kind = BaseSpec::Kind::Nested;
    b.inner_template = rest.substr(0, at);
    b.p = prime(rest.substr(at + 4));
  } else {
    throw ParseError("unknown base '" + text + "' (q | fp:P | fgab | nested:<template>:fp:P)");
  }
  return b;
}

AnyRepCategory make_category(const Quiver& q, const BaseSpec& base, std::uint64_t budget) {
  switch (base.kind) {
    case BaseSpec::Kind::Q:
      return QRep(q, QMod(RationalField()), budget);
    case BaseSpec::Kind::FgAb:
      return ZRep(q, ZMod(IntegerRing()), budget);
    case BaseSpec::Kind::Fp:
      return FpRep(q, FpMod(PrimeField(base.p)), budget);
    case BaseSpec::Kind::Nested:
      break;
  }
  return NestedFpRep(q, FpRep(make_template(base.inner_template), FpMod(PrimeField(base.p)), budget),
                     budget);
}

// ---------------------------------------------------------------------------
// Base objects

Json object_to_json(const FpMod& c, const FpMod::Obj& x) {
  return {{"base", "fp"}, {"p", c.ring().modulus()}, {"dim", x.size()}};
}
Json object_to_json(const QMod&, const QMod::Obj& x) { return {{"base", "q"}, {"dim", x.size()}}; }
Json object_to_json(const ZMod&, const ZMod::Obj& x) {
  // rank/torsion when the generators are already torsion-first.
  bool torsion_first = true, seen_free = false;
  Json torsion = Json::array();
  std::size_t rank = 0;
  Json orders = Json::array();
  for (const auto& o : x.orders) {
    orders.push_back(o.fits_slong_p() ? Json(o.get_si()) : Json(o.get_str()));
    if (o == 0) {
      ++rank;
      seen_free = true;
    } else {
      if (seen_free) torsion_first = false;
      torsion.push_back(orders.back());
    }
  }
  if (torsion_first) return {{"base", "fgab"}, {"rank", rank}, {"torsion", torsion}};
  return {{"base", "fgab"}, {"orders", orders}};
}
Json object_to_json(const FpRep& c, const FpRep::Obj& x) {
  return {{"base", "nested"},
          {"quiver", to_json(c.quiver())},
          {"inner", {{"base", "fp"}, {"p", c.base().ring().modulus()}}},
          {"rep", rep_to_json(c, x)}};
}

FpMod::Obj object_from_json(const FpMod& c, const Json& j) {
  expect_base(j, "fp");
  if (j.is_object() && j.contains("p") && j.at("p").get<std::uint64_t>() != c.ring().modulus())
    throw ParseError("object over the wrong prime: " + j.dump());
  return c.free(field_dim(j));
}
QMod::Obj object_from_json(const QMod& c, const Json& j) {
  expect_base(j, "q");
  return c.free(field_dim(j));
}
ZMod::Obj object_from_json(const ZMod& c, const Json& j) {
  if (j.is_number_integer()) return c.free(field_dim(j));
  expect_base(j, "fgab");
  Vec<IntegerRing> orders;
  if (j.contains("orders")) {
    for (const auto& o : j.at("orders")) orders.push_back(scalar_from_json(c.ring(), o));
  } else {
    if (j.contains("torsion"))
      for (const auto& o : j.at("torsion")) orders.push_back(scalar_from_json(c.ring(), o));
    const std::size_t rank = j.contains("rank") ? j.at("rank").get<std::size_t>() : 0;
    for (std::size_t k = 0; k < rank; ++k) orders.push_back(mpz_class(0));
  }
  return c.make(orders);
}
FpRep::Obj object_from_json(const FpRep& c, const Json& j) {
  expect_base(j, "nested");
  return rep_from_json(c, j.contains("rep") ? j.at("rep") : j);
}

template <class R>
Json morphism_to_json(const ModuleCategory<R>& c, const ModMor<R>& f) {
  return matrix_to_json(c.ring(), f.m);
}
Json morphism_to_json(const FpRep& c, const FpRep::Mor& f) {
  Json comps = Json::object();
  for (const auto& [v, m] : f.comps) comps[c.quiver().vertex_name(v)] = morphism_to_json(c.base(), m);
  return {{"components", comps}};
}

template <class R>
ModMor<R> morphism_from_json(const ModuleCategory<R>& c, const ModObj<R>& src,
                             const ModObj<R>& tgt, const Json& j) {
  auto m = matrix_from_json(c.ring(), tgt.size(), src.size(), j);
  auto f = c.from_matrix(src, tgt, std::move(m));
  if (!c.is_well_defined(f)) throw ParseError("matrix does not respect the torsion: " + j.dump());
  return f;
}
FpRep::Mor morphism_from_json(const FpRep& c, const FpRep::Obj& src, const FpRep::Obj& tgt,
                              const Json& j) {
  std::map<Vertex, FpMod::Mor> comps;
  const auto& cj = field(j, "components");
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    const Vertex v = vertex_of(c.quiver(), Json(it.key()));
    comps.emplace(v, morphism_from_json(c.base(), c.at(src, v), c.at(tgt, v), it.value()));
  }
  auto f = c.make_morphism(src, tgt, std::move(comps));
  if (!c.is_natural(f)) throw ParseError("morphism is not natural: " + j.dump());
  return f;
}

// ---------------------------------------------------------------------------
// Representations

template <class B>
Json rep_to_json(const RepCategory<B>& cat, const Representation<B>& f) {
  const Quiver& q = cat.quiver();
  Json support = Json::object(), arrows = Json::object();
  for (const auto& [v, o] : f.objs) support[q.vertex_name(v)] = object_to_json(cat.base(), o);
  for (const auto& [a, m] : f.arrows) arrows[q.arrow_name(a)] = morphism_to_json(cat.base(), m);
  return {{"support", support}, {"arrows", arrows}};
}

template <class B>
Representation<B> rep_from_json(const RepCategory<B>& cat, const Json& j) {
  const Quiver& q = cat.quiver();
  std::map<Vertex, typename B::Obj> objs;
  if (j.contains("support")) {
    const auto& s = j.at("support");
    for (auto it = s.begin(); it != s.end(); ++it)
      objs[vertex_of(q, Json(it.key()))] = object_from_json(cat.base(), it.value());
  }
  std::map<ArrowId, typename B::Mor> arrows;
  if (j.contains("arrows")) {
    const auto& s = j.at("arrows");
    for (auto it = s.begin(); it != s.end(); ++it) {
      const ArrowId id = arrow_of(q, it.key());
      const Arrow a = q.arrow(id);
      const auto src = objs.count(a.src) ? objs.at(a.src) : cat.base().zero_object();
      const auto tgt = objs.count(a.tgt) ? objs.at(a.tgt) : cat.base().zero_object();
      arrows[id] = morphism_from_json(cat.base(), src, tgt, it.value());
    }
  }
  try {
    return cat.make(std::move(objs), std::move(arrows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

template <class B>
Json rep_morphism_to_json(const RepCategory<B>& cat, const RepMorphism<B>& f) {
  Json comps = Json::object();
  for (const auto& [v, m] : f.comps) comps[cat.quiver().vertex_name(v)] = morphism_to_json(cat.base(), m);
  return {{"components", comps}};
}

template <class B>
Json to_json(const RepCategory<B>& cat, const CanonicalPresentation<B>& p) {
  const Quiver& q = cat.quiver();
  Json vs = Json::array(), as = Json::array(), lambda = Json::object();
  for (Vertex v : p.vertices) vs.push_back(q.vertex_name(v));
  for (const auto& a : p.arrows) as.push_back(q.arrow_name(a.id));
  for (const auto& [v, m] : p.lambda) lambda[q.vertex_name(v)] = morphism_to_json(cat.base(), m);
  return {{"f", rep_to_json(cat, p.f)},   {"p0", rep_to_json(cat, p.p0)},
          {"p1", rep_to_json(cat, p.p1)}, {"p0_summands", vs},
          {"p1_summands", as},        {"gamma", rep_morphism_to_json(cat, p.gamma)},
          {"proj", rep_morphism_to_json(cat, p.proj)}, {"lambda", lambda}};
}

template <class B>
Json to_json(const RepCategory<B>& cat, const CanonicalCopresentation<B>& p) {
  const Quiver& q = cat.quiver();
  Json vs = Json::array(), as = Json::array(), sigma = Json::object();
  for (Vertex v : p.vertices) vs.push_back(q.vertex_name(v));
  for (const auto& a : p.arrows) as.push_back(q.arrow_name(a.id));
  for (const auto& [v, m] : p.sigma) sigma[q.vertex_name(v)] = morphism_to_json(cat.base(), m);
  return {{"f", rep_to_json(cat, p.f)},   {"i0", rep_to_json(cat, p.i0)},
          {"i1", rep_to_json(cat, p.i1)}, {"i0_factors", vs},
          {"i1_factors", as},         {"unit", rep_morphism_to_json(cat, p.unit)},
          {"gamma", rep_morphism_to_json(cat, p.gamma)}, {"sigma", sigma}};
}

#define QREP_INSTANTIATE_IO_MOD(R)                                                         \
  template Json morphism_to_json<R>(const ModuleCategory<R>&, const ModMor<R>&);                     \
  template ModMor<R> morphism_from_json<R>(const ModuleCategory<R>&, const ModObj<R>&,      \
                                           const ModObj<R>&, const Json&);

#define QREP_INSTANTIATE_IO_REP(B)                                                         \
  template Json rep_to_json<B>(const RepCategory<B>&, const Representation<B>&);                \
  template Representation<B> rep_from_json<B>(const RepCategory<B>&, const Json&);          \
  template Json rep_morphism_to_json<B>(const RepCategory<B>&, const RepMorphism<B>&);                   \
  template Json to_json<B>(const RepCategory<B>&, const CanonicalPresentation<B>&);         \
  template Json to_json<B>(const RepCategory<B>&, const CanonicalCopresentation<B>&);

QREP_INSTANTIATE_IO_MOD(PrimeField)
QREP_INSTANTIATE_IO_MOD(RationalField)
QREP_INSTANTIATE_IO_MOD(IntegerRing)
QREP_INSTANTIATE_IO_REP(FpMod)
QREP_INSTANTIATE_IO_REP(QMod)
QREP_INSTANTIATE_IO_REP(ZMod)
QREP_INSTANTIATE_IO_REP(FpRep)

}  // namespace qrep::io
