#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

using Vertex = std::int64_t;
using ArrowId = std::int64_t;

struct Arrow {
  ArrowId id = 0;
  Vertex src = 0;
  Vertex tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Structural facts a template author may assert about a generated quiver.
// They are trusted, and every verdict that relies on one says so.
enum class Declaration {
  Acyclic,
  RightSupportFinite,
  LeftSupportFinite,
  FiniteConeShape,
  IntervalFinite,
  NoSinks,    // every vertex has an outgoing arrow
  NoSources,  // every vertex has an incoming arrow
  Thin,       // at most one path between any two vertices
  Graded,     // the oracle's potential strictly increases along arrows
  Periodic,   // the oracle's representatives realize every local cone type
};

std::string to_string(Declaration d);
Declaration parse_declaration(const std::string& text);

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVertex : public QuiverError {
 public:
  explicit UnknownVertex(Vertex v);
  Vertex vertex() const { return v_; }

 private:
  Vertex v_;
};

// Arrows are listed in traversal order: arrows.front() is applied first.
struct Path {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<ArrowId> arrows;

  static Path trivial(Vertex v) { return Path{v, v, {}}; }
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

// Deterministic total order on paths: by endpoints, then lexicographic on
// the arrow sequence. The trivial path precedes every other path.
bool path_less(const Path& a, const Path& b);

// `first` followed by `second`; in composition notation this is second*first.
Path concat(const Path& first, const Path& second);

// Oracle behind a lazily generated quiver. Every call must be pure.
struct GeneratedOracle {
  std::function<bool(Vertex)> has_vertex;
  std::function<std::vector<Arrow>(Vertex)> out_arrows;
  std::function<std::vector<Arrow>(Vertex)> in_arrows;
  std::function<std::optional<Arrow>(ArrowId)> arrow;
  std::function<std::optional<Vertex>(std::size_t)> vertex_at;
  std::function<std::int64_t(Vertex)> potential;   // required with Graded
  std::vector<Vertex> representatives;             // required with Periodic
  std::function<std::string(Vertex)> vertex_name;
  std::function<std::string(ArrowId)> arrow_name;
};

class Quiver {
 public:
  Quiver();

  static Quiver make_explicit(std::vector<Vertex> vertices, std::vector<Arrow> arrows,
                              std::set<Declaration> declarations = {}, std::string name = "");
  static Quiver make_generated(std::string name, GeneratedOracle oracle,
                               std::set<Declaration> declarations);

  bool is_explicit() const;
  bool is_finite() const { return is_explicit(); }
  const std::string& name() const;

  bool has_vertex(Vertex v) const;
  void require_vertex(Vertex v) const;
  std::vector<Arrow> out_arrows(Vertex v) const;
  std::vector<Arrow> in_arrows(Vertex v) const;
  Arrow arrow(ArrowId id) const;
  bool has_arrow(ArrowId id) const;

  // Explicit quivers only.
  const std::vector<Vertex>& vertices() const;
  const std::vector<Arrow>& arrows() const;

  // Countable enumeration of the vertex set; nullopt past the end.
  std::optional<Vertex> vertex_at(std::size_t n) const;

  bool declares(Declaration d) const;
  const std::set<Declaration>& declarations() const;
  std::optional<std::int64_t> potential(Vertex v) const;
  // Periodic generated quivers: vertices covering every local cone type.
  const std::vector<Vertex>& representatives() const;

  std::string vertex_name(Vertex v) const;
  std::string arrow_name(ArrowId id) const;
  std::optional<Vertex> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

  // Subquiver on `vertices` with the given arrows (all arrows between the
  // vertices when `arrows` is empty). The result is explicit.
  Quiver subquiver(const std::set<Vertex>& vertices,
                   const std::optional<std::set<ArrowId>>& arrows = std::nullopt) const;
  Quiver full_subquiver(const std::set<Vertex>& vertices) const { return subquiver(vertices); }

  // Explicit quivers only: attach display names.
  Quiver with_names(const std::map<Vertex, std::string>& vertex_names,
                    const std::map<ArrowId, std::string>& arrow_names) const;

  // Same quiver with an extra loop at each listed vertex.
  Quiver with_loops(const std::vector<Vertex>& at) const;

  // Identity of the underlying data; copies compare equal.
  bool same_as(const Quiver& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Quiver(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Built-in templates: A_n, Atilde_n, A_inf_zigzag, D_inf, A_biinf_zigzag,
// A_biinf_line, ray_fwd, loop, grid(m,n). A suffix "+loop(v)" adds a loop.
Quiver make_template(const std::string& spec);
std::vector<std::string> template_names();

Quiver make_linear_a(int n);

}  // namespace qrep
