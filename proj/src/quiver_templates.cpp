#include <algorithm>
#include <cctype>
#include <regex>

#include "qrep/quiver.hpp"

namespace qrep {

namespace {

bool is_even(Vertex v) { return v % 2 == 0; }

// Arrow k joins k and k+1 and leaves the even endpoint.
Arrow zigzag_edge(Vertex k) { return is_even(k) ? Arrow{k, k, k + 1} : Arrow{k, k + 1, k}; }

Quiver make_cycle(int n) {
  if (n < 1) throw QuiverError("Atilde_n needs n >= 1");
  std::vector<Vertex> vs;
  std::vector<Arrow> as;
  for (int i = 0; i <= n; ++i) vs.push_back(i);
  for (int i = 0; i < n; ++i) as.push_back(Arrow{i, i, i + 1});
  as.push_back(Arrow{n, n, 0});
  return Quiver::make_explicit(vs, as, {}, "Atilde_" + std::to_string(n));
}

Quiver make_loop() {
  return Quiver::make_explicit({1}, {Arrow{1, 1, 1}}, {}, "loop").with_names({}, {{1, "a"}});
}

Quiver make_grid(int m, int n) {
  if (m < 1 || n < 1) throw QuiverError("grid(m,n) needs positive sizes");
  std::vector<Vertex> vs;
  std::vector<Arrow> as;
  std::map<Vertex, std::string> names;
  auto id = [n](int r, int c) { return static_cast<Vertex>(r * n + c + 1); };
  ArrowId next = 1;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      vs.push_back(id(r, c));
      names[id(r, c)] = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (c + 1 < n) as.push_back(Arrow{next++, id(r, c), id(r, c + 1)});
      if (r + 1 < m) as.push_back(Arrow{next++, id(r, c), id(r + 1, c)});
    }
  }
  return Quiver::make_explicit(vs, as, {}, "grid(" + std::to_string(m) + "," +
                                               std::to_string(n) + ")")
      .with_names(names, {});
}

Vertex integer_at(std::size_t n) {
  // 0, 1, -1, 2, -2, ...
  const auto k = static_cast<Vertex>((n + 1) / 2);
  return n % 2 == 1 ? k : -k;
}

Quiver make_a_inf_zigzag() {
  GeneratedOracle o;
  o.has_vertex = [](Vertex v) { return v >= 1; };
  o.out_arrows = [](Vertex v) {
    std::vector<Arrow> out;
    if (!is_even(v)) return out;
    out.push_back(zigzag_edge(v - 1));
    out.push_back(zigzag_edge(v));
    return out;
  };
  o.in_arrows = [](Vertex v) {
    std::vector<Arrow> in;
    if (is_even(v)) return in;
    if (v > 1) in.push_back(zigzag_edge(v - 1));
    in.push_back(zigzag_edge(v));
    return in;
  };
  o.arrow = [](ArrowId id) -> std::optional<Arrow> {
    if (id < 1) return std::nullopt;
    return zigzag_edge(id);
  };
  o.vertex_at = [](std::size_t n) -> std::optional<Vertex> { return static_cast<Vertex>(n + 1); };
  o.representatives = {1, 2, 3};
  return Quiver::make_generated(
      "A_inf_zigzag", std::move(o),
      {Declaration::Acyclic, Declaration::FiniteConeShape, Declaration::RightSupportFinite,
       Declaration::LeftSupportFinite, Declaration::IntervalFinite, Declaration::Periodic});
}

Quiver make_d_inf() {
  // Arrow 0 is 2 -> 0; arrow k >= 1 joins k and k+1 as in the zig-zag.
  auto arrow_of = [](ArrowId id) -> std::optional<Arrow> {
    if (id < 0) return std::nullopt;
    if (id == 0) return Arrow{0, 2, 0};
    return zigzag_edge(id);
  };
  GeneratedOracle o;
  o.has_vertex = [](Vertex v) { return v >= 0; };
  o.out_arrows = [arrow_of](Vertex v) {
    std::vector<Arrow> out;
    if (v < 2 || !is_even(v)) return out;
    if (v == 2) out.push_back(*arrow_of(0));
    out.push_back(zigzag_edge(v - 1));
    out.push_back(zigzag_edge(v));
    return out;
  };
  o.in_arrows = [arrow_of](Vertex v) {
    std::vector<Arrow> in;
    if (v == 0) {
      in.push_back(*arrow_of(0));
      return in;
    }
    if (is_even(v)) return in;
    if (v > 1) in.push_back(zigzag_edge(v - 1));
    in.push_back(zigzag_edge(v));
    return in;
  };
  o.arrow = arrow_of;
  o.vertex_at = [](std::size_t n) -> std::optional<Vertex> { return static_cast<Vertex>(n); };
  o.representatives = {0, 1, 2, 3, 4};
  return Quiver::make_generated(
      "D_inf", std::move(o),
      {Declaration::Acyclic, Declaration::FiniteConeShape, Declaration::RightSupportFinite,
       Declaration::LeftSupportFinite, Declaration::IntervalFinite, Declaration::Periodic});
}

Quiver make_a_biinf_zigzag() {
  GeneratedOracle o;
  o.has_vertex = [](Vertex) { return true; };
  o.out_arrows = [](Vertex v) {
    std::vector<Arrow> out;
    if (is_even(v)) out = {zigzag_edge(v - 1), zigzag_edge(v)};
    return out;
  };
  o.in_arrows = [](Vertex v) {
    std::vector<Arrow> in;
    if (!is_even(v)) in = {zigzag_edge(v - 1), zigzag_edge(v)};
    return in;
  };
  o.arrow = [](ArrowId id) -> std::optional<Arrow> { return zigzag_edge(id); };
  o.vertex_at = [](std::size_t n) -> std::optional<Vertex> { return integer_at(n); };
  o.representatives = {0, 1};
  return Quiver::make_generated(
      "A_biinf_zigzag", std::move(o),
      {Declaration::Acyclic, Declaration::FiniteConeShape, Declaration::RightSupportFinite,
       Declaration::LeftSupportFinite, Declaration::IntervalFinite, Declaration::Periodic});
}

Quiver make_a_biinf_line() {
  GeneratedOracle o;
  o.has_vertex = [](Vertex) { return true; };
  o.out_arrows = [](Vertex v) { return std::vector<Arrow>{Arrow{v, v, v + 1}}; };
  o.in_arrows = [](Vertex v) { return std::vector<Arrow>{Arrow{v - 1, v - 1, v}}; };
  o.arrow = [](ArrowId id) -> std::optional<Arrow> { return Arrow{id, id, id + 1}; };
  o.vertex_at = [](std::size_t n) -> std::optional<Vertex> { return integer_at(n); };
  o.potential = [](Vertex v) { return static_cast<std::int64_t>(v); };
  o.representatives = {0};
  return Quiver::make_generated(
      "A_biinf_line", std::move(o),
      {Declaration::Acyclic, Declaration::Graded, Declaration::Thin, Declaration::NoSinks,
       Declaration::NoSources, Declaration::IntervalFinite, Declaration::Periodic});
}

Quiver make_ray_fwd() {
  GeneratedOracle o;
  o.has_vertex = [](Vertex v) { return v >= 1; };
  o.out_arrows = [](Vertex v) { return std::vector<Arrow>{Arrow{v, v, v + 1}}; };
  o.in_arrows = [](Vertex v) {
    std::vector<Arrow> in;
    if (v > 1) in.push_back(Arrow{v - 1, v - 1, v});
    return in;
  };
  o.arrow = [](ArrowId id) -> std::optional<Arrow> {
    if (id < 1) return std::nullopt;
    return Arrow{id, id, id + 1};
  };
  o.vertex_at = [](std::size_t n) -> std::optional<Vertex> { return static_cast<Vertex>(n + 1); };
  o.potential = [](Vertex v) { return static_cast<std::int64_t>(v); };
  return Quiver::make_generated(
      "ray_fwd", std::move(o),
      {Declaration::Acyclic, Declaration::Graded, Declaration::Thin, Declaration::NoSinks,
       Declaration::LeftSupportFinite, Declaration::IntervalFinite});
}

std::string trim(std::string s) {
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); }));
  s.erase(std::find_if(s.rbegin(), s.rend(), [](unsigned char c) { return !std::isspace(c); }).base(),
          s.end());
  return s;
}

Quiver make_base_template(const std::string& spec) {
  std::smatch m;
  static const std::regex a_n(R"(A_?(\d+))");
  static const std::regex atilde(R"(Atilde_?(\d+))");
  static const std::regex grid(R"(grid\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  if (std::regex_match(spec, m, a_n)) return make_linear_a(std::stoi(m[1]));
  if (std::regex_match(spec, m, atilde)) return make_cycle(std::stoi(m[1]));
  if (std::regex_match(spec, m, grid)) return make_grid(std::stoi(m[1]), std::stoi(m[2]));
  if (spec == "loop") return make_loop();
  if (spec == "A_inf_zigzag") return make_a_inf_zigzag();
  if (spec == "D_inf") return make_d_inf();
  if (spec == "A_biinf_zigzag") return make_a_biinf_zigzag();
  if (spec == "A_biinf_line") return make_a_biinf_line();
  if (spec == "ray_fwd") return make_ray_fwd();
  throw QuiverError("unknown quiver template: " + spec);
}

}  // namespace

Quiver make_template(const std::string& spec) {
  static const std::regex loop_suffix(R"(\+\s*loop\(\s*(-?\d+)\s*\))");
  std::vector<Vertex> loops;
  std::string base = spec;
  for (std::smatch m; std::regex_search(base, m, loop_suffix);) {
    loops.push_back(std::stoll(m[1]));
    base = m.prefix().str() + m.suffix().str();
  }
  Quiver q = make_base_template(trim(base));
  if (!loops.empty()) q = q.with_loops(loops);
  return q;
}

std::vector<std::string> template_names() {
  return {"A_n", "Atilde_n", "A_inf_zigzag", "D_inf", "A_biinf_zigzag",
          "A_biinf_line", "ray_fwd", "loop", "grid(m,n)"};
}

}  // namespace qrep
