#include "qrep/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qrep {

namespace {

// Paths counted by DP over a topological order given by vertex rank.
std::size_t count_paths(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::size_t> ending(n, 1);
  std::vector<std::vector<std::size_t>> in(n);
  for (const auto& [s, t] : arrows) in[t].push_back(s);
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s : in[v]) ending[v] += ending[s];
    total += ending[v];
  }
  return total;
}

}  // namespace

std::size_t total_path_count(const Quiver& q) {
  const auto& vs = q.vertices();
  std::map<Vertex, std::size_t> paths_from;
  std::map<Vertex, std::size_t> indeg;
  for (Vertex v : vs) indeg[v] = 0;
  for (const auto& a : q.arrows()) ++indeg[a.tgt];
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (Vertex v : vs)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (const auto& a : q.out_arrows(v))
      if (--indeg[a.tgt] == 0) ready.push_back(a.tgt);
  }
  if (order.size() != vs.size()) throw QuiverError("total_path_count: quiver has an oriented cycle");
  std::size_t total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t n = 1;
    for (const auto& a : q.out_arrows(*it)) n += paths_from[a.tgt];
    paths_from[*it] = n;
    total += n;
  }
  return total;
}

Quiver random_acyclic_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_arrows,
                             std::size_t path_cap) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  // Random topological order so sources are not always the small labels.
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{1});
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (n > 1) {
    const std::size_t want = std::uniform_int_distribution<std::size_t>(0, max_arrows)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t tries = 0; chosen.size() < want && tries < 8 * max_arrows + 8; ++tries) {
      std::size_t s = pick(rng), t = pick(rng);
      if (s == t) continue;
      if (s > t) std::swap(s, t);
      chosen.emplace_back(s, t);
      if (count_paths(n, chosen) > path_cap) chosen.pop_back();
    }
  }
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < chosen.size(); ++k)
    arrows.push_back(Arrow{static_cast<ArrowId>(k + 1), label[chosen[k].first], label[chosen[k].second]});
  std::vector<Vertex> vs(label.begin(), label.end());
  std::sort(vs.begin(), vs.end());
  return Quiver::make_explicit(vs, arrows, {Declaration::Acyclic}, "random");
}

}  // namespace qrep
