#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_set>
#include <vector>

#include "qrep/repcat.hpp"

// Brute-force oracles over F2 that do not touch the resolution machinery.

namespace qrep::testing {

// Every representation over F2 of an explicit quiver with total dimension at
// most max_total (all dimension vectors, all arrow matrices).
inline std::vector<Representation<FpMod>> all_reps_f2(const FpRep& cat, std::size_t max_total) {
  const auto& q = cat.quiver();
  const auto& vs = q.vertices();
  const auto& as = q.arrows();
  std::vector<Representation<FpMod>> out;
  std::vector<std::size_t> dims(vs.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
    if (k == vs.size()) {
      std::map<Vertex, std::size_t> dim;
      for (std::size_t t = 0; t < vs.size(); ++t) dim[vs[t]] = dims[t];
      std::size_t bits = 0;
      for (const auto& a : as) bits += dim[a.src] * dim[a.tgt];
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::map<Vertex, ModObj<PrimeField>> objs;
        for (Vertex v : vs) objs.emplace(v, cat.base().free(dim[v]));
        std::map<ArrowId, ModMor<PrimeField>> maps;
        std::size_t off = 0;
        for (const auto& a : as) {
          Mat<PrimeField> m(dim[a.tgt], dim[a.src], 0);
          for (std::size_t b = 0; b < m.data().size(); ++b) m.data()[b] = (mask >> (off + b)) & 1;
          off += m.data().size();
          maps.emplace(a.id, cat.base().from_matrix(objs.at(a.src), objs.at(a.tgt), m));
        }
        out.push_back(cat.make(objs, maps));
      }
      return;
    }
    for (std::size_t d = 0; d <= left; ++d) {
      dims[k] = d;
      rec(k + 1, left - d);
    }
  };
  rec(0, max_total);
  return out;
}

// log2 of the number of equivalence classes of extensions 0 -> G -> E -> F -> 0
// over F2. Middle terms are E_v = G_v ⊕ F_v with E_α = [[G_α, X_α], [0, F_α]];
// every extension has this shape, and X, X' give equivalent extensions iff
// X' − X = G_α h_s − h_t F_α for some h = (h_v : F_v -> G_v). The classes are
// the orbits of that translation action, counted as 2^N / |orbit|.
inline std::size_t brute_force_ext1_log2(const FpRep& cat, const Representation<FpMod>& f,
                                         const Representation<FpMod>& g) {
  const auto& q = cat.quiver();
  auto dim = [](const Representation<FpMod>& r, Vertex v) {
    auto it = r.objs.find(v);
    return it == r.objs.end() ? std::size_t{0} : it->second.size();
  };
  auto entry = [&](const Representation<FpMod>& r, ArrowId a, std::size_t i, std::size_t j) {
    auto it = r.arrows.find(a);
    return it == r.arrows.end() ? std::uint64_t{0} : it->second.m(i, j) & 1;
  };
  // Bit layout of X: arrow by arrow, row-major G_t x F_s blocks.
  std::map<ArrowId, std::size_t> xoff;
  std::size_t n_bits = 0;
  for (const auto& a : q.arrows()) {
    xoff[a.id] = n_bits;
    n_bits += dim(g, a.tgt) * dim(f, a.src);
  }
  // Orbit of 0: all δ(h); enumerate every h.
  std::vector<Vertex> hv;
  std::vector<std::size_t> hoff;
  std::size_t m_bits = 0;
  for (Vertex v : q.vertices()) {
    hv.push_back(v);
    hoff.push_back(m_bits);
    m_bits += dim(g, v) * dim(f, v);
  }
  auto hbit = [&](std::uint64_t h, std::size_t t, std::size_t i, std::size_t j) {
    return (h >> (hoff[t] + i * dim(f, hv[t]) + j)) & 1;
  };
  std::map<Vertex, std::size_t> vindex;
  for (std::size_t t = 0; t < hv.size(); ++t) vindex[hv[t]] = t;
  std::unordered_set<std::uint64_t> orbit;
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << m_bits); ++h) {
    std::uint64_t x = 0;
    for (const auto& a : q.arrows()) {
      const std::size_t s = vindex[a.src], t = vindex[a.tgt];
      const std::size_t gt = dim(g, a.tgt), gs = dim(g, a.src), fs = dim(f, a.src),
                        ft = dim(f, a.tgt);
      for (std::size_t i = 0; i < gt; ++i)
        for (std::size_t j = 0; j < fs; ++j) {
          std::uint64_t v = 0;
          for (std::size_t l = 0; l < gs; ++l) v ^= entry(g, a.id, i, l) & hbit(h, s, l, j);
          for (std::size_t l = 0; l < ft; ++l) v ^= hbit(h, t, i, l) & entry(f, a.id, l, j);
          x |= v << (xoff[a.id] + i * fs + j);
        }
    }
    orbit.insert(x);
  }
  std::size_t log_orbit = 0;
  while ((std::size_t{1} << log_orbit) < orbit.size()) ++log_orbit;
  return n_bits - log_orbit;
}

}  // namespace qrep::testing
