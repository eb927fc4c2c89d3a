#include "qrep/basecat.hpp"

#include <sstream>

namespace qrep {

template <class R>
typename R::Elem random_scalar(const R& ring, Rng& rng) {
  if constexpr (std::is_same_v<R, PrimeField>) {
    return std::uniform_int_distribution<std::uint64_t>(0, ring.modulus() - 1)(rng);
  } else if constexpr (std::is_same_v<R, RationalField>) {
    const long num = std::uniform_int_distribution<long>(-3, 3)(rng);
    const long den = std::uniform_int_distribution<long>(1, 2)(rng);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } else {
    (void)ring;
    return mpz_class(std::uniform_int_distribution<long>(-3, 3)(rng));
  }
}

// ---------------------------------------------------------------------------
// Hom spaces

template <class R>
ModuleHom<R>::ModuleHom(const R& ring, ModObj<R> a, ModObj<R> b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  for (std::size_t i = 0; i < b_.size(); ++i)
    for (std::size_t j = 0; j < a_.size(); ++j) {
      if constexpr (R::is_field) {
        entries_.push_back({i, j, ring.one()});
        orders_.push_back(ring.zero());
      } else {
        const Elem& ao = a_.orders[j];
        const Elem& bo = b_.orders[i];
        // Hom(R/a, R) = 0 for a torsion source and a free target.
        if (sgn(ao) != 0 && sgn(bo) == 0) continue;
        const Elem g = ring.gcd(ao, bo);
        if (g == 1) continue;
        const Elem gen = sgn(bo) == 0 ? Elem(1) : ring.divexact(bo, g);
        entries_.push_back({i, j, gen});
        orders_.push_back(g);
      }
    }
}

template <class R>
ModMor<R> ModuleHom<R>::element(const Vec<R>& c) const {
  const R& ring = *ring_;
  if (c.size() != entries_.size()) throw std::invalid_argument("ModuleHom::element: size");
  ModMor<R> f{a_, b_, Mat<R>(b_.size(), a_.size(), ring.zero())};
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    const auto& e = entries_[t];
    f.m(e.row, e.col) = ring.reduce(ring.mul(c[t], e.gen), b_.orders[e.row]);
  }
  return f;
}

template <class R>
Vec<R> ModuleHom<R>::coordinates(const ModMor<R>& f) const {
  const R& ring = *ring_;
  Vec<R> c(entries_.size());
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    const auto& e = entries_[t];
    const Elem v = ring.reduce(f.m(e.row, e.col), b_.orders[e.row]);
    if constexpr (R::is_field) {
      c[t] = v;
    } else {
      c[t] = ring.reduce(ring.divexact(v, e.gen), orders_[t]);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Objects

template <class R>
std::string ModuleCategory<R>::name() const {
  if constexpr (std::is_same_v<R, PrimeField>) {
    return "fp:" + std::to_string(ring_.modulus());
  } else if constexpr (std::is_same_v<R, RationalField>) {
    return "q";
  } else {
    return "fgab";
  }
}

template <class R>
ModObj<R> ModuleCategory<R>::make(const Vec<R>& orders) const {
  Obj out;
  for (const auto& o : orders) {
    if constexpr (R::is_field) {
      if (ring_.is_zero(o)) out.orders.push_back(ring_.zero());
    } else {
      const Elem n = abs(o);
      if (n != 1) out.orders.push_back(n);
    }
  }
  return out;
}

template <class R>
ModObj<R> ModuleCategory<R>::make_fgab(std::size_t rank,
                                       const std::vector<long long>& torsion) const {
  if constexpr (R::is_field) {
    (void)torsion;
    return free(rank);
  } else {
    Vec<R> t;
    for (long long d : torsion) {
      if (d == 0) throw std::invalid_argument("torsion coefficient 0; use the free rank");
      t.push_back(Elem(static_cast<long>(d)));
    }
    Obj out;
    for (const auto& d : invariant_factors(Obj{t})) out.orders.push_back(d);
    for (std::size_t k = 0; k < rank; ++k) out.orders.push_back(Elem(0));
    return out;
  }
}

template <class R>
Vec<R> ModuleCategory<R>::invariant_factors(const Obj& a) const {
  if constexpr (R::is_field) {
    return a.orders;
  } else {
    const std::size_t n = a.size();
    Mat<R> d(n, n, Elem(0));
    for (std::size_t i = 0; i < n; ++i) d(i, i) = a.orders[i];
    const auto s = smith(ring_, d);
    Vec<R> out;
    for (std::size_t k = 0; k < n; ++k) {
      const Elem v = k < s.rank ? s.diag[k] : Elem(0);
      if (v != 1) out.push_back(v);
    }
    return out;
  }
}

template <class R>
std::size_t ModuleCategory<R>::free_rank(const Obj& a) const {
  std::size_t r = 0;
  for (const auto& o : a.orders)
    if (ring_.is_zero(o)) ++r;
  return r;
}

template <class R>
ModObj<R> ModuleCategory<R>::direct_sum(const std::vector<Obj>& parts) const {
  Obj out;
  for (const auto& p : parts) out.orders.insert(out.orders.end(), p.orders.begin(), p.orders.end());
  return out;
}

template <class R>
std::string ModuleCategory<R>::describe(const Obj& a) const {
  if (a.orders.empty()) return "0";
  if constexpr (std::is_same_v<R, PrimeField>) {
    return "F" + std::to_string(ring_.modulus()) + "^" + std::to_string(a.size());
  } else if constexpr (std::is_same_v<R, RationalField>) {
    return "Q^" + std::to_string(a.size());
  } else {
    std::ostringstream out;
    const auto inv = invariant_factors(a);
    bool first = true;
    std::size_t rank = 0;
    for (const auto& d : inv) {
      if (sgn(d) == 0) {
        ++rank;
        continue;
      }
      out << (first ? "" : "+") << "Z/" << d.get_str();
      first = false;
    }
    if (rank > 0) out << (first ? "" : "+") << "Z^" << rank;
    return out.str();
  }
}

// ---------------------------------------------------------------------------
// Morphisms

template <class R>
ModMor<R> ModuleCategory<R>::zero_mor(const Obj& a, const Obj& b) const {
  return Mor{a, b, Mat<R>(b.size(), a.size(), ring_.zero())};
}

template <class R>
ModMor<R> ModuleCategory<R>::identity(const Obj& a) const {
  return Mor{a, a, identity_matrix(ring_, a.size())};
}

template <class R>
ModMor<R> ModuleCategory<R>::from_matrix(const Obj& a, const Obj& b, Mat<R> m) const {
  if (m.rows() != b.size() || m.cols() != a.size())
    throw std::invalid_argument("from_matrix: shape mismatch");
  Mor f{a, b, reduce_rows(ring_, std::move(m), b.orders)};
  if (!is_well_defined(f)) throw std::invalid_argument("from_matrix: map ignores torsion");
  return f;
}

template <class R>
bool ModuleCategory<R>::is_well_defined(const Mor& f) const {
  if (f.m.rows() != f.tgt.size() || f.m.cols() != f.src.size()) return false;
  if constexpr (!R::is_field) {
    for (std::size_t j = 0; j < f.src.size(); ++j) {
      const Elem& o = f.src.orders[j];
      if (sgn(o) == 0) continue;
      for (std::size_t i = 0; i < f.tgt.size(); ++i)
        if (!ring_.is_zero(ring_.reduce(o * f.m(i, j), f.tgt.orders[i]))) return false;
    }
  }
  return true;
}

template <class R>
ModMor<R> ModuleCategory<R>::compose(const Mor& g, const Mor& f) const {
  if (!(f.tgt == g.src)) throw std::invalid_argument("compose: objects do not match");
  return Mor{f.src, g.tgt, reduce_rows(ring_, mat_mul(ring_, g.m, f.m), g.tgt.orders)};
}

template <class R>
ModMor<R> ModuleCategory<R>::add(const Mor& f, const Mor& g) const {
  return Mor{f.src, f.tgt, reduce_rows(ring_, mat_add(ring_, f.m, g.m), f.tgt.orders)};
}

template <class R>
ModMor<R> ModuleCategory<R>::sub(const Mor& f, const Mor& g) const {
  return Mor{f.src, f.tgt, reduce_rows(ring_, mat_sub(ring_, f.m, g.m), f.tgt.orders)};
}

template <class R>
ModMor<R> ModuleCategory<R>::neg(const Mor& f) const {
  return Mor{f.src, f.tgt, reduce_rows(ring_, mat_neg(ring_, f.m), f.tgt.orders)};
}

template <class R>
ModMor<R> ModuleCategory<R>::scale(const Elem& c, const Mor& f) const {
  return Mor{f.src, f.tgt, reduce_rows(ring_, mat_scale(ring_, c, f.m), f.tgt.orders)};
}

template <class R>
bool ModuleCategory<R>::is_zero_mor(const Mor& f) const {
  return mat_is_zero(ring_, reduce_rows(ring_, f.m, f.tgt.orders));
}

template <class R>
bool ModuleCategory<R>::equal(const Mor& f, const Mor& g) const {
  return f.src == g.src && f.tgt == g.tgt && is_zero_mor(sub(f, g));
}

template <class R>
ModMor<R> ModuleCategory<R>::block(const std::vector<Obj>& tgts, const std::vector<Obj>& srcs,
                                   const std::map<BlockIndex, Mor>& blocks) const {
  std::vector<std::size_t> roff(tgts.size() + 1, 0), coff(srcs.size() + 1, 0);
  for (std::size_t k = 0; k < tgts.size(); ++k) roff[k + 1] = roff[k] + tgts[k].size();
  for (std::size_t k = 0; k < srcs.size(); ++k) coff[k + 1] = coff[k] + srcs[k].size();
  Mor f{direct_sum(srcs), direct_sum(tgts), Mat<R>(roff.back(), coff.back(), ring_.zero())};
  for (const auto& [idx, b] : blocks) {
    const auto [r, c] = idx;
    if (b.m.rows() != tgts.at(r).size() || b.m.cols() != srcs.at(c).size())
      throw std::invalid_argument("block: summand shape mismatch");
    f.m.set_block(roff[r], coff[c], b.m);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Abelian structure

template <class R>
typename ModuleCategory<R>::Kernel ModuleCategory<R>::kernel(const Mor& f) const {
  const auto gens = kernel_mod(ring_, f.m, f.tgt.orders);
  Subquotient<R> sq(ring_, f.src.orders, gens, Mat<R>(f.src.size(), 0));
  Obj k{sq.orders()};
  return Kernel{k, Mor{k, f.src, sq.gens()}};
}

template <class R>
typename ModuleCategory<R>::Cokernel ModuleCategory<R>::cokernel(const Mor& f) const {
  const std::size_t m = f.tgt.size();
  Subquotient<R> sq(ring_, f.tgt.orders, identity_matrix(ring_, m), f.m);
  Obj c{sq.orders()};
  Mat<R> proj(c.size(), m, ring_.zero());
  Vec<R> e(m, ring_.zero());
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = ring_.one();
    const auto col = sq.coordinates(e);
    for (std::size_t t = 0; t < c.size(); ++t) proj(t, i) = col[t];
    e[i] = ring_.zero();
  }
  return Cokernel{c, Mor{f.tgt, c, std::move(proj)}};
}

template <class R>
std::optional<ModMor<R>> ModuleCategory<R>::lift_through_mono(const Mor& mono,
                                                              const Mor& g) const {
  const Obj& k = mono.src;
  Mor h{g.src, k, Mat<R>(k.size(), g.src.size(), ring_.zero())};
  if constexpr (R::is_field) {
    auto x = solve(ring_, mono.m, g.m);
    if (!x) return std::nullopt;
    h.m = std::move(*x);
  } else {
    for (std::size_t j = 0; j < g.src.size(); ++j) {
      auto x = solve_mod(ring_, mono.m, g.m.column(j), mono.tgt.orders);
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < k.size(); ++i) h.m(i, j) = ring_.reduce((*x)[i], k.orders[i]);
    }
  }
  return h;
}

template <class R>
std::optional<ModMor<R>> ModuleCategory<R>::descend_through_epi(const Mor& p, const Mor& g) const {
  const Obj& c = p.tgt;
  const Obj& y = g.tgt;
  Mor h{c, y, Mat<R>(y.size(), c.size(), ring_.zero())};
  if constexpr (R::is_field) {
    auto x = solve(ring_, p.m.transpose(), g.m.transpose());
    if (!x) return std::nullopt;
    h.m = x->transpose();
  } else {
    // Row r of h: h_r P = g_r and o_c h_rc = 0, both modulo y_r.
    std::vector<std::size_t> tors;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(c.orders[k]) != 0) tors.push_back(k);
    const std::size_t nb = p.src.size();
    Mat<R> a(nb + tors.size(), c.size(), Elem(0));
    a.set_block(0, 0, p.m.transpose());
    for (std::size_t t = 0; t < tors.size(); ++t) a(nb + t, tors[t]) = c.orders[tors[t]];
    for (std::size_t r = 0; r < y.size(); ++r) {
      Vec<R> rhs(nb + tors.size(), Elem(0));
      for (std::size_t b = 0; b < nb; ++b) rhs[b] = g.m(r, b);
      Vec<R> ords(nb + tors.size(), y.orders[r]);
      auto x = solve_mod(ring_, a, rhs, ords);
      if (!x) return std::nullopt;
      for (std::size_t k = 0; k < c.size(); ++k) h.m(r, k) = ring_.reduce((*x)[k], y.orders[r]);
    }
  }
  return h;
}

template <class R>
ModMor<R> ModuleCategory<R>::projective_cover(const Obj& a) const {
  return Mor{free(a.size()), a, identity_matrix(ring_, a.size())};
}

template <class R>
bool ModuleCategory<R>::is_projective(const Obj& a) const {
  return free_rank(a) == a.size();
}

template <class R>
bool ModuleCategory<R>::is_injective(const Obj& a) const {
  // Over Z the only finitely generated injective is 0.
  return R::is_field || a.size() == 0;
}

template <class R>
std::optional<ModMor<R>> ModuleCategory<R>::injective_envelope(const Obj& a) const {
  if (!is_injective(a)) return std::nullopt;
  return identity(a);
}

template <class R>
ModObj<R> ModuleCategory<R>::random_object(Rng& rng, std::size_t bound) const {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, bound)(rng);
  if constexpr (R::is_field) {
    return free(n);
  } else {
    static const long choices[] = {0, 0, 2, 3, 4, 6};
    Vec<R> ords;
    for (std::size_t k = 0; k < n; ++k)
      ords.push_back(Elem(choices[std::uniform_int_distribution<int>(0, 5)(rng)]));
    return make(ords);
  }
}

template <class R>
ModMor<R> ModuleCategory<R>::random_morphism(const Obj& a, const Obj& b, Rng& rng) const {
  const Hom h = hom(a, b);
  Vec<R> c(h.size());
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = ring_.reduce(random_scalar(ring_, rng), h.orders()[t]);
  return h.element(c);
}

template class ModuleHom<PrimeField>;
template class ModuleHom<RationalField>;
template class ModuleHom<IntegerRing>;
template class ModuleCategory<PrimeField>;
template class ModuleCategory<RationalField>;
template class ModuleCategory<IntegerRing>;
template PrimeField::Elem random_scalar<PrimeField>(const PrimeField&, Rng&);
template RationalField::Elem random_scalar<RationalField>(const RationalField&, Rng&);
template IntegerRing::Elem random_scalar<IntegerRing>(const IntegerRing&, Rng&);

}  // namespace qrep
