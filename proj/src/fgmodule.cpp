#include "qrep/fgmodule.hpp"

namespace qrep {

template <class R>
Vec<R> reduce_vec(const R& ring, Vec<R> x, const Vec<R>& orders) {
  if constexpr (!R::is_field) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ring.reduce(x[i], orders[i]);
  } else {
    (void)ring;
    (void)orders;
  }
  return x;
}

template <class R>
Mat<R> reduce_rows(const R& ring, Mat<R> m, const Vec<R>& orders) {
  if constexpr (!R::is_field) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(orders[i]) == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ring.reduce(m(i, j), orders[i]);
    }
  } else {
    (void)ring;
    (void)orders;
  }
  return m;
}

template <class R>
mpz_class module_order(const R& ring, const Vec<R>& orders) {
  if constexpr (std::is_same_v<R, PrimeField>) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), ring.modulus(), orders.size());
    return out;
  } else if constexpr (std::is_same_v<R, RationalField>) {
    (void)ring;
    return orders.empty() ? mpz_class(1) : mpz_class(0);
  } else {
    (void)ring;
    mpz_class out = 1;
    for (const auto& d : orders) {
      if (sgn(d) == 0) return 0;
      out *= d;
    }
    return out;
  }
}

template <class R>
Subquotient<R>::Subquotient(const R& ring, Vec<R> ambient_orders, const Mat<R>& sub,
                            const Mat<R>& rel)
    : ring_(ring), ambient_(std::move(ambient_orders)) {
  const std::size_t n = ambient_.size();
  if (sub.rows() != n || rel.rows() != n) throw std::invalid_argument("Subquotient: shape mismatch");

  if constexpr (R::is_field) {
    // Basis of L from the pivot columns of sub.
    const auto e = rref(ring, sub);
    const std::size_t r = e.pivots.size();
    basis_ = Mat<R>(n, r, ring.zero());
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < n; ++i) basis_(i, k) = sub(i, e.pivots[k]);
    Mat<R> to_basis;  // r x |rows|
    if (r > 0) {
      auto pi = pivot_inverse(ring, basis_);
      rows_ = pi.rows;
      to_basis = pi.inverse;
    } else {
      to_basis = Mat<R>(0, 0);
    }
    auto basis_coords = [&](const Vec<R>& x) {
      Vec<R> y(rows_.size());
      for (std::size_t k = 0; k < rows_.size(); ++k) y[k] = x[rows_[k]];
      return mat_vec(ring, to_basis, y);
    };
    // Relations in basis coordinates, then a complement of their span.
    Mat<R> relc(r, rel.cols(), ring.zero());
    for (std::size_t j = 0; j < rel.cols(); ++j) {
      const auto c = basis_coords(rel.column(j));
      for (std::size_t k = 0; k < r; ++k) relc(k, j) = c[k];
    }
    const std::size_t s = rel.cols();
    const auto ext = rref(ring, hconcat(relc, identity_matrix(ring, r)));
    Mat<R> w(r, r, ring.zero());
    std::vector<std::size_t> comp;
    std::size_t col = 0;
    for (auto p : ext.pivots) {
      if (p < s) {
        for (std::size_t k = 0; k < r; ++k) w(k, col) = relc(k, p);
      } else {
        w(p - s, col) = ring.one();
        comp.push_back(p - s);
      }
      ++col;
    }
    const std::size_t nrel = r - comp.size();
    const auto winv = r > 0 ? *inverse(ring, w) : Mat<R>(0, 0);
    gens_ = Mat<R>(n, comp.size(), ring.zero());
    for (std::size_t t = 0; t < comp.size(); ++t)
      for (std::size_t i = 0; i < n; ++i) gens_(i, t) = basis_(i, comp[t]);
    orders_.assign(comp.size(), ring.zero());
    coord_ = r > 0 ? mat_mul(ring, winv.block(nrel, 0, comp.size(), r), to_basis)
                   : Mat<R>(0, 0);
  } else {
    // Ambient relations belong to both L and N.
    Mat<R> diag(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) diag(i, i) = ambient_[i];
    const auto lat = hconcat(sub, diag);
    const auto relations = hconcat(rel, diag);
    auto s = smith(ring, lat);
    const std::size_t r = s.rank;
    u_ = std::move(s.u);
    d_.assign(s.diag.begin(), s.diag.begin() + r);
    // L basis: b_k = d_k * uinv[:, k].
    Mat<R> relc(r, relations.cols(), ring.zero());
    for (std::size_t j = 0; j < relations.cols(); ++j) {
      const auto y = mat_vec(ring, u_, relations.column(j));
      for (std::size_t k = 0; k < r; ++k) relc(k, j) = ring.divexact(y[k], d_[k]);
    }
    const auto s2 = smith(ring, relc);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < r; ++k) {
      const mpz_class dk = k < s2.rank ? s2.diag[k] : mpz_class(0);
      if (dk == 1) continue;
      kept.push_back(k);
      orders_.push_back(dk);
    }
    u2_ = Mat<R>(kept.size(), r, ring.zero());
    for (std::size_t t = 0; t < kept.size(); ++t)
      for (std::size_t k = 0; k < r; ++k) u2_(t, k) = s2.u(kept[t], k);
    // New generators: B * u2^{-1}[:, kept].
    gens_ = Mat<R>(n, kept.size(), ring.zero());
    for (std::size_t t = 0; t < kept.size(); ++t)
      for (std::size_t i = 0; i < n; ++i) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < r; ++k) acc += s.uinv(i, k) * d_[k] * s2.uinv(k, kept[t]);
        gens_(i, t) = ring.reduce(acc, ambient_[i]);
      }
  }
}

template <class R>
Vec<R> Subquotient<R>::coordinates(const Vec<R>& x) const {
  const R& ring = *ring_;
  if (x.size() != ambient_.size()) throw std::invalid_argument("Subquotient::coordinates: size");
  if constexpr (R::is_field) {
    Vec<R> y(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) y[k] = x[rows_[k]];
    if (coord_.cols() == 0) return Vec<R>(orders_.size(), ring.zero());
    return mat_vec(ring, coord_, y);
  } else {
    const auto y = mat_vec(ring, u_, x);
    Vec<R> c(d_.size());
    for (std::size_t k = 0; k < d_.size(); ++k) {
      if (!ring.divides(d_[k], y[k])) throw std::invalid_argument("Subquotient: vector outside L");
      c[k] = ring.divexact(y[k], d_[k]);
    }
    return reduce_vec(ring, mat_vec(ring, u2_, c), orders_);
  }
}

template <class R>
Vec<R> Subquotient<R>::element(const Vec<R>& c) const {
  return reduce_vec(*ring_, mat_vec(*ring_, gens_, c), ambient_);
}

template <class R>
bool Subquotient<R>::contains(const Vec<R>& x) const {
  const R& ring = *ring_;
  if constexpr (R::is_field) {
    return rank(ring, hconcat(basis_, column_matrix(x))) == basis_.cols();
  } else {
    const auto y = mat_vec(ring, u_, x);
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (k < d_.size()) {
        if (!ring.divides(d_[k], y[k])) return false;
      } else if (sgn(y[k]) != 0) {
        return false;
      }
    }
    return true;
  }
}

#define QREP_INSTANTIATE(R)                                                  \
  template class Subquotient<R>;                                             \
  template Vec<R> reduce_vec<R>(const R&, Vec<R>, const Vec<R>&);            \
  template Mat<R> reduce_rows<R>(const R&, Mat<R>, const Vec<R>&);           \
  template mpz_class module_order<R>(const R&, const Vec<R>&);

QREP_INSTANTIATE(PrimeField)
QREP_INSTANTIATE(RationalField)
QREP_INSTANTIATE(IntegerRing)

}  // namespace qrep
