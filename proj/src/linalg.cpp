#include "qrep/linalg.hpp"

#include <type_traits>

#include "qrep/simd/fp_kernels.hpp"

namespace qrep {

namespace {

template <class R>
void row_axpy(const R& ring, Mat<R>& m, std::size_t dst, std::size_t src,
              const typename R::Elem& c, std::size_t from) {
  if (ring.is_zero(c)) return;
  if constexpr (std::is_same_v<R, PrimeField>) {
    simd::axpy_mod(m.row(dst) + from, m.row(src) + from, c, m.cols() - from, ring.modulus());
  } else {
    for (std::size_t k = from; k < m.cols(); ++k)
      if (!ring.is_zero(m(src, k))) m(dst, k) = ring.add(m(dst, k), ring.mul(c, m(src, k)));
  }
}

template <class R>
void row_scale(const R& ring, Mat<R>& m, std::size_t r, const typename R::Elem& c,
               std::size_t from) {
  if constexpr (std::is_same_v<R, PrimeField>) {
    simd::scale_mod(m.row(r) + from, c, m.cols() - from, ring.modulus());
  } else {
    for (std::size_t k = from; k < m.cols(); ++k) m(r, k) = ring.mul(c, m(r, k));
  }
}

}  // namespace

template <class R>
Mat<R> identity_matrix(const R& ring, std::size_t n) {
  Mat<R> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class R>
Mat<R> zero_matrix(const R& ring, std::size_t rows, std::size_t cols) {
  return Mat<R>(rows, cols, ring.zero());
}

template <class R>
Mat<R> mat_mul(const R& ring, const Mat<R>& a, const Mat<R>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<R> c(a.rows(), b.cols(), ring.zero());
  if constexpr (std::is_same_v<R, PrimeField>) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(i, k) != 0)
          simd::axpy_mod(c.row(i), b.row(k), a(i, k), b.cols(), ring.modulus());
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (ring.is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (!ring.is_zero(b(k, j))) c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
      }
  }
  return c;
}

template <class R>
Mat<R> mat_add(const R& ring, const Mat<R>& a, const Mat<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Mat<R> c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = ring.add(a.data()[k], b.data()[k]);
  return c;
}

template <class R>
Mat<R> mat_sub(const R& ring, const Mat<R>& a, const Mat<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_sub: shape mismatch");
  Mat<R> c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = ring.sub(a.data()[k], b.data()[k]);
  return c;
}

template <class R>
Mat<R> mat_neg(const R& ring, const Mat<R>& a) {
  Mat<R> c = a;
  for (auto& x : c.data()) x = ring.neg(x);
  return c;
}

template <class R>
Mat<R> mat_scale(const R& ring, const typename R::Elem& s, const Mat<R>& a) {
  Mat<R> c = a;
  for (auto& x : c.data()) x = ring.mul(s, x);
  return c;
}

template <class R>
Vec<R> mat_vec(const R& ring, const Mat<R>& a, const Vec<R>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec<R> y(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!ring.is_zero(a(i, k)) && !ring.is_zero(x[k])) y[i] = ring.add(y[i], ring.mul(a(i, k), x[k]));
  return y;
}

template <class R>
bool mat_is_zero(const R& ring, const Mat<R>& a) {
  for (const auto& x : a.data())
    if (!ring.is_zero(x)) return false;
  return true;
}

template <class R>
Echelon<R> rref(const R& ring, Mat<R> m) {
  static_assert(R::is_field, "rref needs a field");
  Echelon<R> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && ring.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (!ring.equal(m(r, c), ring.one())) row_scale(ring, m, r, ring.inv(m(r, c)), c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || ring.is_zero(m(i, c))) continue;
      row_axpy(ring, m, i, r, ring.neg(m(i, c)), c);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.form = std::move(m);
  return e;
}

template <class R>
std::size_t rank(const R& ring, const Mat<R>& m) {
  if constexpr (R::is_field) {
    return rref(ring, m).pivots.size();
  } else {
    return smith(ring, m).rank;
  }
}

template <class R>
Mat<R> nullspace(const R& ring, const Mat<R>& m) {
  static_assert(R::is_field, "nullspace needs a field");
  const auto e = rref(ring, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Mat<R> basis(n, n - e.pivots.size(), ring.zero());
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = ring.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) basis(e.pivots[k], col) = ring.neg(e.form(k, f));
    ++col;
  }
  return basis;
}

template <class R>
std::optional<Mat<R>> solve(const R& ring, const Mat<R>& a, const Mat<R>& b) {
  static_assert(R::is_field, "solve needs a field");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  const auto e = rref(ring, hconcat(a, b));
  for (auto c : e.pivots)
    if (c >= n) return std::nullopt;
  Mat<R> x(n, b.cols(), ring.zero());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.form(k, n + j);
  return x;
}

template <class R>
std::optional<Mat<R>> inverse(const R& ring, const Mat<R>& m) {
  static_assert(R::is_field, "inverse needs a field");
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto e = rref(ring, hconcat(m, identity_matrix(ring, n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.form.block(0, n, n, n);
}

template <class R>
PivotInverse<R> pivot_inverse(const R& ring, const Mat<R>& m) {
  static_assert(R::is_field, "pivot_inverse needs a field");
  const auto e = rref(ring, m.transpose());
  if (e.pivots.size() != m.cols()) throw std::invalid_argument("pivot_inverse: rank deficient");
  PivotInverse<R> out;
  out.rows = e.pivots;
  Mat<R> sq(m.cols(), m.cols());
  for (std::size_t i = 0; i < out.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sq(i, j) = m(out.rows[i], j);
  out.inverse = *inverse(ring, sq);
  return out;
}

namespace {

using Z = mpz_class;

// Hermite reduction of the rows of a by lattice reduction with small
// multipliers: on return b * a_in = a is in Hermite form, binv = b^{-1}, and
// the rows of b matching zero rows of a are an LLL-reduced basis of the left
// kernel. λ and D are the integral Gram-Schmidt data of b's rows; the loop
// builds the echelon form upside down and reverses it at the end.
void hermite_rows(Mat<IntegerRing>& a, Mat<IntegerRing>& b, Mat<IntegerRing>& binv) {
  const std::size_t m = a.rows(), n = a.cols();
  b = Mat<IntegerRing>(m, m, Z(0));
  binv = Mat<IntegerRing>(m, m, Z(0));
  for (std::size_t i = 0; i < m; ++i) b(i, i) = binv(i, i) = 1;
  if (n == 0) return;
  if (m < 2) {
    if (m == 1) {
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(a(0, c)) != 0) {
          if (sgn(a(0, c)) < 0) {
            for (std::size_t j = 0; j < n; ++j) a(0, j) = -a(0, j);
            b(0, 0) = binv(0, 0) = -1;
          }
          break;
        }
    }
    return;
  }
  // 1-based bookkeeping: row k of the algorithm is row k-1 of the matrices.
  std::vector<Z> d(m + 1, Z(1));
  std::vector<std::vector<Z>> lam(m + 1, std::vector<Z>(m + 1, Z(0)));

  auto lead = [&](std::size_t k) {
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(a(k - 1, c)) != 0) return c;
    return n;
  };
  auto minus = [&](std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) a(j - 1, c) = -a(j - 1, c);
    for (std::size_t c = 0; c < m; ++c) b(j - 1, c) = -b(j - 1, c);
    for (std::size_t r = 0; r < m; ++r) binv(r, j - 1) = -binv(r, j - 1);
    for (std::size_t r = 1; r < j; ++r) lam[j][r] = -lam[j][r];
    for (std::size_t i = j + 1; i <= m; ++i) lam[i][j] = -lam[i][j];
  };
  // row k -= q row i
  auto axpy = [&](std::size_t k, std::size_t i, const Z& q) {
    for (std::size_t c = 0; c < n; ++c) a(k - 1, c) -= q * a(i - 1, c);
    for (std::size_t c = 0; c < m; ++c) b(k - 1, c) -= q * b(i - 1, c);
    for (std::size_t r = 0; r < m; ++r) binv(r, i - 1) += q * binv(r, k - 1);
    lam[k][i] -= q * d[i];
    for (std::size_t j = 1; j < i; ++j) lam[k][j] -= q * lam[i][j];
  };
  auto reduce2 = [&](std::size_t k, std::size_t i) {
    std::size_t c1 = lead(i);
    if (c1 < n && sgn(a(i - 1, c1)) < 0) minus(i);
    std::size_t c2 = lead(k);
    if (c2 < n && sgn(a(k - 1, c2)) < 0) minus(k);
    Z q = 0;
    if (c1 < n) {
      mpz_fdiv_q(q.get_mpz_t(), a(k - 1, c1).get_mpz_t(), a(i - 1, c1).get_mpz_t());
    } else if (2 * abs(lam[k][i]) > d[i]) {
      // nearest integer to λ/D
      Z num = 2 * lam[k][i] + d[i], den = 2 * d[i];
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (sgn(q) != 0) axpy(k, i, q);
    return std::pair{c1, c2};
  };
  auto swap2 = [&](std::size_t k) {
    a.swap_rows(k - 1, k - 2);
    b.swap_rows(k - 1, k - 2);
    binv.swap_cols(k - 1, k - 2);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Z l = lam[k][k - 1];
    for (std::size_t i = k + 1; i <= m; ++i) {
      Z t = lam[i][k - 1] * d[k] - lam[i][k] * l;
      Z u = lam[i][k - 1] * l + lam[i][k] * d[k - 2];
      mpz_divexact(lam[i][k - 1].get_mpz_t(), u.get_mpz_t(), d[k - 1].get_mpz_t());
      mpz_divexact(lam[i][k].get_mpz_t(), t.get_mpz_t(), d[k - 1].get_mpz_t());
    }
    Z nd = d[k - 2] * d[k] + l * l;
    mpz_divexact(d[k - 1].get_mpz_t(), nd.get_mpz_t(), d[k - 1].get_mpz_t());
  };

  std::size_t k = 2;
  while (k <= m) {
    const auto [c1, c2] = reduce2(k, k - 1);
    const bool both_zero = c1 == n && c2 == n;
    if (c1 <= std::min(c2, n - 1) ||
        (both_zero && 4 * (d[k - 2] * d[k] + lam[k][k - 1] * lam[k][k - 1]) < 3 * d[k - 1] * d[k - 1])) {
      swap2(k);
      if (k > 2) --k;
    } else {
      for (std::size_t i = k - 1; i-- > 1;) reduce2(k, i);
      ++k;
    }
  }
  // Echelon order: leading columns increase downwards, zero rows last.
  for (std::size_t i = 0, j = m - 1; i < j; ++i, --j) {
    a.swap_rows(i, j);
    b.swap_rows(i, j);
    binv.swap_cols(i, j);
  }
}

bool is_monomial(const Mat<IntegerRing>& a) {
  std::vector<int> rows(a.rows(), 0), cols(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && (++rows[i] > 1 || ++cols[j] > 1)) return false;
  return true;
}

Mat<IntegerRing> transpose(const Mat<IntegerRing>& a) {
  Mat<IntegerRing> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace

SmithForm smith(const IntegerRing& ring, const Mat<IntegerRing>& input) {
  using E = mpz_class;
  Mat<IntegerRing> a = input;
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s;
  s.u = identity_matrix(ring, m);
  s.uinv = identity_matrix(ring, m);
  s.v = identity_matrix(ring, n);
  s.vinv = identity_matrix(ring, n);

  // Alternate row and column Hermite passes until a has at most one nonzero
  // entry in each row and column.
  Mat<IntegerRing> t, tinv;
  bool rows_next = true;
  while (!is_monomial(a)) {
    if (rows_next) {
      hermite_rows(a, t, tinv);
      s.u = mat_mul(ring, t, s.u);
      s.uinv = mat_mul(ring, s.uinv, tinv);
    } else {
      auto at = transpose(a);
      hermite_rows(at, t, tinv);
      a = transpose(at);
      s.v = mat_mul(ring, s.v, transpose(t));
      s.vinv = mat_mul(ring, transpose(tinv), s.vinv);
    }
    rows_next = !rows_next;
  }

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    s.u.swap_rows(i, j);
    s.uinv.swap_cols(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    s.v.swap_cols(i, j);
    s.vinv.swap_rows(i, j);
  };
  // row_i += q * row_t
  auto add_row = [&](std::size_t i, std::size_t t, const E& q) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += q * a(t, c);
    for (std::size_t c = 0; c < m; ++c) s.u(i, c) += q * s.u(t, c);
    for (std::size_t r = 0; r < m; ++r) s.uinv(r, t) -= q * s.uinv(r, i);
  };
  // col_j += q * col_t
  auto add_col = [&](std::size_t j, std::size_t t, const E& q) {
    for (std::size_t r = 0; r < m; ++r) a(r, j) += q * a(r, t);
    for (std::size_t r = 0; r < n; ++r) s.v(r, j) += q * s.v(r, t);
    for (std::size_t c = 0; c < n; ++c) s.vinv(t, c) -= q * s.vinv(j, c);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < m; ++c) s.u(i, c) = -s.u(i, c);
    for (std::size_t r = 0; r < m; ++r) s.uinv(r, i) = -s.uinv(r, i);
  };

  // Move the nonzero entries onto the leading diagonal.
  std::size_t r = 0;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    std::size_t j = n;
    for (std::size_t c = r; c < n; ++c)
      if (sgn(a(i, c)) != 0) j = c;
    if (j == n) continue;
    swap_rows(r, i);
    swap_cols(r, j);
    ++r;
  }
  for (std::size_t k = 0; k < r; ++k)
    if (sgn(a(k, k)) < 0) negate_row(k);

  // Divisibility chain: diag(x, y) ~ diag(gcd, lcm) by a 2x2 Euclid.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (ring.divides(a(i, i), a(j, j))) continue;
      add_col(i, j, E(1));
      while (sgn(a(j, i)) != 0) {
        add_row(j, i, -ring.fdiv(a(j, i), a(i, i)));
        if (sgn(a(j, i)) != 0) swap_rows(i, j);
      }
      add_col(j, i, -ring.divexact(a(i, j), a(i, i)));
      if (sgn(a(i, i)) < 0) negate_row(i);
      if (sgn(a(j, j)) < 0) negate_row(j);
    }

  s.rank = r;
  const std::size_t lim = std::min(m, n);
  s.diag.assign(lim, E(0));
  for (std::size_t k = 0; k < r; ++k) s.diag[k] = a(k, k);
  return s;
}

std::optional<Vec<IntegerRing>> integer_solve(const SmithForm& s, const Vec<IntegerRing>& b) {
  const std::size_t m = s.u.rows(), n = s.v.rows();
  if (b.size() != m) throw std::invalid_argument("integer_solve: shape mismatch");
  IntegerRing ring;
  const auto c = mat_vec(ring, s.u, b);
  Vec<IntegerRing> y(n, mpz_class(0));
  for (std::size_t k = 0; k < m; ++k) {
    if (k < s.rank) {
      if (!ring.divides(s.diag[k], c[k])) return std::nullopt;
      y[k] = ring.divexact(c[k], s.diag[k]);
    } else if (sgn(c[k]) != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(ring, s.v, y);
}

Mat<IntegerRing> integer_kernel(const IntegerRing& ring, const Mat<IntegerRing>& a) {
  const auto s = smith(ring, a);
  const std::size_t n = a.cols();
  return s.v.block(0, s.rank, n, n - s.rank);
}

namespace {

// [a | diag(orders)] restricted to the nonzero orders.
Mat<IntegerRing> with_relations(const Mat<IntegerRing>& a, const Vec<IntegerRing>& orders) {
  std::size_t extra = 0;
  for (const auto& d : orders)
    if (sgn(d) != 0) ++extra;
  Mat<IntegerRing> out(a.rows(), a.cols() + extra, mpz_class(0));
  out.set_block(0, 0, a);
  std::size_t k = a.cols();
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (sgn(orders[i]) != 0) out(i, k++) = orders[i];
  return out;
}

}  // namespace

template <class R>
std::optional<Vec<R>> solve_mod(const R& ring, const Mat<R>& a, const Vec<R>& b,
                                const Vec<R>& row_orders) {
  if constexpr (R::is_field) {
    (void)row_orders;
    auto x = solve(ring, a, column_matrix(b));
    if (!x) return std::nullopt;
    return x->column(0);
  } else {
    const auto aug = with_relations(a, row_orders);
    auto x = integer_solve(smith(ring, aug), b);
    if (!x) return std::nullopt;
    x->resize(a.cols());
    return x;
  }
}

template <class R>
Mat<R> kernel_mod(const R& ring, const Mat<R>& a, const Vec<R>& row_orders) {
  if constexpr (R::is_field) {
    (void)row_orders;
    return nullspace(ring, a);
  } else {
    const auto k = integer_kernel(ring, with_relations(a, row_orders));
    return k.block(0, 0, a.cols(), k.cols());
  }
}

template <class R>
std::size_t generic_rank(const R& ring, const Mat<R>& a) {
  return rank(ring, a);
}

#define QREP_INSTANTIATE_COMMON(R)                                                     \
  template Mat<R> identity_matrix<R>(const R&, std::size_t);                           \
  template Mat<R> zero_matrix<R>(const R&, std::size_t, std::size_t);                  \
  template Mat<R> mat_mul<R>(const R&, const Mat<R>&, const Mat<R>&);                  \
  template Mat<R> mat_add<R>(const R&, const Mat<R>&, const Mat<R>&);                  \
  template Mat<R> mat_sub<R>(const R&, const Mat<R>&, const Mat<R>&);                  \
  template Mat<R> mat_neg<R>(const R&, const Mat<R>&);                                 \
  template Mat<R> mat_scale<R>(const R&, const typename R::Elem&, const Mat<R>&);      \
  template Vec<R> mat_vec<R>(const R&, const Mat<R>&, const Vec<R>&);                  \
  template bool mat_is_zero<R>(const R&, const Mat<R>&);                               \
  template std::size_t rank<R>(const R&, const Mat<R>&);                               \
  template std::optional<Vec<R>> solve_mod<R>(const R&, const Mat<R>&, const Vec<R>&,  \
                                              const Vec<R>&);                          \
  template Mat<R> kernel_mod<R>(const R&, const Mat<R>&, const Vec<R>&);               \
  template std::size_t generic_rank<R>(const R&, const Mat<R>&);

#define QREP_INSTANTIATE_FIELD(R)                                                      \
  template Echelon<R> rref<R>(const R&, Mat<R>);                                       \
  template Mat<R> nullspace<R>(const R&, const Mat<R>&);                               \
  template std::optional<Mat<R>> solve<R>(const R&, const Mat<R>&, const Mat<R>&);     \
  template std::optional<Mat<R>> inverse<R>(const R&, const Mat<R>&);                  \
  template PivotInverse<R> pivot_inverse<R>(const R&, const Mat<R>&);

QREP_INSTANTIATE_COMMON(PrimeField)
QREP_INSTANTIATE_COMMON(RationalField)
QREP_INSTANTIATE_COMMON(IntegerRing)
QREP_INSTANTIATE_FIELD(PrimeField)
QREP_INSTANTIATE_FIELD(RationalField)

}  // namespace qrep
