#pragma once

#include <optional>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/ring.hpp"

// Exact linear algebra over the scalar rings. Field routines use reduced row
// echelon form; integer routines go through the Smith normal form. Templates
// are instantiated for PrimeField, RationalField and IntegerRing in linalg.cpp.

namespace qrep {

template <class R>
using Mat = Matrix<typename R::Elem>;
template <class R>
using Vec = std::vector<typename R::Elem>;

template <class R> Mat<R> identity_matrix(const R& ring, std::size_t n);
template <class R> Mat<R> zero_matrix(const R& ring, std::size_t rows, std::size_t cols);
template <class R> Mat<R> mat_mul(const R& ring, const Mat<R>& a, const Mat<R>& b);
template <class R> Mat<R> mat_add(const R& ring, const Mat<R>& a, const Mat<R>& b);
template <class R> Mat<R> mat_sub(const R& ring, const Mat<R>& a, const Mat<R>& b);
template <class R> Mat<R> mat_neg(const R& ring, const Mat<R>& a);
template <class R> Mat<R> mat_scale(const R& ring, const typename R::Elem& c, const Mat<R>& a);
template <class R> Vec<R> mat_vec(const R& ring, const Mat<R>& a, const Vec<R>& x);
template <class R> bool mat_is_zero(const R& ring, const Mat<R>& a);

// Fields only.
template <class R>
struct Echelon {
  Mat<R> form;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};
template <class R> Echelon<R> rref(const R& ring, Mat<R> m);
template <class R> std::size_t rank(const R& ring, const Mat<R>& m);
// Columns form a basis of {x : m x = 0}.
template <class R> Mat<R> nullspace(const R& ring, const Mat<R>& m);
// Solves a X = b; nullopt when inconsistent.
template <class R> std::optional<Mat<R>> solve(const R& ring, const Mat<R>& a, const Mat<R>& b);
// Rows i_1 < ... < i_k of a full-column-rank matrix m forming an invertible
// block, and the inverse of that block. inverse * m[rows] = identity.
template <class R>
struct PivotInverse {
  std::vector<std::size_t> rows;
  Mat<R> inverse;
};
template <class R> PivotInverse<R> pivot_inverse(const R& ring, const Mat<R>& m);
template <class R> std::optional<Mat<R>> inverse(const R& ring, const Mat<R>& m);

// Smith normal form: u * a * v = diag(d_1, ..., d_r, 0, ...), d_i | d_{i+1},
// d_i > 0. u and v are unimodular; uinv and vinv are their inverses.
struct SmithForm {
  Mat<IntegerRing> u, uinv, v, vinv;
  std::vector<mpz_class> diag;  // length min(rows, cols), zeros after rank
  std::size_t rank = 0;
};
SmithForm smith(const IntegerRing& ring, const Mat<IntegerRing>& a);

// Integer solution of a x = b, or nullopt.
std::optional<Vec<IntegerRing>> integer_solve(const SmithForm& s, const Vec<IntegerRing>& b);
// Columns form a basis of the integer kernel of a.
Mat<IntegerRing> integer_kernel(const IntegerRing& ring, const Mat<IntegerRing>& a);

// Solution of a x = b modulo the row orders (order 0 means exact equality).
template <class R>
std::optional<Vec<R>> solve_mod(const R& ring, const Mat<R>& a, const Vec<R>& b,
                                const Vec<R>& row_orders);

// Generators (columns) of {x : a x = 0 modulo row_orders}.
template <class R>
Mat<R> kernel_mod(const R& ring, const Mat<R>& a, const Vec<R>& row_orders);

// Rank of a as a map over the fraction field; for fields this is the rank.
template <class R> std::size_t generic_rank(const R& ring, const Mat<R>& a);

}  // namespace qrep
