#pragma once

#include <optional>
#include <vector>

#include "qrep/linalg.hpp"

namespace qrep {

// A subquotient L/N of the ambient module A = ⊕_k R/o_k (o_k = 0 means a free
// summand). L is spanned by the columns of `sub`, N by the columns of `rel`;
// the ambient relations are added to both, so N ⊆ L only needs to hold modulo
// A's relations. The result is brought to diagonal form
//
//   L/N ≅ ⊕_t R/d_t,   d_t never a unit, d_t = 0 for free summands,
//
// with generator t represented by an ambient vector (column t of gens()).
// Over a field every d_t is 0 and this is plain quotient-space bookkeeping.
template <class R>
class Subquotient {
 public:
  using Elem = typename R::Elem;

  Subquotient() = default;
  Subquotient(const R& ring, Vec<R> ambient_orders, const Mat<R>& sub, const Mat<R>& rel);

  const Vec<R>& orders() const { return orders_; }
  const Mat<R>& gens() const { return gens_; }
  std::size_t size() const { return orders_.size(); }
  std::size_t ambient_size() const { return ambient_.size(); }
  const Vec<R>& ambient_orders() const { return ambient_; }

  // Coordinates of an ambient vector known to lie in L.
  Vec<R> coordinates(const Vec<R>& x) const;
  // Ambient vector gens * c, reduced modulo the ambient orders.
  Vec<R> element(const Vec<R>& c) const;
  // Membership of an ambient vector in L.
  bool contains(const Vec<R>& x) const;

 private:
  std::optional<R> ring_;
  Vec<R> ambient_;
  Vec<R> orders_;
  Mat<R> gens_;

  // Field data: x[rows] -> coordinates via coord_.
  std::vector<std::size_t> rows_;
  Mat<R> coord_;
  Mat<R> basis_;  // basis of L (fields) used by contains()

  // Integer data.
  Mat<R> u_;    // left Smith transform of L
  Vec<R> d_;    // nonzero Smith diagonal of L
  Mat<R> u2_;   // left Smith transform of the relation matrix, kept rows
};

// Reduces x modulo the orders row by row (identity over fields).
template <class R>
Vec<R> reduce_vec(const R& ring, Vec<R> x, const Vec<R>& orders);
template <class R>
Mat<R> reduce_rows(const R& ring, Mat<R> m, const Vec<R>& orders);

// Cardinality of ⊕ R/d_t, or 0 when it is infinite.
template <class R>
mpz_class module_order(const R& ring, const Vec<R>& orders);

}  // namespace qrep
