#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macdual/monomial.hpp"
#include "macdual/polynomial.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

/// Sparse vector: strictly increasing column indices, no zero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incrementally maintained reduced row-echelon form over an exact field.
/// The pivot of a row is its smallest column; pivots are normalized to 1 and
/// no other row has an entry in a pivot column, so the stored basis of a
/// subspace is unique.
class RowEchelon {
 public:
  explicit RowEchelon(Field field) : field_(field) {}

  /// Remainder of v modulo the stored rows (zero iff v is in the span).
  SparseRow reduce(const SparseRow& v) const;
  /// Returns true when v was independent of the stored rows.
  bool insert(const SparseRow& v);
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  /// Rows in increasing pivot order.
  std::vector<SparseRow> rows() const;
  bool is_pivot(std::uint32_t column) const { return pivot_row_.count(column) != 0; }

  /// Basis of { x in K^ncols : sum_j row_j * x_j = 0 for every row }, one
  /// vector per non-pivot column f, with leading entry 1 at f.
  std::vector<SparseRow> orthogonal_complement(std::uint32_t ncols) const;

  const Field& field() const noexcept { return field_; }

 private:
  Field field_;
  std::vector<SparseRow> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_row_;
};

/// v - c * w
SparseRow axpy(const SparseRow& v, const Scalar& c, const SparseRow& w);
SparseRow scale(const SparseRow& v, const Scalar& c);

/// Bijection between a finite set of monomials and column indices.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  /// Columns follow the order of `monomials`.
  explicit MonomialIndex(std::vector<Exponent> monomials);

  /// All monomials of degree <= max_degree, sorted descending in `order`
  /// (column 0 is the largest) or ascending.
  static MonomialIndex up_to_degree(const Ring& ring, unsigned max_degree, bool descending);

  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponent& monomial(std::uint32_t column) const { return monomials_.at(column); }
  /// Column of e, or -1 when e is outside the index.
  std::int64_t find(const Exponent& e) const;

  /// Polynomial -> sparse row; terms outside the index throw unless
  /// `drop_outside`.
  SparseRow to_row(const Polynomial& p, bool drop_outside = false) const;
  Polynomial to_polynomial(const RingPtr& ring, const SparseRow& row) const;

 private:
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::uint32_t, ExponentHash> column_;
};

/// Reduced row-echelon basis of a K-subspace of polynomials, with the
/// leading term (largest in the ring order) as pivot. Two subspaces are
/// equal iff their `basis()` vectors are equal.
class PolynomialEchelon {
 public:
  explicit PolynomialEchelon(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial reduce(const Polynomial& p) const;
  bool insert(const Polynomial& p);
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(const Exponent& e) const { return pivot_row_.count(e) != 0; }

  /// Sorted by descending pivot.
  std::vector<Polynomial> basis() const;
  const RingPtr& ring_ptr() const noexcept { return ring_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> rows_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> pivot_row_;
};

/// Coefficient of e in p by binary search over the sorted terms.
Scalar coefficient_in(const Polynomial& p, const Exponent& e);

}  // namespace macdual
