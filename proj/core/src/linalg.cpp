#include "macdual/linalg.hpp"

#include <algorithm>

#include "macdual/error.hpp"

namespace macdual {

SparseRow axpy(const SparseRow& v, const Scalar& c, const SparseRow& w) {
  SparseRow out;
  out.reserve(v.size() + w.size());
  auto it = v.begin();
  auto jt = w.begin();
  while (it != v.end() || jt != w.end()) {
    if (jt == w.end() || (it != v.end() && it->first < jt->first)) {
      out.push_back(*it++);
    } else if (it == v.end() || jt->first < it->first) {
      out.emplace_back(jt->first, -(c * jt->second));
      ++jt;
    } else {
      Scalar s = it->second - c * jt->second;
      if (!s.is_zero()) out.emplace_back(it->first, std::move(s));
      ++it;
      ++jt;
    }
  }
  return out;
}

SparseRow scale(const SparseRow& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseRow out = v;
  for (auto& e : out) e.second *= c;
  return out;
}

SparseRow RowEchelon::reduce(const SparseRow& v) const {
  SparseRow r = v;
  // Rows are fully reduced, so each pivot coefficient of v is eliminated by
  // exactly one subtraction and later subtractions never reintroduce it.
  for (const auto& [col, coef] : v) {
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) continue;
    const auto& row = rows_[it->second];
    // coefficient currently at col (unchanged since it is a pivot column)
    auto pos = std::lower_bound(r.begin(), r.end(), col,
                                [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (pos == r.end() || pos->first != col) continue;
    const Scalar c = pos->second;
    r = axpy(r, c, row);
  }
  return r;
}

bool RowEchelon::insert(const SparseRow& v) {
  SparseRow r = reduce(v);
  if (r.empty()) return false;
  r = scale(r, r.front().second.inverse());
  const auto pivot = r.front().first;
  for (auto& row : rows_) {
    auto pos = std::lower_bound(row.begin(), row.end(), pivot,
                                [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (pos != row.end() && pos->first == pivot) {
      const Scalar c = pos->second;
      row = axpy(row, c, r);
    }
  }
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseRow> RowEchelon::rows() const {
  auto out = rows_;
  std::sort(out.begin(), out.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  return out;
}

std::vector<SparseRow> RowEchelon::orthogonal_complement(std::uint32_t ncols) const {
  std::unordered_map<std::uint32_t, SparseRow> partial;
  for (const auto& row : rows_) {
    const auto pivot = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) {
      partial[row[k].first].emplace_back(pivot, -row[k].second);
    }
  }
  std::vector<SparseRow> out;
  for (std::uint32_t f = 0; f < ncols; ++f) {
    if (is_pivot(f)) continue;
    SparseRow v;
    if (auto it = partial.find(f); it != partial.end()) v = std::move(it->second);
    v.emplace_back(f, Scalar::one(field_));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Exponent> monomials) : monomials_(std::move(monomials)) {
  column_.reserve(monomials_.size());
  for (std::uint32_t i = 0; i < monomials_.size(); ++i) column_.emplace(monomials_[i], i);
}

MonomialIndex MonomialIndex::up_to_degree(const Ring& ring, unsigned max_degree,
                                          bool descending) {
  auto monos = enumerate_monomials(ring.size(), 0, max_degree);
  const auto& order = ring.order();
  std::sort(monos.begin(), monos.end(), [&](const Exponent& a, const Exponent& b) {
    const auto c = order.compare(a, b);
    return descending ? c == std::strong_ordering::greater : c == std::strong_ordering::less;
  });
  return MonomialIndex(std::move(monos));
}

std::int64_t MonomialIndex::find(const Exponent& e) const {
  auto it = column_.find(e);
  return it == column_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

SparseRow MonomialIndex::to_row(const Polynomial& p, bool drop_outside) const {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& t : p.terms()) {
    const auto c = find(t.exponent);
    if (c < 0) {
      if (drop_outside) continue;
      throw Error(ErrorKind::Inconsistency, "monomial outside the column index");
    }
    row.emplace_back(static_cast<std::uint32_t>(c), t.coefficient);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Polynomial MonomialIndex::to_polynomial(const RingPtr& ring, const SparseRow& row) const {
  std::vector<Term> terms;
  terms.reserve(row.size());
  for (const auto& [c, v] : row) terms.push_back({monomials_.at(c), v});
  return Polynomial(ring, std::move(terms));
}

}  // namespace macdual

namespace macdual {

Scalar coefficient_in(const Polynomial& p, const Exponent& e) {
  const auto terms = p.terms();
  const auto& order = p.ring().order();
  auto it = std::lower_bound(terms.begin(), terms.end(), e, [&](const Term& t, const Exponent& x) {
    return order.compare(t.exponent, x) == std::strong_ordering::greater;
  });
  if (it != terms.end() && it->exponent == e) return it->coefficient;
  return Scalar::zero(p.ring().field());
}

Polynomial PolynomialEchelon::reduce(const Polynomial& p) const {
  require_same_ring(ring_, p.ring_ptr());
  Polynomial r = p;
  const Exponent zero(ring_->size());
  for (const auto& t : p.terms()) {
    auto it = pivot_row_.find(t.exponent);
    if (it == pivot_row_.end()) continue;
    // pivot columns are touched only by their own row
    r = r.sub_scaled_shift(t.coefficient, zero, rows_[it->second]);
  }
  return r;
}

bool PolynomialEchelon::insert(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_zero()) return false;
  r = r.monic();
  const Exponent pivot = r.leading_exponent();
  const Exponent zero(ring_->size());
  for (auto& row : rows_) {
    const Scalar c = coefficient_in(row, pivot);
    if (!c.is_zero()) row = row.sub_scaled_shift(c, zero, r);
  }
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<Polynomial> PolynomialEchelon::basis() const {
  auto out = rows_;
  const auto& order = ring_->order();
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_exponent(), b.leading_exponent()) ==
           std::strong_ordering::greater;
  });
  return out;
}

}  // namespace macdual
