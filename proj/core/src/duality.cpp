#include "macdual/duality.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "macdual/error.hpp"

namespace macdual {

DualModule::DualModule(RingPtr ring) : echelon_(std::move(ring)) {}

DualModule::DualModule(PolynomialEchelon echelon)
    : echelon_(std::move(echelon)), basis_(echelon_.basis()) {}

DualModule DualModule::span_of(RingPtr ring, const std::vector<Polynomial>& elements) {
  PolynomialEchelon ech(std::move(ring));
  for (const auto& f : elements) ech.insert(f);
  return DualModule(std::move(ech));
}

DualModule DualModule::generated_by(RingPtr ring, const std::vector<Polynomial>& generators) {
  PolynomialEchelon ech(ring);
  std::deque<Polynomial> queue;
  auto push = [&](const Polynomial& f) {
    auto r = ech.reduce(f);
    if (r.is_zero()) return;
    ech.insert(r);
    queue.push_back(std::move(r));
  };
  for (const auto& g : generators) push(g);
  const auto n = ring->size();
  while (!queue.empty()) {
    const Polynomial f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) push(contract(Polynomial::variable(ring, i), f));
  }
  return DualModule(std::move(ech));
}

int DualModule::max_degree() const noexcept {
  int d = -1;
  for (const auto& b : basis_) d = std::max(d, b.degree());
  return d;
}

bool DualModule::contains(const DualModule& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Polynomial& f) { return contains(f); });
}

bool DualModule::is_closed() const {
  const auto& ring = ring_ptr();
  for (const auto& b : basis_) {
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (!contains(contract(Polynomial::variable(ring, i), b))) return false;
    }
  }
  return true;
}

bool operator==(const DualModule& a, const DualModule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  return a.basis_ == b.basis_;
}

Polynomial contract(const Polynomial& p, const Polynomial& f) {
  require_same_ring(p.ring_ptr(), f.ring_ptr());
  std::vector<Term> out;
  for (const auto& s : p.terms()) {
    for (const auto& t : f.terms()) {
      if (s.exponent.divides(t.exponent)) {
        out.push_back({t.exponent - s.exponent, s.coefficient * t.coefficient});
      }
    }
  }
  return Polynomial(p.ring_ptr(), std::move(out));
}

DualModule contract_module(const Polynomial& p, const DualModule& module) {
  std::vector<Polynomial> images;
  for (const auto& b : module.basis()) images.push_back(contract(p, b));
  return DualModule::span_of(module.ring_ptr(), images);
}

DualModule module_sum(const DualModule& a, const DualModule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  auto all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return DualModule::span_of(a.ring_ptr(), all);
}

namespace {

MonomialIndex support_index(const Ring& ring, const std::vector<const std::vector<Polynomial>*>& sets,
                            const std::vector<Exponent>& extra) {
  std::vector<Exponent> monos = extra;
  for (const auto* s : sets) {
    for (const auto& f : *s) {
      for (const auto& t : f.terms()) monos.push_back(t.exponent);
    }
  }
  const auto& order = ring.order();
  std::sort(monos.begin(), monos.end(), [&](const Exponent& x, const Exponent& y) {
    return order.compare(x, y) == std::strong_ordering::greater;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  return MonomialIndex(std::move(monos));
}

SparseRow shifted(const SparseRow& row, std::uint32_t offset) {
  SparseRow out = row;
  for (auto& e : out) e.first += offset;
  return out;
}

SparseRow concat(const SparseRow& left, const SparseRow& right_shifted) {
  SparseRow out = left;
  out.insert(out.end(), right_shifted.begin(), right_shifted.end());
  return out;
}

// Zassenhaus: rows (a | a) and (b | 0); rows pivoting in the right half span A ∩ B.
DualModule zassenhaus(const RingPtr& ring, const std::vector<Polynomial>& a,
                      const std::vector<Polynomial>& b, const MonomialIndex& index) {
  const auto n = static_cast<std::uint32_t>(index.size());
  RowEchelon ech(ring->field());
  for (const auto& f : a) {
    const auto r = index.to_row(f);
    ech.insert(concat(r, shifted(r, n)));
  }
  for (const auto& f : b) ech.insert(index.to_row(f));
  std::vector<Polynomial> out;
  for (const auto& row : ech.rows()) {
    if (row.front().first < n) continue;
    SparseRow right;
    for (const auto& [c, v] : row) right.emplace_back(c - n, v);
    out.push_back(index.to_polynomial(ring, right));
  }
  return DualModule::span_of(ring, out);
}

}  // namespace

DualModule module_intersect(const DualModule& a, const DualModule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.is_zero() || b.is_zero()) return DualModule(a.ring_ptr());
  const auto index = support_index(a.ring(), {&a.basis(), &b.basis()}, {});
  return zassenhaus(a.ring_ptr(), a.basis(), b.basis(), index);
}

DualModule coordinate_intersect(const DualModule& module,
                                const std::vector<Exponent>& monomials) {
  if (module.is_zero() || monomials.empty()) return DualModule(module.ring_ptr());
  const auto index = support_index(module.ring(), {&module.basis()}, monomials);
  std::vector<Polynomial> coords;
  for (const auto& e : monomials) coords.push_back(Polynomial::monomial(module.ring_ptr(), e));
  return zassenhaus(module.ring_ptr(), module.basis(), coords, index);
}

DualModule perp_ideal(const Ideal& ideal, std::optional<unsigned> degree_bound) {
  const unsigned n = artinian_bound(ideal, 64, ideal.truncation());
  if (n == 0) return DualModule(ideal.ring_ptr());
  if (degree_bound && *degree_bound + 1 < n) {
    throw Error(ErrorKind::DegenerateInput,
                "degree bound " + std::to_string(*degree_bound) + " is below the socle degree " +
                    std::to_string(n - 1));
  }
  const unsigned b = n - 1;
  const auto& ring = ideal.ring_ptr();
  // ascending columns: pivots are small monomials, free columns lead
  const auto index = MonomialIndex::up_to_degree(*ring, b, false);

  RowEchelon ech(ring->field());
  for (const auto& g0 : ideal.generators()) {
    const Polynomial g = g0.truncate(b + 1);
    if (g.is_zero()) continue;
    const unsigned low = static_cast<unsigned>(g.order());
    for (const auto& e : enumerate_monomials(ring->size(), 0, b - low)) {
      SparseRow row;
      for (const auto& t : g.terms()) {
        if (e.degree() + t.exponent.degree() > b) continue;
        row.emplace_back(static_cast<std::uint32_t>(index.find(e + t.exponent)), t.coefficient);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      ech.insert(row);
    }
  }

  std::vector<Polynomial> elems;
  for (const auto& v : ech.orthogonal_complement(static_cast<std::uint32_t>(index.size()))) {
    elems.push_back(index.to_polynomial(ring, v));
  }
  DualModule out = DualModule::span_of(ring, elems);
  if (!out.is_closed()) throw Error(ErrorKind::Inconsistency, "inverse system is not closed");
  return out;
}

Annihilator perp_module(const DualModule& module) {
  const auto& ring = module.ring_ptr();
  if (module.is_zero()) {
    return {Ideal::from_reduced_basis(ring, {Polynomial::constant(ring, 1)}, std::nullopt), 0,
            true};
  }
  const unsigned b = static_cast<unsigned>(module.max_degree());
  const auto index = MonomialIndex::up_to_degree(*ring, b, true);
  const auto ncols = static_cast<std::uint32_t>(index.size());

  RowEchelon w(ring->field());
  for (const auto& f : module.basis()) w.insert(index.to_row(f));
  const auto complement = w.orthogonal_complement(ncols);

  if (!ring->order().is_degree_compatible()) {
    std::vector<Polynomial> gens;
    for (const auto& v : complement) gens.push_back(index.to_polynomial(ring, v));
    return {Ideal(ring, std::move(gens), b + 1), b + 1, false};
  }

  // descending columns: the reduced echelon form of the complement is the
  // degree <= b part of the reduced basis
  RowEchelon v(ring->field());
  for (const auto& row : complement) v.insert(row);
  std::vector<Exponent> leads;
  std::vector<Polynomial> basis;
  const auto rows = v.rows();
  // smallest leads first so that divisors are seen before multiples
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const auto& row = *it;
    const Exponent& lead = index.monomial(row.front().first);
    bool minimal = true;
    for (const auto& l : leads) minimal = minimal && !l.divides(lead);
    if (!minimal) continue;
    leads.push_back(lead);
    basis.push_back(index.to_polynomial(ring, row));
  }
  for (const auto& e : enumerate_monomials(ring->size(), b + 1, b + 1)) {
    bool minimal = true;
    for (const auto& l : leads) minimal = minimal && !l.divides(e);
    if (minimal) basis.push_back(Polynomial::monomial(ring, e));
  }
  const auto& order = ring->order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.compare(x.leading_exponent(), y.leading_exponent()) ==
           std::strong_ordering::greater;
  });
  return {Ideal::from_reduced_basis(ring, std::move(basis), b + 1), b + 1, false};
}

std::vector<Polynomial> socle_basis(const Ideal& ideal) {
  const Ideal art = make_artinian(ideal, 64, ideal.truncation());
  auto standard = standard_monomials(art);
  if (standard.empty()) return {};
  std::reverse(standard.begin(), standard.end());
  // ascending columns so that each kernel vector leads with its free column
  const MonomialIndex index(standard);
  const auto& ring = art.ring_ptr();

  std::map<std::pair<std::size_t, std::uint32_t>, SparseRow> rows;
  for (std::uint32_t c = 0; c < index.size(); ++c) {
    const auto mono = Polynomial::monomial(ring, index.monomial(c));
    for (std::size_t i = 0; i < ring->size(); ++i) {
      const auto nf = normal_form(Polynomial::variable(ring, i) * mono, art);
      for (const auto& t : nf.terms()) {
        const auto s = index.find(t.exponent);
        if (s < 0) throw Error(ErrorKind::Inconsistency, "normal form left the standard basis");
        rows[{i, static_cast<std::uint32_t>(s)}].emplace_back(c, t.coefficient);
      }
    }
  }
  RowEchelon ech(ring->field());
  for (auto& [key, row] : rows) ech.insert(row);

  std::vector<Polynomial> out;
  for (const auto& v : ech.orthogonal_complement(static_cast<std::uint32_t>(index.size()))) {
    out.push_back(index.to_polynomial(ring, v));
  }
  const auto& order = ring->order();
  std::sort(out.begin(), out.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.compare(x.leading_exponent(), y.leading_exponent()) ==
           std::strong_ordering::greater;
  });
  return out;
}

std::vector<Polynomial> minimal_cogenerators(const DualModule& module) {
  const auto& ring = module.ring_ptr();
  PolynomialEchelon contractions(ring);
  for (const auto& f : module.basis()) {
    for (std::size_t i = 0; i < ring->size(); ++i) {
      contractions.insert(contract(Polynomial::variable(ring, i), f));
    }
  }
  PolynomialEchelon rest(ring);
  for (const auto& f : module.basis()) rest.insert(contractions.reduce(f));
  return rest.basis();
}

}  // namespace macdual
