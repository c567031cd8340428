#include "macdual/limit_system.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "macdual/error.hpp"

namespace macdual {

std::string to_string(const MultiIndex& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ")";
  return os.str();
}

std::vector<MultiIndex> index_box(std::size_t d, unsigned bound) {
  std::vector<MultiIndex> out;
  if (d == 0) return {MultiIndex{}};
  if (bound == 0) return out;
  MultiIndex m(d, 1);
  while (true) {
    out.push_back(m);
    std::size_t i = d;
    while (i > 0 && m[i - 1] == bound) m[--i] = 1;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

const std::vector<Polynomial>& LimitInverseSystem::at(const MultiIndex& m) const {
  auto it = family.find(m);
  if (it == family.end()) {
    throw Error(ErrorKind::Inconsistency, "no entry H_" + to_string(m) + " in the family");
  }
  return it->second;
}

DualModule LimitInverseSystem::module_at(const MultiIndex& m) const {
  return DualModule::generated_by(ring, at(m));
}

namespace {

unsigned total(const MultiIndex& m) {
  unsigned t = 0;
  for (auto v : m) t += v;
  return t;
}

MultiIndex diagonal(std::size_t d, unsigned k) { return MultiIndex(d, k); }

/// z^a for a multi-index over the z-block.
Polynomial z_power(const RingPtr& ring, const MultiIndex& a) {
  Exponent e(ring->size());
  for (std::size_t i = 0; i < a.size(); ++i) e.set(ring->z_block()[i], a[i]);
  return Polynomial::monomial(ring, e);
}

std::vector<Polynomial> z_powers(const RingPtr& ring, const MultiIndex& m) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    MultiIndex a(m.size(), 0);
    a[i] = m[i];
    out.push_back(z_power(ring, a));
  }
  return out;
}

int max_degree(const std::vector<Polynomial>& fs) {
  int d = -1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  return d;
}

}  // namespace

std::vector<Exponent> vspace_monomials(const Ring& ring, const VSpace& v) {
  const int top = static_cast<int>(total(v.m)) + v.k;
  std::vector<Exponent> out;
  if (top < 0 || v.m.at(v.j) < 1) return out;
  const auto z = ring.z_block().at(v.j);
  for (const auto& e : enumerate_monomials(ring.size(), 0, static_cast<unsigned>(top))) {
    if (e[z] + 1 < v.m[v.j]) out.push_back(e);
  }
  return out;
}

Ideal vspace_ideal(const RingPtr& ring, const VSpace& v) {
  const int top = static_cast<int>(total(v.m)) + v.k;
  MultiIndex a(v.m.size(), 0);
  a.at(v.j) = v.m.at(v.j) == 0 ? 0 : v.m[v.j] - 1;
  return Ideal(ring, {z_power(ring, a)}, static_cast<unsigned>(std::max(top + 1, 0)));
}

Ideal artinian_reduction(const Ideal& ideal, const MultiIndex& m) {
  const auto& ring = ideal.ring_ptr();
  if (m.size() != ring->dimension()) {
    throw Error(ErrorKind::LengthMismatch, "multi-index " + to_string(m) + " has length " +
                                               std::to_string(m.size()) + ", expected " +
                                               std::to_string(ring->dimension()));
  }
  for (auto v : m) {
    if (v == 0) throw Error(ErrorKind::DegenerateInput, "multi-index entries must be positive");
  }
  Ideal reduced = ideal.plus(z_powers(ring, m));
  try {
    return make_artinian(reduced);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnboundedQuotient) throw;
    throw Error(ErrorKind::Pipeline, "Artinian reduction at m = " + to_string(m) +
                                         " is not Artinian; the z-block does not cut the "
                                         "quotient down to dimension zero (" +
                                         e.what() + ")");
  }
}

DualTower dual_tower(const Ideal& ideal, unsigned bound, const TowerOptions& options) {
  const auto& ring = ideal.ring_ptr();
  const auto d = ring->dimension();
  if (d > 0 && bound == 0) throw Error(ErrorKind::DegenerateInput, "tower bound must be >= 1");
  if (d > 0 && !options.trust_regular) {
    std::vector<Polynomial> zs;
    for (auto i : ring->z_block()) zs.push_back(Polynomial::variable(ring, i));
    if (!is_regular_sequence(zs, ideal)) {
      throw Error(ErrorKind::Pipeline,
                  "the z-block is not a regular sequence modulo the ideal (checked through "
                  "polynomial colons; pass trust-regular to override)");
    }
  }

  const auto box = index_box(d, bound);
  std::vector<std::optional<DualModule>> slots(box.size());
  std::vector<std::exception_ptr> errors(box.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < box.size(); i = next++) {
      try {
        slots[i] = perp_ideal(artinian_reduction(ideal, box[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, box.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  DualTower out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.emplace(box[i], std::move(*slots[i]));
  }
  return out;
}

namespace {

// Solves zprod ∘ F = h over F in W through rows (zprod∘b_j | e_j); rows
// pivoting on the right half span the kernel.
class LiftSolver {
 public:
  LiftSolver(const RingPtr& ring, const Polynomial& zprod, const DualModule& w)
      : ring_(ring), basis_(w.basis()), ech_(ring->field()), kernel_(ring) {
    std::vector<Polynomial> images;
    std::vector<Exponent> monos;
    for (const auto& b : basis_) {
      images.push_back(contract(zprod, b));
      for (const auto& t : images.back().terms()) monos.push_back(t.exponent);
    }
    const auto& order = ring->order();
    std::sort(monos.begin(), monos.end(), [&](const Exponent& x, const Exponent& y) {
      return order.compare(x, y) == std::strong_ordering::greater;
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    index_ = MonomialIndex(std::move(monos));
    n_ = static_cast<std::uint32_t>(index_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      auto row = index_.to_row(images[j]);
      row.emplace_back(n_ + static_cast<std::uint32_t>(j), Scalar::one(ring->field()));
      ech_.insert(row);
    }
    for (const auto& row : ech_.rows()) {
      if (row.front().first >= n_) kernel_.insert(combine(row, Scalar::one(ring->field())));
    }
  }

  /// Zero when h is not in the image.
  Polynomial solve(const Polynomial& h) const {
    for (const auto& t : h.terms()) {
      if (index_.find(t.exponent) < 0) return Polynomial(ring_);
    }
    const auto rem = ech_.reduce(index_.to_row(h));
    if (!rem.empty() && rem.front().first < n_) return Polynomial(ring_);
    return kernel_.reduce(combine(rem, -Scalar::one(ring_->field())));
  }

 private:
  Polynomial combine(const SparseRow& row, const Scalar& sign) const {
    Polynomial f(ring_);
    const Exponent zero(ring_->size());
    for (const auto& [c, v] : row) {
      if (c >= n_) f = f.sub_scaled_shift(-(sign * v), zero, basis_[c - n_]);
    }
    return f;
  }

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  MonomialIndex index_;
  std::uint32_t n_ = 0;
  RowEchelon ech_;
  PolynomialEchelon kernel_;
};

}  // namespace

LimitInverseSystem section_lift(const RingPtr& ring, const DualTower& tower, unsigned bound) {
  const auto d = ring->dimension();
  LimitInverseSystem out;
  out.ring = ring;
  out.d = d;
  auto get = [&](const MultiIndex& m) -> const DualModule& {
    auto it = tower.find(m);
    if (it == tower.end()) {
      throw Error(ErrorKind::Inconsistency, "tower has no module at " + to_string(m));
    }
    return it->second;
  };

  if (d == 0) {
    const auto& w = get({});
    out.family[{}] = minimal_cogenerators(w);
    out.r = out.family[{}].size();
    out.s = static_cast<unsigned>(std::max(w.max_degree(), 0));
    return out;
  }
  if (bound == 0) throw Error(ErrorKind::DegenerateInput, "section bound must be >= 1");
  out.bound = bound;

  Exponent ze(ring->size());
  for (auto i : ring->z_block()) ze.set(i, 1);
  const auto zprod = Polynomial::monomial(ring, ze);

  std::vector<std::vector<Polynomial>> diag;
  const auto& w1 = get(diagonal(d, 1));
  diag.push_back(minimal_cogenerators(w1));
  out.r = diag[0].size();
  out.s = static_cast<unsigned>(std::max(w1.max_degree(), 0));

  for (unsigned k = 1; k < bound; ++k) {
    const LiftSolver solver(ring, zprod, get(diagonal(d, k + 1)));
    std::vector<Polynomial> next;
    for (const auto& h : diag.back()) {
      auto f = solver.solve(h);
      if (f.is_zero() || !(contract(zprod, f) == h)) {
        throw Error(ErrorKind::Inconsistency,
                    "no lift of " + h.to_string(Polynomial::Notation::Dual) + " to stage " +
                        to_string(diagonal(d, k + 1)) +
                        "; the tower is not surjective (non Cohen-Macaulay input?)");
      }
      next.push_back(std::move(f));
    }
    diag.push_back(std::move(next));
  }

  for (const auto& m : index_box(d, bound)) {
    const unsigned k = *std::max_element(m.begin(), m.end());
    MultiIndex a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = k - m[i];
    const auto za = z_power(ring, a);
    std::vector<Polynomial> hm;
    for (const auto& h : diag[k - 1]) hm.push_back(contract(za, h));
    out.family[m] = std::move(hm);
  }

  for (const auto& m : index_box(d, bound)) {
    for (std::size_t j = 0; j < d; ++j) {
      if (m[j] < 2) continue;
      auto n = m;
      --n[j];
      const auto zj = Polynomial::variable(ring, ring->z_block()[j]);
      for (std::size_t i = 0; i < out.r; ++i) {
        if (!(contract(zj, out.family[m][i]) == out.family[n][i])) {
          throw Error(ErrorKind::Inconsistency, "section is not compatible at " + to_string(m));
        }
      }
    }
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionReport& c) { return c.passed; });
}

const ConditionReport* VerifyReport::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify_lis(const LimitInverseSystem& system) {
  const auto& ring = system.ring;
  const auto d = system.d;
  ConditionReport dimension{"dimension", true, {}};
  ConditionReport minimality{"minimality", true, {}};
  ConditionReport intersection{"intersection", true, {}};
  ConditionReport degree{"degree", true, {}};
  ConditionReport compatibility{"compatibility", true, {}};
  ConditionReport annihilation{"z-annihilation", true, {}};
  ConditionReport top{"top-degree", true, {}};
  auto fail = [](ConditionReport& c, std::string w) {
    c.passed = false;
    c.witnesses.push_back(std::move(w));
  };

  const auto box = index_box(d, system.bound);
  std::map<MultiIndex, DualModule> modules;
  auto module = [&](const MultiIndex& m) -> const DualModule& {
    auto it = modules.find(m);
    if (it == modules.end()) it = modules.emplace(m, system.module_at(m)).first;
    return it->second;
  };

  for (const auto& m : box) {
    if (!system.family.count(m)) {
      fail(minimality, "m = " + to_string(m) + ": entry missing");
      continue;
    }
    const auto& hm = system.at(m);
    const auto span = DualModule::span_of(ring, hm);
    if (span.dimension() != system.r || hm.size() != system.r) {
      fail(dimension, "m = " + to_string(m) + ": dim span H_m = " +
                          std::to_string(span.dimension()) + ", expected " +
                          std::to_string(system.r));
    }
    if (span.is_zero()) fail(minimality, "m = " + to_string(m) + ": H_m = 0");

    const int expected = static_cast<int>(total(m) + system.s) - static_cast<int>(d);
    const int got = max_degree(hm);
    if (got != expected) {
      fail(degree, "m = " + to_string(m) + ": max deg H_m = " + std::to_string(got) +
                       ", expected " + std::to_string(expected));
    }

    for (std::size_t j = 0; j < d; ++j) {
      MultiIndex a(d, 0);
      a[j] = m[j];
      const auto zpow = z_power(ring, a);
      for (const auto& h : hm) {
        const auto c = contract(zpow, h);
        if (!c.is_zero()) {
          fail(annihilation, "m = " + to_string(m) + ", j = " + std::to_string(j + 1) + ": " +
                                 zpow.to_string() + " does not kill " +
                                 h.to_string(Polynomial::Notation::Dual));
        }
      }
      if (m[j] < 2) continue;
      auto n = m;
      --n[j];
      if (system.family.count(n)) {
        const auto& hn = system.at(n);
        const auto zj = Polynomial::variable(ring, ring->z_block()[j]);
        for (std::size_t i = 0; i < std::min(hm.size(), hn.size()); ++i) {
          if (!(contract(zj, hm[i]) == hn[i])) {
            fail(compatibility, "m = " + to_string(m) + ", j = " + std::to_string(j + 1) +
                                    ", element " + std::to_string(i + 1));
          }
        }
        if (hm.size() != hn.size()) {
          fail(compatibility, "m = " + to_string(m) + ": family sizes differ along z_" +
                                  std::to_string(j + 1));
        }
        const VSpace v{j, static_cast<int>(system.s) - static_cast<int>(d), m};
        const auto part = coordinate_intersect(module(m), vspace_monomials(*ring, v));
        const auto& lower = module(n);
        for (const auto& f : part.basis()) {
          if (!lower.contains(f)) {
            fail(intersection, "m = " + to_string(m) + ", j = " + std::to_string(j + 1) + ": " +
                                   f.to_string(Polynomial::Notation::Dual) +
                                   " lies outside W_" + to_string(n));
            break;
          }
        }
      }
    }
  }

  const MultiIndex one(d, 1);
  if (system.family.count(one)) {
    const int got = max_degree(system.at(one));
    if (got != static_cast<int>(system.s)) {
      fail(top, "max deg H_1 = " + std::to_string(got) + ", expected " +
                    std::to_string(system.s));
    }
  } else {
    fail(top, "H_1 missing");
  }

  VerifyReport report;
  report.conditions = {dimension, minimality, intersection, degree, compatibility, annihilation,
                       top};
  return report;
}

bool artinian_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  const unsigned ta = artinian_bound(a, 64, a.truncation());
  const unsigned tb = artinian_bound(b, 64, b.truncation());
  if (ta != tb) return false;
  return equal(Ideal(a.ring_ptr(), a.generators(), ta), Ideal(b.ring_ptr(), b.generators(), tb));
}

namespace {

// j + <z^m> agrees with the annihilator, including its Artinian bound.
bool matches(const Ideal& j, const Annihilator& ann) {
  const unsigned t = ann.certificate_degree;
  try {
    if (artinian_bound(j, t + 1, t) != t) return false;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnboundedQuotient) return false;
    throw;
  }
  return equal(Ideal(j.ring_ptr(), j.generators(), t), ann.ideal);
}

std::vector<Polynomial> stage_generators(const RingPtr& ring, const Annihilator& ann,
                                         unsigned t) {
  const Ideal cut(ring, ann.ideal.basis(), t);
  std::vector<Polynomial> gens;
  for (const auto& g : cut.basis()) {
    if (g.degree() < static_cast<int>(t)) gens.push_back(g);
  }
  // drop generators implied by the others modulo m^t, highest degree first
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() > b.degree();
  });
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) others.push_back(gens[k]);
    }
    if (contains(Ideal(ring, others, t), gens[i])) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  const auto& order = ring->order();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_exponent(), b.leading_exponent()) ==
           std::strong_ordering::greater;
  });
  return gens;
}

}  // namespace

Reconstruction reconstruct(const LimitInverseSystem& system) {
  const auto& ring = system.ring;
  const auto d = system.d;
  if (d == 0) {
    auto ann = perp_module(system.module_at({}));
    return {ann.ideal, 0, true};
  }
  const auto box = index_box(d, system.bound);
  std::map<MultiIndex, Annihilator> anns;
  for (const auto& m : box) anns.emplace(m, perp_module(system.module_at(m)));

  std::optional<Ideal> last;
  for (unsigned t = 1; t <= system.bound; ++t) {
    const Ideal candidate(ring, stage_generators(ring, anns.at(diagonal(d, t)), t));
    last = candidate;
    bool ok = true;
    for (const auto& m : box) {
      if (!matches(candidate.plus(z_powers(ring, m)), anns.at(m))) {
        ok = false;
        break;
      }
    }
    if (ok) return {candidate, t, true};
  }
  return {*last, system.bound, false};
}

Invariants invariants_of(const Ideal& ideal) {
  const auto d = ideal.ring().dimension();
  const Ideal reduced = d == 0 ? make_artinian(ideal) : artinian_reduction(ideal, MultiIndex(d, 1));
  Invariants inv;
  inv.d = d;
  inv.r = socle_basis(reduced).size();
  const auto h = hilbert_data(reduced);
  inv.s = static_cast<unsigned>(std::max(h.socle_degree(), 0));
  return inv;
}

}  // namespace macdual
