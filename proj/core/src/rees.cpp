#include "macdual/rees.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "macdual/duality.hpp"
#include "macdual/error.hpp"
#include "macdual/linalg.hpp"

namespace macdual {

std::string FilterOrder::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::AtLeastCap: return ">=" + std::to_string(value);
    case Kind::Infinite: return "inf";
  }
  return "?";
}

struct FiltrationContext::Cache {
  std::mutex mutex;
  std::map<unsigned, Ideal> powers;
};

FiltrationContext::FiltrationContext(RingPtr ring, std::vector<Polynomial> generators,
                                     std::optional<Ideal> base)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      base_(base ? *base : Ideal(ring_)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring_ptr());
  require_same_ring(ring_, base_.ring_ptr());
}

const Ideal& FiltrationContext::power(unsigned k) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->powers.find(k);
  if (it != cache_->powers.end()) return it->second;
  std::vector<Polynomial> gens;
  if (k == 0) {
    gens.push_back(Polynomial::constant(ring_, 1));
  } else {
    // products g^a with |a| = k
    for (const auto& a : enumerate_monomials(generators_.size(), k, k)) {
      Polynomial p = Polynomial::constant(ring_, 1);
      for (std::size_t i = 0; i < generators_.size(); ++i) p *= generators_[i].pow(a[i]);
      gens.push_back(std::move(p));
    }
  }
  return cache_->powers.emplace(k, base_.plus(gens)).first->second;
}

FilterOrder FiltrationContext::ord(const Polynomial& p, unsigned cap) const {
  require_same_ring(ring_, p.ring_ptr());
  if (p.is_zero() || contains(base_, p)) return FilterOrder::infinite();
  for (unsigned k = 1; k <= cap; ++k) {
    if (!contains(power(k), p)) return FilterOrder::finite(k - 1);
  }
  return FilterOrder::at_least(cap);
}

MonoidIdeal::MonoidIdeal(std::size_t t, std::vector<Exponent> generators)
    : t_(t), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != t_) {
      throw Error(ErrorKind::LengthMismatch, "monoid generator of length " +
                                                 std::to_string(g.size()) + " in N^" +
                                                 std::to_string(t_));
    }
    if (g.degree() == 0) throw Error(ErrorKind::DegenerateInput, "monoid generator is zero");
  }
}

MonoidIdeal MonoidIdeal::diagonal(const std::vector<unsigned>& m) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Exponent e(m.size());
    e.set(i, m[i]);
    gens.push_back(e);
  }
  return MonoidIdeal(m.size(), std::move(gens));
}

bool MonoidIdeal::contains(const Exponent& n) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Exponent& g) { return g.divides(n); });
}

std::vector<unsigned> MonoidIdeal::box() const {
  std::vector<unsigned> c(t_, 0);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < t_; ++i) c[i] = std::max(c[i], g[i]);
  }
  return c;
}

std::vector<Exponent> monoid_socle(const MonoidIdeal& monoid) {
  const auto t = monoid.dimension();
  const auto c = monoid.box();
  std::vector<Exponent> out;
  if (t == 0 || std::any_of(c.begin(), c.end(), [](unsigned v) { return v == 0; })) return out;
  Exponent n(t);
  while (true) {
    if (!monoid.contains(n)) {
      bool corner = true;
      for (std::size_t i = 0; i < t && corner; ++i) corner = monoid.contains(n + Exponent::unit(t, i));
      if (corner) out.push_back(n);
    }
    std::size_t i = t;
    while (i > 0 && n[i - 1] + 1 == c[i - 1]) n.set(--i, 0);
    if (i == 0) break;
    n.set(i - 1, n[i - 1] + 1);
  }
  return out;
}

namespace {

bool all_homogeneous(const std::vector<Polynomial>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ReesReport rees_dimension_check(const std::vector<Polynomial>& g, const Ideal& ideal, unsigned l,
                                unsigned degcap) {
  ReesReport report;
  report.l = l;
  if (g.empty()) throw Error(ErrorKind::DegenerateInput, "empty sequence");
  report.regular = is_regular_sequence(g, ideal);
  if (!report.regular) {
    report.note = "sequence is not regular; check skipped";
    return report;
  }
  const FiltrationContext ctx(ideal.ring_ptr(), g, ideal);
  const Ideal& quotient = ctx.power(1);

  if (all_homogeneous(g) && all_homogeneous(ideal.generators())) {
    report.graded_piece =
        truncated_length(ctx.power(l + 1), degcap) - truncated_length(ctx.power(l), degcap);
    std::uint64_t sum = 0;
    for (const auto& a : enumerate_monomials(g.size(), l, l)) {
      int shift = 0;
      for (std::size_t i = 0; i < g.size(); ++i) shift += static_cast<int>(a[i]) * g[i].degree();
      const int k = static_cast<int>(degcap) - shift;
      if (k > 0) sum += truncated_length(quotient, static_cast<unsigned>(k));
    }
    report.polynomial_piece = sum;
    report.note = "graded slices below degree " + std::to_string(degcap);
  } else {
    try {
      (void)artinian_bound(quotient, std::max(degcap, 64u));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnboundedQuotient) throw;
      report.note = "needs homogeneous input or an m-primary I + <g>; check skipped";
      return report;
    }
    const auto top = hilbert_data(ctx.power(l + 1), std::max(degcap, 64u)).length;
    const auto low = hilbert_data(ctx.power(l), std::max(degcap, 64u)).length;
    report.graded_piece = top - low;
    report.polynomial_piece = binomial(l + g.size() - 1, g.size() - 1) * hilbert_data(quotient).length;
    report.note = "full Artinian lengths";
  }
  report.checked = true;
  report.passed = report.graded_piece == report.polynomial_piece;
  return report;
}

SocleProductReport socle_product_check(const Ideal& ideal, const std::vector<Polynomial>& h,
                                       const MonoidIdeal& monoid) {
  if (monoid.dimension() != h.size()) {
    throw Error(ErrorKind::LengthMismatch, "monoid ideal lives in N^" +
                                               std::to_string(monoid.dimension()) + " but " +
                                               std::to_string(h.size()) + " elements were given");
  }
  const auto& ring = ideal.ring_ptr();
  SocleProductReport report;
  report.regular = h.empty() || is_regular_sequence(h, ideal);
  if (!report.regular) {
    report.note = "sequence is not regular; check skipped";
    return report;
  }
  auto h_power = [&](const Exponent& n) {
    Polynomial p = Polynomial::constant(ring, 1);
    for (std::size_t j = 0; j < h.size(); ++j) p *= h[j].pow(n[j]);
    return p;
  };
  std::vector<Polynomial> hm;
  for (const auto& n : monoid.generators()) hm.push_back(h_power(n));
  const Ideal big = make_artinian(ideal.plus(hm));
  const Ideal base = ideal.plus(h);

  const auto soc_big = socle_basis(big);
  const auto soc_base = socle_basis(base);
  const auto soc_m = monoid_socle(monoid);
  report.socle_dimension = soc_big.size();
  report.base_socle_dimension = soc_base.size();
  report.monoid_socle_size = soc_m.size();

  PolynomialEchelon ech(ring);
  report.basis_in_socle = true;
  for (const auto& n : soc_m) {
    const auto hn = h_power(n);
    for (const auto& sigma : soc_base) {
      auto p = sigma * hn;
      for (std::size_t i = 0; i < ring->size() && report.basis_in_socle; ++i) {
        report.basis_in_socle = contains(big, Polynomial::variable(ring, i) * p);
      }
      ech.insert(normal_form(p, big));
      report.predicted_basis.push_back(std::move(p));
    }
  }
  report.basis_independent = ech.rank() == report.predicted_basis.size();
  report.passed = report.socle_dimension == report.monoid_socle_size * report.base_socle_dimension &&
                  report.basis_in_socle && report.basis_independent;
  return report;
}

}  // namespace macdual
