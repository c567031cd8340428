#include "macdual/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "macdual/error.hpp"

namespace macdual {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, std::optional<unsigned> truncation)
    : ring_(std::move(ring)), truncation_(truncation), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring_ptr());
    if (!g.is_zero()) generators_.push_back(truncation_ ? g.truncate(*truncation_) : std::move(g));
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                                std::optional<unsigned> truncation) {
  Ideal out(std::move(ring), basis, truncation);
  std::call_once(out.cache_->once, [&] {
    out.cache_->basis = std::move(basis);
    out.cache_->ready = true;
  });
  return out;
}

std::vector<Polynomial> Ideal::all_generators() const {
  auto out = generators_;
  if (truncation_) {
    auto m = power_of_maximal_ideal(ring_, *truncation_);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger_basis(ring_, generators_, truncation_);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_basis() const { return cache_->ready; }

Ideal Ideal::with_truncation(unsigned n) const {
  if (truncation_ && *truncation_ <= n) return *this;
  return Ideal(ring_, generators_, n);
}

Ideal Ideal::without_truncation() const {
  if (!truncation_) return *this;
  return Ideal(ring_, generators_);
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  auto gens = generators_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens), truncation_);
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  std::optional<unsigned> t = truncation_;
  if (other.truncation_) t = t ? std::min(*t, *other.truncation_) : other.truncation_;
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens), t);
}

Ideal Ideal::in_ring(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(gens), truncation_);
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().leading_exponent().degree() == 0;
}

std::vector<Polynomial> power_of_maximal_ideal(const RingPtr& ring, unsigned n) {
  std::vector<Polynomial> out;
  for (const auto& e : enumerate_monomials(ring->size(), n, n)) {
    out.push_back(Polynomial::monomial(ring, e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct BasisElement {
  Polynomial poly;
  bool truncation_monomial = false;
};

class Reducer {
 public:
  Reducer(const std::vector<BasisElement>& elements, const std::vector<std::size_t>& active,
          std::optional<unsigned> truncation)
      : elements_(elements), truncation_(truncation) {
    for (auto i : active) {
      if (!elements_[i].truncation_monomial) divisors_.push_back(i);
    }
  }

  const BasisElement* find_divisor(const Exponent& e) const {
    for (auto i : divisors_) {
      if (elements_[i].poly.leading_exponent().divides(e)) return &elements_[i];
    }
    return nullptr;
  }

  /// Full reduction: no term of the result is divisible by a leading term.
  Polynomial reduce(const Polynomial& p) const {
    const auto& ring = p.ring_ptr();
    Polynomial work = cut(p);
    std::vector<Term> rest;
    while (!work.is_zero()) {
      const Term& lt = work.leading();
      if (const auto* g = find_divisor(lt.exponent)) {
        const Scalar c = lt.coefficient / g->poly.leading_coefficient();
        work = cut(work.sub_scaled_shift(c, lt.exponent - g->poly.leading_exponent(), g->poly));
      } else {
        rest.push_back(lt);
        // drop the leading term
        std::vector<Term> tail(work.terms().begin() + 1, work.terms().end());
        work = Polynomial(ring, std::move(tail));
      }
    }
    return Polynomial(ring, std::move(rest));
  }

  Polynomial cut(const Polynomial& p) const {
    if (!truncation_) return p;
    for (const auto& t : p.terms()) {
      if (t.exponent.degree() >= *truncation_) return p.truncate(*truncation_);
    }
    return p;
  }

 private:
  const std::vector<BasisElement>& elements_;
  std::vector<std::size_t> divisors_;
  std::optional<unsigned> truncation_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, std::optional<unsigned> truncation)
      : ring_(std::move(ring)), truncation_(truncation) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    if (truncation_) {
      for (auto& m : power_of_maximal_ideal(ring_, *truncation_)) {
        active_.push_back(elements_.size());
        elements_.push_back({std::move(m), true});
      }
    }
    // deterministic insertion: ascending leading terms first
    std::vector<Polynomial> gens;
    for (const auto& g : generators) {
      auto c = Reducer(elements_, active_, truncation_).cut(g);
      if (!c.is_zero()) gens.push_back(c.monic());
    }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return less(a.leading_exponent(), b.leading_exponent());
    });
    for (const auto& g : gens) {
      auto h = Reducer(elements_, active_, truncation_).reduce(g);
      if (!h.is_zero()) add(h.monic());
    }
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (less(it->lcm, best->lcm)) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      auto s = spoly(p);
      auto h = Reducer(elements_, active_, truncation_).reduce(s);
      if (!h.is_zero()) add(h.monic());
    }
    return interreduce();
  }

 private:
  bool less(const Exponent& a, const Exponent& b) const {
    return ring_->order().compare(a, b) == std::strong_ordering::less;
  }

  const Exponent& lt(std::size_t i) const { return elements_[i].poly.leading_exponent(); }

  Polynomial spoly(const Pair& p) const {
    const auto& f = elements_[p.i].poly;
    const auto& g = elements_[p.j].poly;
    // both monic
    const Polynomial a = f.mul_monomial(p.lcm - f.leading_exponent());
    return a.sub_scaled_shift(Scalar::one(ring_->field()), p.lcm - g.leading_exponent(), g);
  }

  // Gebauer–Möller update
  void add(Polynomial h_poly) {
    const std::size_t h = elements_.size();
    elements_.push_back({std::move(h_poly), false});
    const Exponent& lh = lt(h);

    std::vector<Pair> candidates;
    for (auto g : active_) candidates.push_back({h, g, lh.lcm(lt(g))});
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto& c = candidates[k];
      bool keep = lh.coprime(lt(c.j));
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l) {
          if (candidates[l].lcm.divides(c.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < kept.size() && keep; ++l) {
          if (kept[l].lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (auto& c : kept) {
      if (!lh.coprime(lt(c.j))) fresh.push_back(std::move(c));
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && !(lt(p.i).lcm(lh) == p.lcm) && !(lh.lcm(lt(p.j)) == p.lcm);
    });
    for (auto& f : fresh) pairs_.push_back(std::move(f));
    std::erase_if(active_, [&](std::size_t g) { return lh.divides(lt(g)); });
    active_.push_back(h);
  }

  std::vector<Polynomial> interreduce() {
    // active_ already has pairwise non-dividing leading terms
    std::vector<Polynomial> out;
    for (auto i : active_) {
      const auto& p = elements_[i].poly;
      if (elements_[i].truncation_monomial) {
        out.push_back(p);
        continue;
      }
      std::vector<std::size_t> others;
      for (auto j : active_) {
        if (j != i) others.push_back(j);
      }
      Reducer red(elements_, others, truncation_);
      // keep the leading term, reduce the tail
      std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
      auto rest = red.reduce(Polynomial(ring_, std::move(tail)));
      out.push_back(Polynomial::monomial(ring_, p.leading_exponent()) + rest);
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return less(b.leading_exponent(), a.leading_exponent());
    });
    return out;
  }

  RingPtr ring_;
  std::optional<unsigned> truncation_;
  std::vector<BasisElement> elements_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> buchberger_basis(const RingPtr& ring,
                                         const std::vector<Polynomial>& generators,
                                         std::optional<unsigned> truncation) {
  for (const auto& g : generators) require_same_ring(ring, g.ring_ptr());
  if (truncation && *truncation == 0) return {Polynomial::constant(ring, 1)};
  auto basis = Buchberger(ring, truncation).run(generators);
  for (const auto& b : basis) {
    if (b.leading_exponent().degree() == 0) return {Polynomial::constant(ring, 1)};
  }
  return basis;
}

Ideal buchberger(const Ideal& ideal) {
  (void)ideal.basis();
  return ideal;
}

Ideal buchberger(const Ideal& ideal, const MonomialOrder& order) {
  if (order == ideal.ring().order()) return buchberger(ideal);
  return buchberger(ideal.in_ring(ideal.ring().with_order(order)));
}

namespace {

Polynomial reduce_by_basis(const Polynomial& p, const std::vector<Polynomial>& basis,
                           std::optional<unsigned> truncation) {
  std::vector<BasisElement> elems;
  std::vector<std::size_t> active;
  for (const auto& b : basis) {
    active.push_back(elems.size());
    // truncation monomials are handled by the degree cut
    const bool trunc_mono =
        truncation && b.size() == 1 && b.leading_exponent().degree() == *truncation;
    elems.push_back({b, trunc_mono});
  }
  return Reducer(elems, active, truncation).reduce(p);
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const Ideal& ideal) {
  require_same_ring(p.ring_ptr(), ideal.ring_ptr());
  return reduce_by_basis(p, ideal.basis(), ideal.truncation());
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order) {
  if (order == ideal.ring().order()) return normal_form(p, ideal);
  const auto ring = ideal.ring().with_order(order);
  return normal_form(p.in_ring(ring), ideal.in_ring(ring));
}

bool contains(const Ideal& ideal, const Polynomial& p) { return normal_form(p, ideal).is_zero(); }

bool contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.all_generators()) {
    if (!contains(big, g)) return false;
  }
  return true;
}

bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  return a.basis() == b.basis();
}

// ---------------------------------------------------------------------------
// Intersection and colon

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;

  const auto& ring = a.ring();
  const std::size_t n = ring.size();
  auto names = ring.names();
  names.push_back(fresh_name(ring, "elim_t"));
  std::vector<std::size_t> perm{n};
  for (std::size_t i = 0; i < n; ++i) perm.push_back(ring.order().permutation()[i]);
  const auto order = MonomialOrder::block_elimination(n + 1, 1).with_permutation(perm);
  const auto big = std::make_shared<const Ring>(ring.field(), names, order, RingMode::Graded);

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      auto v = t.exponent.to_vector();
      v.push_back(0);
      terms.push_back({Exponent(v), t.coefficient});
    }
    return Polynomial(big, std::move(terms));
  };
  const auto t = Polynomial::variable(big, n);
  const auto one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.all_generators()) gens.push_back(t * lift(g));
  for (const auto& g : b.all_generators()) gens.push_back(one_minus_t * lift(g));

  std::vector<Polynomial> out;
  for (const auto& g : buchberger_basis(big, gens, std::nullopt)) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.exponent[n] != 0;
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      auto v = term.exponent.to_vector();
      v.pop_back();
      terms.push_back({Exponent(v), term.coefficient});
    }
    out.emplace_back(a.ring_ptr(), std::move(terms));
  }
  std::optional<unsigned> trunc;
  if (a.truncation() && b.truncation()) trunc = std::max(*a.truncation(), *b.truncation());
  return Ideal(a.ring_ptr(), std::move(out), trunc);
}

Ideal ideal_colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring_ptr(), f.ring_ptr());
  if (f.is_zero()) throw Error(ErrorKind::InvalidDivisor, "colon by the zero polynomial");
  const Ideal principal(ideal.ring_ptr(), {f});
  const Ideal inter = ideal_intersect(ideal.without_truncation().plus(ideal.all_generators()),
                                      principal);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring_ptr(), std::move(gens), ideal.truncation());
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& other) {
  require_same_ring(ideal.ring_ptr(), other.ring_ptr());
  const auto gens = other.all_generators();
  if (gens.empty()) return Ideal(ideal.ring_ptr(), {Polynomial::constant(ideal.ring_ptr(), 1)});
  std::optional<Ideal> acc;
  for (const auto& g : gens) {
    Ideal c = ideal_colon(ideal, g);
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Artinian quotients

namespace {

bool all_homogeneous(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::uint64_t count_standard(const std::vector<Polynomial>& basis, std::size_t nvars,
                             unsigned below_degree) {
  std::uint64_t count = 0;
  for (const auto& e : enumerate_monomials(nvars, 0, below_degree == 0 ? 0 : below_degree - 1)) {
    if (below_degree == 0) break;
    bool divisible = false;
    for (const auto& b : basis) {
      if (b.leading_exponent().divides(e)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t truncated_length(const Ideal& ideal, unsigned k) {
  if (k == 0) return 0;
  const unsigned t = ideal.truncation() ? std::min(*ideal.truncation(), k) : k;
  const Ideal trunc(ideal.ring_ptr(), ideal.generators(), t);
  return count_standard(trunc.basis(), ideal.ring().size(), t);
}

unsigned artinian_bound(const Ideal& ideal, unsigned ceiling, std::optional<unsigned> hint) {
  const auto n = ideal.ring().size();
  if (!ideal.ring().is_local() && all_homogeneous(ideal)) {
    // graded: m^N ⊆ I iff no standard monomial has degree N
    const auto& basis = ideal.basis();
    if (basis.size() == 1 && basis.front().leading_exponent().degree() == 0) return 0;
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = false;
      for (const auto& b : basis) {
        const auto& e = b.leading_exponent();
        pure = pure || (e[v] > 0 && e.degree() == e[v]);
      }
      if (!pure && !ideal.truncation()) {
        throw Error(ErrorKind::UnboundedQuotient, "quotient is not Artinian (variable " +
                                                      ideal.ring().name(v) +
                                                      " has no pure power in the initial ideal)");
      }
    }
    for (unsigned d = 0; d <= ceiling; ++d) {
      if (count_standard(basis, n, d + 1) == count_standard(basis, n, d)) return d;
    }
    throw Error(ErrorKind::UnboundedQuotient, "no Artinian bound below the ceiling");
  }

  // Nakayama criterion: m^N ⊆ I + m^(N+1), monotone in N
  std::map<unsigned, std::uint64_t> lengths;
  auto length = [&](unsigned k) {
    auto it = lengths.find(k);
    if (it != lengths.end()) return it->second;
    const auto v = truncated_length(ideal, k);
    lengths.emplace(k, v);
    return v;
  };
  auto stable = [&](unsigned k) { return length(k + 1) == length(k); };
  // in a polynomial ring the local answer must also hold globally
  auto certify = [&](unsigned k) {
    if (!ideal.ring().is_local()) {
      for (const auto& mono : power_of_maximal_ideal(ideal.ring_ptr(), k)) {
        if (!contains(ideal, mono)) {
          throw Error(ErrorKind::UnboundedQuotient,
                      "ideal is not primary to the maximal ideal (" + mono.to_string() +
                          " is not in it)");
        }
      }
    }
    return k;
  };
  const unsigned cap = ideal.truncation() ? std::min(ceiling, *ideal.truncation()) : ceiling;
  unsigned start = hint ? std::min(*hint, cap) : 0;
  if (stable(start)) {
    while (start > 0 && stable(start - 1)) --start;
    return certify(start);
  }
  for (unsigned k = start + 1; k <= cap; ++k) {
    if (stable(k)) return certify(k);
  }
  throw Error(ErrorKind::UnboundedQuotient,
              "quotient is not Artinian below degree " + std::to_string(ceiling));
}

Ideal make_artinian(const Ideal& ideal, unsigned ceiling, std::optional<unsigned> hint) {
  const unsigned n = artinian_bound(ideal, ceiling, hint);
  return ideal.with_truncation(n);
}

HilbertData hilbert_data(const Ideal& ideal, unsigned ceiling) {
  const unsigned n = artinian_bound(ideal, ceiling);
  HilbertData h;
  std::uint64_t prev = 0;
  for (unsigned k = 0; k < n; ++k) {
    const auto next = truncated_length(ideal, k + 1);
    h.values.push_back(next - prev);
    prev = next;
  }
  h.length = prev;
  return h;
}

std::vector<Exponent> standard_monomials(const Ideal& ideal) {
  const Ideal art = ideal.truncation() ? ideal : make_artinian(ideal);
  const auto& basis = art.basis();
  std::vector<Exponent> out;
  const unsigned t = *art.truncation();
  if (t == 0) return out;
  for (const auto& e : enumerate_monomials(art.ring().size(), 0, t - 1)) {
    bool divisible = false;
    for (const auto& b : basis) divisible = divisible || b.leading_exponent().divides(e);
    if (!divisible) out.push_back(e);
  }
  const auto& order = art.ring().order();
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) {
    return order.compare(a, b) == std::strong_ordering::greater;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Regularity

bool is_regular(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring_ptr(), ideal.ring_ptr());
  if (contains(ideal, f)) {
    throw Error(ErrorKind::DegenerateInput, "element " + f.to_string() + " lies in the ideal");
  }
  const Ideal colon = ideal_colon(ideal, f);
  return contains(ideal, colon);
}

bool is_regular_sequence(const std::vector<Polynomial>& seq, const Ideal& ideal) {
  Ideal acc = ideal;
  for (const auto& f : seq) {
    if (contains(acc, f) || !is_regular(f, acc)) return false;
    acc = acc.plus({f});
  }
  return true;
}

std::vector<Polynomial> find_linear_regular_sequence(const Ideal& ideal, std::size_t d,
                                                     std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  std::bernoulli_distribution sign(0.5);
  const auto& ring = ideal.ring_ptr();
  std::vector<Polynomial> seq;
  Ideal acc = ideal;
  for (std::size_t k = 0; k < d; ++k) {
    bool found = false;
    for (std::size_t t = 0; t < trials && !found; ++t) {
      Polynomial f(ring);
      for (std::size_t v = 0; v < ring->size(); ++v) {
        const int c = coeff(rng) * (sign(rng) ? -1 : 1);
        f += Polynomial::variable(ring, v) * Scalar::from_int(ring->field(), c);
      }
      if (f.is_zero() || contains(acc, f)) continue;
      if (is_regular(f, acc)) {
        seq.push_back(f);
        acc = acc.plus({f});
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::SearchExhausted, "no regular linear form found for position " +
                                                  std::to_string(k + 1) + " after " +
                                                  std::to_string(trials) + " trials");
    }
  }
  return seq;
}

}  // namespace macdual
