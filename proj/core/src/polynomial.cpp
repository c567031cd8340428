#include "macdual/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "macdual/error.hpp"

namespace macdual {

namespace {

bool greater(const MonomialOrder& order, const Exponent& a, const Exponent& b) {
  return order.compare(a, b) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto n = ring_->size();
  for (const auto& t : terms) {
    if (t.exponent.size() != n) {
      throw Error(ErrorKind::LengthMismatch, "term exponent length differs from ring size");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return greater(order, a.exponent, b.exponent);
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient.is_zero()) terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Exponent zero(ring->size());
  return monomial(std::move(ring), zero, c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  const auto s = Scalar::from_int(ring->field(), c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::monomial(RingPtr ring, const Exponent& e, const Scalar& c) {
  if (e.size() != ring->size()) {
    throw Error(ErrorKind::LengthMismatch, "monomial exponent length differs from ring size");
  }
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({e, c});
  return Polynomial(std::move(ring), std::move(t), Canonical{});
}

Polynomial Polynomial::monomial(RingPtr ring, const Exponent& e) {
  const auto one = Scalar::one(ring->field());
  return monomial(std::move(ring), e, one);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const auto n = ring->size();
  return monomial(std::move(ring), Exponent::unit(n, i));
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exponent.degree()));
  return d;
}

int Polynomial::order() const noexcept {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().exponent.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.exponent.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept { return degree() == order(); }

bool Polynomial::only_involves(const std::vector<std::size_t>& vars) const noexcept {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) {
        return false;
      }
    }
  }
  return true;
}

Scalar Polynomial::coefficient_of(const Exponent& e) const {
  for (const auto& t : terms_) {
    if (t.exponent == e) return t.coefficient;
  }
  return Scalar::zero(ring_->field());
}

Polynomial Polynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(terms), Canonical{});
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  const Exponent zero(ring_->size());
  *this = sub_scaled_shift(-Scalar::one(ring_->field()), zero, rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  const Exponent zero(ring_->size());
  *this = sub_scaled_shift(Scalar::one(ring_->field()), zero, rhs);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : small.terms_) {
    acc = acc.sub_scaled_shift(-t.coefficient, t.exponent, large);
  }
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::sub_scaled_shift(const Scalar& c, const Exponent& shift,
                                        const Polynomial& q) const {
  if (c.is_zero() || q.is_zero()) return *this;
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto it = terms_.begin();
  auto jt = q.terms_.begin();
  while (it != terms_.end() || jt != q.terms_.end()) {
    if (jt == q.terms_.end()) {
      out.push_back(*it++);
      continue;
    }
    const Exponent e = jt->exponent + shift;
    if (it == terms_.end()) {
      out.push_back({e, -(c * jt->coefficient)});
      ++jt;
      continue;
    }
    const auto cmp = order.compare(it->exponent, e);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(*it++);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({e, -(c * jt->coefficient)});
      ++jt;
    } else {
      Scalar v = it->coefficient - c * jt->coefficient;
      if (!v.is_zero()) out.push_back({e, std::move(v)});
      ++it;
      ++jt;
    }
  }
  return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::mul_monomial(const Exponent& shift) const {
  auto terms = terms_;
  for (auto& t : terms) t.exponent = t.exponent + shift;
  return Polynomial(ring_, std::move(terms), Canonical{});
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

Polynomial Polynomial::truncate(unsigned n) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponent.degree() < n) terms.push_back(t);
  }
  return Polynomial(ring_, std::move(terms), Canonical{});
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (other->names() != ring_->names() || !(other->field() == ring_->field())) {
    throw Error(ErrorKind::ContextMismatch, "cannot move polynomial between unrelated rings");
  }
  return Polynomial(other, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && a.ring_->compatible(*b.ring_))) return false;
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string(Notation notation) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coefficient.is_negative();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const auto mag = t.coefficient.magnitude_string();
    const bool is_const = t.exponent.degree() == 0;
    bool need_star = false;
    if (is_const || mag != "1") {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      const unsigned e = t.exponent[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << (notation == Notation::Dual ? ring_->dual_name(i) : ring_->name(i));
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (b.is_zero()) throw Error(ErrorKind::InvalidDivisor, "division by zero polynomial");
  Polynomial rest = a;
  Polynomial quotient(a.ring_ptr());
  const auto& lb = b.leading();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading();
    if (!lb.exponent.divides(lt.exponent)) {
      throw Error(ErrorKind::InvalidDivisor, "divisor does not divide the polynomial exactly");
    }
    const Exponent shift = lt.exponent - lb.exponent;
    const Scalar c = lt.coefficient / lb.coefficient;
    quotient += Polynomial::monomial(a.ring_ptr(), shift, c);
    rest = rest.sub_scaled_shift(c, shift, b);
  }
  return quotient;
}

std::string to_string(std::span<const Polynomial> polys, Polynomial::Notation notation) {
  std::string s = "[";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string(notation);
  }
  return s + "]";
}

}  // namespace macdual
