#include "macdual/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "macdual/error.hpp"

namespace macdual {

Exponent::Exponent(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxVariables) {
    throw Error(ErrorKind::Usage, "at most 16 variables are supported");
  }
}

Exponent::Exponent(std::initializer_list<unsigned> entries) : Exponent(entries.size()) {
  std::size_t i = 0;
  for (unsigned v : entries) set(i++, v);
}

Exponent::Exponent(const std::vector<unsigned>& entries) : Exponent(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

Exponent Exponent::unit(std::size_t n, std::size_t i) {
  Exponent e(n);
  e.set(i, 1);
  return e;
}

void Exponent::set(std::size_t i, unsigned value) {
  if (value > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorKind::Usage, "exponent too large");
  }
  e_[i] = static_cast<std::uint16_t>(value);
}

unsigned Exponent::degree() const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned{e_[i]} + other.e_[i]);
  return r;
}

Exponent Exponent::operator-(const Exponent& other) const {
  Exponent r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  return r;
}

Exponent Exponent::lcm(const Exponent& other) const {
  Exponent r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

Exponent Exponent::gcd(const Exponent& other) const {
  Exponent r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  return r;
}

bool Exponent::coprime(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

std::vector<unsigned> Exponent::to_vector() const {
  return std::vector<unsigned>(e_.begin(), e_.begin() + n_);
}

std::size_t Exponent::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003U ^ e_[i];
  return h;
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  MonomialOrder o;
  o.kind_ = OrderKind::GradedReverseLex;
  o.perm_.resize(n);
  std::iota(o.perm_.begin(), o.perm_.end(), std::size_t{0});
  return o;
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  MonomialOrder o = grevlex(n);
  o.kind_ = OrderKind::Lex;
  return o;
}

MonomialOrder MonomialOrder::block_elimination(std::size_t n, std::size_t block) {
  if (block > n) throw Error(ErrorKind::Usage, "elimination block larger than ring");
  MonomialOrder o = grevlex(n);
  o.kind_ = OrderKind::BlockElimination;
  o.block_ = block;
  return o;
}

MonomialOrder MonomialOrder::with_permutation(std::vector<std::size_t> perm) const {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorKind::Usage, "not a variable permutation");
  }
  if (perm.size() != perm_.size()) {
    throw Error(ErrorKind::LengthMismatch, "permutation length differs from order size");
  }
  MonomialOrder o = *this;
  o.perm_ = std::move(perm);
  return o;
}

std::strong_ordering MonomialOrder::grevlex_range(const Exponent& a, const Exponent& b,
                                                  std::size_t lo,
                                                  std::size_t hi) const noexcept {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[perm_[i]];
    db += b[perm_[i]];
  }
  if (da != db) return da <=> db;
  // smaller exponent in the last differing variable wins
  for (std::size_t i = hi; i-- > lo;) {
    const unsigned x = a[perm_[i]];
    const unsigned y = b[perm_[i]];
    if (x != y) return y <=> x;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size() || a.size() != perm_.size()) {
    throw Error(ErrorKind::LengthMismatch, "exponent length mismatch in compare");
  }
  switch (kind_) {
    case OrderKind::GradedReverseLex:
      return grevlex_range(a, b, 0, perm_.size());
    case OrderKind::Lex:
      for (std::size_t v : perm_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      return std::strong_ordering::equal;
    case OrderKind::BlockElimination: {
      auto c = grevlex_range(a, b, 0, block_);
      if (c != std::strong_ordering::equal) return c;
      return grevlex_range(a, b, block_, perm_.size());
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Exponent> enumerate_monomials(std::size_t n, unsigned lo, unsigned hi) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (lo == 0) out.emplace_back(0);
    return out;
  }
  Exponent e(n);
  // odometer over compositions with |e| <= hi
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      for (unsigned v = 0; v <= left; ++v) {
        e.set(i, v);
        const unsigned d = e.degree();
        if (d >= lo) out.push_back(e);
      }
      e.set(i, 0);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e.set(i, v);
      rec(i + 1, left - v);
    }
    e.set(i, 0);
  };
  rec(0, hi);
  return out;
}

}  // namespace macdual
