#include "macdual/scalar.hpp"

#include "macdual/error.hpp"

namespace macdual {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "context-mismatch";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::InvalidDivisor: return "invalid-divisor";
    case ErrorKind::UnboundedQuotient: return "unbounded-quotient";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Pipeline: return "pipeline";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw Error(ErrorKind::Usage, "field characteristic " + std::to_string(p) +
                                      " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }
Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long value) {
  return from_integer(field, mpz_class(value));
}

Scalar Scalar::from_integer(const Field& field, const mpz_class& value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  const auto p = field.characteristic();
  return Scalar(Residue{reduce_mod(value, p), p});
}

Scalar Scalar::from_fraction(const Field& field, const mpz_class& num,
                             const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw Error(ErrorKind::InvalidDivisor, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  return from_integer(field, num) / from_integer(field, den);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Field::prime(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

bool Scalar::is_negative() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) < 0;
  return false;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (v_.index() != rhs.v_.index()) {
    throw Error(ErrorKind::ContextMismatch, "scalars from different fields");
  }
  if (const auto* r = std::get_if<Residue>(&v_)) {
    if (r->p != std::get<Residue>(rhs.v_).p) {
      throw Error(ErrorKind::ContextMismatch, "scalars from different prime fields");
    }
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidDivisor, "inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{mod_pow(r.value, r.p - 2, r.p), r.p});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(rhs.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = static_cast<std::uint32_t>(
        (std::uint64_t{r.value} + std::get<Residue>(rhs.v_).value) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q -= std::get<mpq_class>(rhs.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = static_cast<std::uint32_t>(
        (std::uint64_t{r.value} + r.p - std::get<Residue>(rhs.v_).value) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(rhs.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = static_cast<std::uint32_t>(
        std::uint64_t{r.value} * std::get<Residue>(rhs.v_).value % r.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  return std::get<Scalar::Residue>(a.v_) == std::get<Scalar::Residue>(b.v_);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

std::string Scalar::magnitude_string() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return mpq_class(abs(*q)).get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

}  // namespace macdual
