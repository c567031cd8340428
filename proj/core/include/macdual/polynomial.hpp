#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macdual/monomial.hpp"
#include "macdual/ring.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

struct Term {
  Exponent exponent;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a Ring. Terms are kept strictly descending in the
/// ring's monomial order and never carry a zero coefficient, so structural
/// equality is mathematical equality.
///
/// The same type represents elements of the dual module D; see
/// `to_string(Notation::Dual)` and duality.hpp for the contraction action.
class Polynomial {
 public:
  enum class Notation { Ring, Dual };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal exponents and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial monomial(RingPtr ring, const Exponent& e, const Scalar& c);
  static Polynomial monomial(RingPtr ring, const Exponent& e);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest term in the active order; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  const Exponent& leading_exponent() const { return terms_.front().exponent; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Smallest total degree of a term; -1 for zero.
  int order() const noexcept;
  bool is_homogeneous() const noexcept;
  /// True when every term only involves the listed variables.
  bool only_involves(const std::vector<std::size_t>& vars) const noexcept;

  Scalar coefficient_of(const Exponent& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  /// this - c * x^shift * q, in one merge pass.
  Polynomial sub_scaled_shift(const Scalar& c, const Exponent& shift, const Polynomial& q) const;
  Polynomial mul_monomial(const Exponent& shift) const;

  /// Divides by the leading coefficient.
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  /// Drops every term of total degree >= n.
  Polynomial truncate(unsigned n) const;

  /// Re-sorts the terms for a ring with the same variables and field.
  Polynomial in_ring(const RingPtr& other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering: descending terms, `*` and `^`, explicit rational
  /// coefficients, e.g. `-3/2*x^2*y + z - 1`. Dual notation upper-cases the
  /// variable names.
  std::string to_string(Notation notation = Notation::Ring) const;

 private:
  struct Canonical {};
  Polynomial(RingPtr ring, std::vector<Term> terms, Canonical)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws InvalidDivisor when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Renders a list as "[p1, p2, ...]".
std::string to_string(std::span<const Polynomial> polys,
                      Polynomial::Notation notation = Polynomial::Notation::Ring);

}  // namespace macdual
