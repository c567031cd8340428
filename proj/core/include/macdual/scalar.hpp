#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace macdual {

/// Coefficient field: the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "F<p>", the spelling used by ideal files.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long value);
  static Scalar from_integer(const Field& field, const mpz_class& value);
  /// numerator/denominator; throws InvalidDivisor when the denominator
  /// vanishes in the field.
  static Scalar from_fraction(const Field& field, const mpz_class& num,
                              const mpz_class& den);

  Field field() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign used when printing; residues are always "positive".
  bool is_negative() const noexcept;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "3", "-3/2", or the residue for F_p.
  std::string to_string() const;

  /// Absolute value as text (used by the polynomial printer).
  std::string magnitude_string() const;

  const mpq_class* rational() const noexcept { return std::get_if<mpq_class>(&v_); }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(Residue r) : v_(r) {}

  void check_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> v_;
};

}  // namespace macdual
