#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace macdual {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector in N^n, n <= kMaxVariables. Stored inline so that
/// monomial arithmetic never allocates.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n);
  Exponent(std::initializer_list<unsigned> entries);
  explicit Exponent(const std::vector<unsigned>& entries);

  static Exponent unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned value);

  /// |e|
  unsigned degree() const noexcept;

  /// Componentwise a <= b.
  bool divides(const Exponent& other) const noexcept;
  Exponent operator+(const Exponent& other) const;
  /// Componentwise difference; requires divides(other) the other way round.
  Exponent operator-(const Exponent& other) const;
  Exponent lcm(const Exponent& other) const;
  Exponent gcd(const Exponent& other) const;
  bool coprime(const Exponent& other) const noexcept;

  std::vector<unsigned> to_vector() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept { return e.hash(); }
};

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// Total multiplicative order on exponents of a fixed length. The variable
/// permutation lists variable indices from most to least significant.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder lex(std::size_t n);
  /// The first `block` variables (after permutation) are eliminated: compare
  /// the first block by grevlex, break ties by grevlex on the rest.
  static MonomialOrder block_elimination(std::size_t n, std::size_t block);

  MonomialOrder with_permutation(std::vector<std::size_t> perm) const;

  OrderKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return perm_.size(); }
  std::size_t block_size() const noexcept { return block_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  /// Throws LengthMismatch when a and b differ in length from each other.
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;

  /// Larger total degree always compares greater.
  bool is_degree_compatible() const noexcept { return kind_ == OrderKind::GradedReverseLex; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::strong_ordering grevlex_range(const Exponent& a, const Exponent& b, std::size_t lo,
                                     std::size_t hi) const noexcept;

  OrderKind kind_ = OrderKind::GradedReverseLex;
  std::vector<std::size_t> perm_;
  std::size_t block_ = 0;
};

/// All exponents in n variables with lo <= |e| <= hi, in no particular order.
std::vector<Exponent> enumerate_monomials(std::size_t n, unsigned lo, unsigned hi);

}  // namespace macdual
