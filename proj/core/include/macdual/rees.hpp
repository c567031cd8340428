#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macdual/groebner.hpp"

namespace macdual {

/// Order of an element in the J-adic filtration, J = <g>, over P/I.
struct FilterOrder {
  enum class Kind { Finite, AtLeastCap, Infinite };
  Kind kind = Kind::Finite;
  unsigned value = 0;

  static FilterOrder finite(unsigned v) { return {Kind::Finite, v}; }
  static FilterOrder at_least(unsigned v) { return {Kind::AtLeastCap, v}; }
  static FilterOrder infinite() { return {Kind::Infinite, 0}; }
  std::string to_string() const;
  friend bool operator==(const FilterOrder&, const FilterOrder&) = default;
};

class FiltrationContext {
 public:
  /// J = <generators>, computed modulo `base` (the zero ideal when absent).
  FiltrationContext(RingPtr ring, std::vector<Polynomial> generators,
                    std::optional<Ideal> base = std::nullopt);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// max{ k : p in J^k + I }, searched up to cap.
  FilterOrder ord(const Polynomial& p, unsigned cap) const;
  /// J^k + I, cached.
  const Ideal& power(unsigned k) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  Ideal base_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Monoid ideal of N^t generated by finitely many nonzero exponents.
class MonoidIdeal {
 public:
  MonoidIdeal(std::size_t t, std::vector<Exponent> generators);
  /// <(m_1,0,..), ..., (0,..,m_t)>
  static MonoidIdeal diagonal(const std::vector<unsigned>& m);

  std::size_t dimension() const noexcept { return t_; }
  const std::vector<Exponent>& generators() const noexcept { return generators_; }
  bool contains(const Exponent& n) const;
  /// c_i = max over generators of the i-th entry.
  std::vector<unsigned> box() const;

 private:
  std::size_t t_;
  std::vector<Exponent> generators_;
};

/// { n not in M : n + e_i in M for every i }, sorted lexicographically.
std::vector<Exponent> monoid_socle(const MonoidIdeal& monoid);

struct ReesReport {
  bool regular = false;
  bool checked = false;
  bool passed = false;
  unsigned l = 0;
  /// dim of the degree-l piece of gr_J(P/I) in the measured slice
  std::uint64_t graded_piece = 0;
  /// dim of the matching slice of (P/(I+J))[Y]_l
  std::uint64_t polynomial_piece = 0;
  std::string note;
};

/// Compares both sides of the Rees map in degree l. Homogeneous input is
/// measured below total degree degcap; otherwise I + J must be m-primary
/// and full lengths are compared.
ReesReport rees_dimension_check(const std::vector<Polynomial>& g, const Ideal& ideal, unsigned l,
                                unsigned degcap);

struct SocleProductReport {
  bool regular = false;
  bool passed = false;
  std::size_t socle_dimension = 0;
  std::size_t monoid_socle_size = 0;
  std::size_t base_socle_dimension = 0;
  /// sigma * h^n for sigma in soc(P/(I+<h>)), n in soc M
  std::vector<Polynomial> predicted_basis;
  bool basis_in_socle = false;
  bool basis_independent = false;
  std::string note;
};

/// dim soc(P/(I + <h^M>)) against |soc M| * dim soc(P/(I + <h>)).
SocleProductReport socle_product_check(const Ideal& ideal, const std::vector<Polynomial>& h,
                                       const MonoidIdeal& monoid);

}  // namespace macdual
