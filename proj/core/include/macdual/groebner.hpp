#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "macdual/polynomial.hpp"

namespace macdual {

/// Ideal of P = K[x] (graded mode) or of the power-series ring K[[x]] (local
/// mode). An optional truncation degree N means the ideal is
/// ⟨generators⟩ + m^N; every Artinian computation in local mode goes through
/// such a truncation, which is exact once m^N lies in the ideal.
///
/// The reduced Gröbner basis for the ring's order is computed on first use
/// and shared between copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {},
                 std::optional<unsigned> truncation = std::nullopt);

  /// Ideal whose reduced basis is already known; `basis` must be the reduced,
  /// monic basis sorted by descending leading term.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                                  std::optional<unsigned> truncation);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::optional<unsigned> truncation() const noexcept { return truncation_; }

  /// Generators together with the monomials of degree N when truncated.
  std::vector<Polynomial> all_generators() const;

  /// Reduced, monic Gröbner basis sorted by descending leading term.
  const std::vector<Polynomial>& basis() const;
  bool has_basis() const;

  Ideal with_truncation(unsigned n) const;
  Ideal without_truncation() const;
  Ideal plus(const std::vector<Polynomial>& more) const;
  Ideal operator+(const Ideal& other) const;
  /// Same generators in a ring with a different monomial order.
  Ideal in_ring(const RingPtr& ring) const;

  bool is_unit() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    bool ready = false;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<unsigned> truncation_;
  std::shared_ptr<Cache> cache_;
};

struct HilbertData {
  /// values[k] = dim_K (m^k + I)/(m^(k+1) + I)
  std::vector<std::uint64_t> values;
  std::uint64_t length = 0;
  /// Index of the last nonzero value, -1 for the zero ring.
  int socle_degree() const noexcept { return static_cast<int>(values.size()) - 1; }
};

/// Buchberger with Gebauer–Möller pair pruning and the normal selection
/// strategy; returns the reduced basis for the ring's order.
std::vector<Polynomial> buchberger_basis(const RingPtr& ring,
                                         const std::vector<Polynomial>& generators,
                                         std::optional<unsigned> truncation);

/// The ideal with its reduced basis computed (in `order`, when given).
Ideal buchberger(const Ideal& ideal);
Ideal buchberger(const Ideal& ideal, const MonomialOrder& order);

/// Remainder of p modulo the reduced basis of I (unique).
Polynomial normal_form(const Polynomial& p, const Ideal& ideal);
Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order);

bool contains(const Ideal& ideal, const Polynomial& p);
bool contains(const Ideal& big, const Ideal& small);
/// Equality of the ideals as given (reduced bases compared).
bool equal(const Ideal& a, const Ideal& b);

Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (I : f); throws InvalidDivisor for f = 0.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& f);
/// (I : J) as the intersection of the colons by the generators of J.
Ideal ideal_colon(const Ideal& ideal, const Ideal& other);

/// Smallest N with m^N contained in I. In local mode, or for
/// non-homogeneous input, this is certified through m^N ⊆ I + m^(N+1)
/// (Nakayama). Throws UnboundedQuotient past `ceiling`.
unsigned artinian_bound(const Ideal& ideal, unsigned ceiling = 64,
                        std::optional<unsigned> hint = std::nullopt);

/// The ideal with truncation artinian_bound(I) attached.
Ideal make_artinian(const Ideal& ideal, unsigned ceiling = 64,
                    std::optional<unsigned> hint = std::nullopt);

/// dim_K P/(I + m^k), counted from standard monomials.
std::uint64_t truncated_length(const Ideal& ideal, unsigned k);

HilbertData hilbert_data(const Ideal& ideal, unsigned ceiling = 64);

/// Monomials outside the leading-term ideal; requires an Artinian ideal.
std::vector<Exponent> standard_monomials(const Ideal& ideal);

/// True iff (I : f) = I. Throws DegenerateInput when f lies in I. In local
/// mode the polynomial colon is used, which can miss components away from
/// the origin (false negatives only).
bool is_regular(const Polynomial& f, const Ideal& ideal);

/// Each element regular modulo ideal + previous elements.
bool is_regular_sequence(const std::vector<Polynomial>& seq, const Ideal& ideal);

/// Seeded random search for d linear forms forming a regular sequence.
/// Throws SearchExhausted when some position fails all trials.
std::vector<Polynomial> find_linear_regular_sequence(const Ideal& ideal, std::size_t d,
                                                     std::size_t trials, std::uint64_t seed);

/// Monomials of total degree exactly n.
std::vector<Polynomial> power_of_maximal_ideal(const RingPtr& ring, unsigned n);

}  // namespace macdual
