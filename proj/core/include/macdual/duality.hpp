#pragma once

#include <optional>
#include <vector>

#include "macdual/groebner.hpp"
#include "macdual/linalg.hpp"
#include "macdual/polynomial.hpp"

namespace macdual {

/// Finite-dimensional K-subspace of the dual D = K[X], stored as its unique
/// reduced row-echelon basis (pivot = leading monomial). Dual elements share
/// the Polynomial type and ring with P; only the rendering differs.
class DualModule {
 public:
  explicit DualModule(RingPtr ring);

  /// K-span of the given elements (no closure taken).
  static DualModule span_of(RingPtr ring, const std::vector<Polynomial>& elements);
  /// Smallest contraction-closed subspace containing the generators.
  static DualModule generated_by(RingPtr ring, const std::vector<Polynomial>& generators);

  const RingPtr& ring_ptr() const noexcept { return echelon_.ring_ptr(); }
  const Ring& ring() const noexcept { return *echelon_.ring_ptr(); }
  /// Sorted by descending leading monomial.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  /// -1 for the zero module.
  int max_degree() const noexcept;

  Polynomial reduce(const Polynomial& f) const { return echelon_.reduce(f); }
  bool contains(const Polynomial& f) const { return echelon_.contains(f); }
  bool contains(const DualModule& other) const;
  /// x_i ∘ F stays inside for every variable and basis element.
  bool is_closed() const;

  friend bool operator==(const DualModule& a, const DualModule& b);

 private:
  explicit DualModule(PolynomialEchelon echelon);

  PolynomialEchelon echelon_;
  std::vector<Polynomial> basis_;
};

/// p ∘ F with x^n ∘ X^m = X^(m-n) when m >= n and 0 otherwise.
Polynomial contract(const Polynomial& p, const Polynomial& f);

/// span{ p ∘ F : F in W }
DualModule contract_module(const Polynomial& p, const DualModule& module);

DualModule module_sum(const DualModule& a, const DualModule& b);
DualModule module_intersect(const DualModule& a, const DualModule& b);
/// W ∩ span{ X^e : keep(e) } for a finite candidate set of monomials.
DualModule coordinate_intersect(const DualModule& module,
                                const std::vector<Exponent>& monomials);

/// I^⊥ = { F : g ∘ F = 0 for all g in I }. The quotient must be Artinian;
/// when given, degree_bound must be at least its socle degree.
DualModule perp_ideal(const Ideal& ideal, std::optional<unsigned> degree_bound = std::nullopt);

struct Annihilator {
  /// Ann(W), carrying the truncation m^certificate_degree ⊆ ideal.
  Ideal ideal;
  unsigned certificate_degree = 0;
  /// Set when W = 0 and the unit ideal was returned.
  bool zero_module = false;
};

Annihilator perp_module(const DualModule& module);

/// Residue representatives of a K-basis of (I : m)/I, in reduced echelon
/// form over the standard monomials.
std::vector<Polynomial> socle_basis(const Ideal& ideal);

/// Basis of a complement of span{ x_i ∘ F } in W, in reduced echelon form
/// with zero coordinates on the pivots of the contraction span.
std::vector<Polynomial> minimal_cogenerators(const DualModule& module);

}  // namespace macdual
