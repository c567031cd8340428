#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macdual/duality.hpp"
#include "macdual/groebner.hpp"

namespace macdual {

using MultiIndex = std::vector<unsigned>;

std::string to_string(const MultiIndex& m);

/// All m in {1..bound}^d in lexicographic order; {()} when d = 0.
std::vector<MultiIndex> index_box(std::size_t d, unsigned bound);

/// Compatible family {H_m}, m in {1..bound}^d, of r dual elements each.
struct LimitInverseSystem {
  RingPtr ring;
  std::size_t d = 0;
  std::size_t r = 0;
  unsigned s = 0;
  unsigned bound = 0;
  std::map<MultiIndex, std::vector<Polynomial>> family;

  const std::vector<Polynomial>& at(const MultiIndex& m) const;
  /// P-submodule generated by H_m.
  DualModule module_at(const MultiIndex& m) const;
};

/// Coordinate subspace V^{j,k}_m = span{ X^e : |e| <= |m|+k, e_{z_j} < m_j - 1 }.
struct VSpace {
  std::size_t j = 0;
  int k = 0;
  MultiIndex m;
};

std::vector<Exponent> vspace_monomials(const Ring& ring, const VSpace& v);
/// The ideal m^(|m|+k+1) + <z_j^(m_j-1)> whose inverse system is V.
Ideal vspace_ideal(const RingPtr& ring, const VSpace& v);

/// I + <z_1^m_1, ..., z_d^m_d> with its Artinian truncation attached.
/// Throws Pipeline when the quotient is not Artinian.
Ideal artinian_reduction(const Ideal& ideal, const MultiIndex& m);

struct TowerOptions {
  bool trust_regular = false;
  unsigned jobs = 1;
};

using DualTower = std::map<MultiIndex, DualModule>;

/// W_m = (I_m)^⊥ for every m in {1..bound}^d. The z-block must be a regular
/// sequence on P/I unless trust_regular is set.
DualTower dual_tower(const Ideal& ideal, unsigned bound, const TowerOptions& options = {});

/// Canonical section along the diagonal, extended by contraction.
LimitInverseSystem section_lift(const RingPtr& ring, const DualTower& tower, unsigned bound);

struct ConditionReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct VerifyReport {
  std::vector<ConditionReport> conditions;
  bool passed() const;
  const ConditionReport* find(const std::string& name) const;
};

/// Condition names: dimension, minimality, intersection, degree,
/// compatibility, z-annihilation, top-degree.
VerifyReport verify_lis(const LimitInverseSystem& system);

struct Reconstruction {
  Ideal ideal;
  /// Diagonal stage whose generators were accepted.
  unsigned stage = 0;
  bool stable = false;
};

Reconstruction reconstruct(const LimitInverseSystem& system);

struct Invariants {
  std::size_t d = 0;
  std::size_t r = 0;
  unsigned s = 0;
};

Invariants invariants_of(const Ideal& ideal);

/// Equality of Artinian quotients: both ideals contain m^t and agree modulo it,
/// for t the larger Artinian bound.
bool artinian_equal(const Ideal& a, const Ideal& b);

}  // namespace macdual
