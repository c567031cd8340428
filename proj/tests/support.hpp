#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "macdual/duality.hpp"
#include "macdual/error.hpp"
#include "macdual/groebner.hpp"
#include "macdual/limit_system.hpp"
#include "macdual/parse.hpp"

namespace macdual::testing {

inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

inline Polynomial dual(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text, Polynomial::Notation::Dual);
}

inline std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts,
                                     Polynomial::Notation n = Polynomial::Notation::Ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t, n));
  return out;
}

inline Ideal ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  return Ideal(ring, polys(ring, texts));
}

// the curve (t^6, t^7, t^11, t^13)
inline RingPtr curve_ring() {
  return Ring::make(Field::rationals(), {"x", "y", "z", "w"}, RingMode::Local, {"x"});
}

inline Ideal curve_ideal(const RingPtr& ring) {
  return ideal(ring, {"w - x*y", "y*z - x^3", "x*z^2 - y^4", "z^3 - x^2*y^3", "y^5 - x^4*z"});
}

inline const char* const kCurveFile =
    "field Q\n"
    "ring local vars x,y,z,w\n"
    "zvars x\n"
    "ideal:\n"
    "w - x*y\n"
    "y*z - x^3\n"
    "x*z^2 - y^4\n"
    "z^3 - x^2*y^3\n"
    "y^5 - x^4*z\n";

// published H_1..H_7 for the curve
inline std::vector<std::vector<std::string>> listed_family() {
  return {
      {"Y^3", "Z^2"},
      {"X*Y^3+Y^2*W", "X*Z^2+Y^4"},
      {"X^2*Y^3+X*Y^2*W+Y*W^2+Z^3", "X^2*Z^2+X*Y^4+Y^3*W"},
      {"X^3*Y^3+X^2*Y^2*W+X*Y*W^2+X*Z^3+Y^4*Z+W^3",
       "X^3*Z^2+X^2*Y^4+X*Y^3*W+Y*Z^3+Y^2*W^2"},
      {"X^4*Y^3+X^3*Y^2*W+X^2*Y*W^2+X^2*Z^3+X*Y^4*Z+X*W^3+Y^3*Z*W",
       "X^4*Z^2+X^3*Y^4+X^2*Y^3*W+X*Y*Z^3+X*Y^2*W^2+Z^3*W+Y*W^3+Y^5*Z"},
      {"X^5*Y^3+X^3*Z^3+X^4*Y^2*W+X^3*Y*W^2+X^2*Y^4*Z+X^2*W^3+X*Y^3*Z*W+Y^2*Z*W^2+Y*Z^4",
       "X^5*Z^2+X^4*Y^4+X^3*Y^3*W+X^2*Y*Z^3+X^2*Y^2*W^2+X*Z^3*W+X*Y*W^3+X*Y^5*Z+Y^4*Z*W+W^4"},
      {"X^6*Y^3+X^5*Y^2*W+X^4*Z^3+X^4*Y*W^2+X^3*Y^4*Z+X^3*W^3+X^2*Y^3*Z*W+X*Y^2*Z*W^2+"
       "X*Y*Z^4+Z^4*W+Y*Z*W^3+Y^5*Z^2",
       "X^6*Z^2+X^5*Y^4+X^4*Y^3*W+X^3*Y*Z^3+X^3*Y^2*W^2+X^2*Z^3*W+X^2*Y*W^3+X^2*Y^5*Z+"
       "X*Y^4*Z*W+X*W^4+Y^2*Z^4+Y^3*Z*W^2"},
  };
}

inline const std::vector<std::string> kVarNames = {"x", "y", "z", "w"};

inline RingPtr small_ring(std::size_t n, RingMode mode = RingMode::Graded,
                          std::vector<std::string> z = {}) {
  return Ring::make(Field::rationals(),
                    std::vector<std::string>(kVarNames.begin(), kVarNames.begin() + n), mode,
                    std::move(z));
}

/// Sum of up to `terms` monomials of degree in [lo, hi] with coefficients in [-3, 3].
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned lo,
                                    unsigned hi, unsigned terms) {
  auto monos = enumerate_monomials(ring->size(), lo, hi);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  Polynomial p(ring);
  for (unsigned t = 0; t < terms; ++t) {
    p += Polynomial::monomial(ring, monos[pick(rng)], Scalar::from_int(ring->field(), coef(rng)));
  }
  return p;
}

/// Random m-primary ideal in n <= 3 variables: pure powers plus random extras.
inline Ideal random_primary(std::mt19937_64& rng, std::size_t n, std::uint64_t max_length) {
  std::uniform_int_distribution<unsigned> power(1, 4);
  std::uniform_int_distribution<unsigned> extras(0, 2);
  std::bernoulli_distribution local(0.3);
  std::bernoulli_distribution homogeneous(0.5);
  while (true) {
    const auto ring = small_ring(n, local(rng) ? RingMode::Local : RingMode::Graded);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n);
      e.set(i, power(rng));
      gens.push_back(Polynomial::monomial(ring, e));
    }
    for (unsigned k = extras(rng); k > 0; --k) {
      std::uniform_int_distribution<unsigned> deg(1, 3);
      const unsigned a = deg(rng);
      auto p = homogeneous(rng) ? random_polynomial(ring, rng, a, a, 3)
                                : random_polynomial(ring, rng, a, a + 1, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    Ideal candidate = make_artinian(Ideal(ring, gens));
    const auto len = hilbert_data(candidate).length;
    if (len >= 1 && len <= max_length) return candidate;
  }
}

/// Homogeneous complete intersection of n - d forms in n <= 4 variables
/// with the last d variables a regular sequence on the quotient.
inline Ideal random_graded_ci(std::mt19937_64& rng, std::size_t n, std::size_t d,
                              unsigned max_degree) {
  std::vector<std::string> z(kVarNames.begin() + static_cast<long>(n - d),
                             kVarNames.begin() + static_cast<long>(n));
  const auto ring = small_ring(n, RingMode::Graded, z);
  std::uniform_int_distribution<unsigned> deg(2, max_degree);
  while (true) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i + d < n; ++i) {
      const unsigned a = deg(rng);
      gens.push_back(random_polynomial(ring, rng, a, a, 4));
    }
    if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); })) {
      continue;
    }
    Ideal candidate(ring, gens);
    std::vector<Polynomial> zs;
    for (auto i : ring->z_block()) zs.push_back(Polynomial::variable(ring, i));
    try {
      (void)artinian_bound(candidate.plus(zs), 32);
    } catch (const Error&) {
      continue;
    }
    if (!is_regular_sequence(zs, candidate)) continue;
    return candidate;
  }
}

/// The largest generator degree.
inline unsigned max_generator_degree(const Ideal& ideal) {
  int m = 0;
  for (const auto& g : ideal.generators()) m = std::max(m, g.degree());
  return static_cast<unsigned>(m);
}

}  // namespace macdual::testing
