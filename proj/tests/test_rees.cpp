#include "doctest.h"

#include "macdual/error.hpp"
#include "macdual/rees.hpp"
#include "support.hpp"

using namespace macdual;
using namespace macdual::testing;

TEST_CASE("filtration order") {
  const auto ring = small_ring(2);
  const FiltrationContext ctx(ring, polys(ring, {"x"}), ideal(ring, {"y^3"}));
  CHECK(ctx.ord(poly(ring, "x^2*y"), 5) == FilterOrder::finite(2));
  CHECK(ctx.ord(poly(ring, "y"), 5) == FilterOrder::finite(0));
  CHECK(ctx.ord(poly(ring, "x^9"), 5) == FilterOrder::at_least(5));
  CHECK(ctx.ord(poly(ring, "y^4"), 5) == FilterOrder::infinite());
  CHECK(FilterOrder::at_least(5).to_string() == ">=5");
}

TEST_CASE("monoid socle of diagonal ideals") {
  const auto soc = monoid_socle(MonoidIdeal::diagonal({2, 3}));
  REQUIRE(soc.size() == 1);
  CHECK(soc[0] == Exponent{1, 2});
  CHECK(monoid_socle(MonoidIdeal(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 2}})).size() == 2);
  CHECK_THROWS_AS(MonoidIdeal(2, {Exponent{1, 0, 0}}), Error);
  CHECK_THROWS_AS(MonoidIdeal(2, {Exponent{0, 0}}), Error);
  // not cofinite: no socle
  CHECK(monoid_socle(MonoidIdeal(2, {Exponent{1, 0}})).empty());
}

TEST_CASE("Rees map on a graded complete intersection") {
  const auto ring = small_ring(3);
  const auto i = ideal(ring, {"x^2 - y*z"});
  const auto g = polys(ring, {"y", "z"});
  for (unsigned l = 0; l <= 4; ++l) {
    const auto r = rees_dimension_check(g, i, l, 8);
    CHECK(r.regular);
    CHECK(r.checked);
    CHECK_MESSAGE(r.passed, "l = " << l);
  }
}

TEST_CASE("Rees map on a non-homogeneous m-primary pair") {
  const auto ring = small_ring(2, RingMode::Local);
  const auto i = ideal(ring, {"x^2 - y^3 - y^4"});
  const auto r = rees_dimension_check(polys(ring, {"y"}), i, 3, 10);
  CHECK(r.checked);
  CHECK(r.passed);
}

TEST_CASE("non-regular sequences are rejected") {
  const auto ring = small_ring(2);
  const auto r = rees_dimension_check(polys(ring, {"x"}), ideal(ring, {"x*y"}), 2, 6);
  CHECK_FALSE(r.regular);
  CHECK_FALSE(r.passed);
  CHECK_THROWS_AS(rees_dimension_check({}, ideal(ring, {"x"}), 1, 4), Error);
}

TEST_CASE("socle product") {
  const auto ring = Ring::make(Field::rationals(), {"y", "z"}, RingMode::Graded, {"z"});
  const auto i = ideal(ring, {"y^2"});
  const auto r = socle_product_check(i, polys(ring, {"z"}), MonoidIdeal::diagonal({3}));
  CHECK(r.regular);
  CHECK(r.passed);
  CHECK(r.socle_dimension == 1);
  CHECK_THROWS_AS(socle_product_check(i, polys(ring, {"z"}), MonoidIdeal::diagonal({1, 1})), Error);
}
