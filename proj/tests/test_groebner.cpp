#include "doctest.h"

#include "macdual/error.hpp"
#include "support.hpp"

using namespace macdual;
using namespace macdual::testing;

TEST_CASE("reduced basis of a small system") {
  const auto ring = small_ring(2);
  const auto i = ideal(ring, {"x^2 + y", "x*y - 1"});
  const auto& b = i.basis();
  REQUIRE(!b.empty());
  for (const auto& g : i.generators()) CHECK(contains(i, g));
  CHECK(normal_form(poly(ring, "x^2*y + y^2"), i).is_zero());
  // reduced basis is unique
  const auto j = ideal(ring, {"x*y - 1", "x^2 + y", "x^3 + x*y"});
  CHECK(equal(i, j));
}

TEST_CASE("lex basis eliminates") {
  const auto ring = small_ring(3)->with_order(MonomialOrder::lex(3));
  const auto i = buchberger(ideal(ring, {"x - y^2", "y - z^3"}));
  bool has_z_only = false;
  for (const auto& g : i.basis()) has_z_only = has_z_only || g.only_involves({2});
  CHECK_FALSE(has_z_only);
  CHECK(contains(i, poly(ring, "x - z^6")));
}

TEST_CASE("intersection and colon") {
  const auto ring = small_ring(2);
  CHECK(equal(ideal_intersect(ideal(ring, {"x"}), ideal(ring, {"y"})), ideal(ring, {"x*y"})));
  CHECK(equal(ideal_colon(ideal(ring, {"x^2*y"}), poly(ring, "x")), ideal(ring, {"x*y"})));
  CHECK(equal(ideal_colon(ideal(ring, {"x^2", "x*y"}), ideal(ring, {"x", "y"})),
              ideal(ring, {"x"})));
  CHECK_THROWS_AS(ideal_colon(ideal(ring, {"x"}), Polynomial(ring)), Error);
}

TEST_CASE("artinian bound and Hilbert data") {
  const auto ring = small_ring(2);
  const auto i = ideal(ring, {"x^2", "y^2"});
  CHECK(artinian_bound(i) == 3);
  const auto h = hilbert_data(i);
  CHECK(h.values == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(h.length == 4);
  CHECK(h.socle_degree() == 2);
  CHECK(truncated_length(i, 2) == 3);
  CHECK(standard_monomials(make_artinian(i)).size() == 4);
}

TEST_CASE("non-Artinian input is rejected") {
  const auto ring = small_ring(2);
  CHECK_THROWS_AS(artinian_bound(ideal(ring, {"x^2"}), 12), Error);
  try {
    (void)artinian_bound(ideal(ring, {"x - x^2", "y^2"}), 12);
    FAIL("expected UnboundedQuotient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundedQuotient);
  }
}

TEST_CASE("local mode works in the local ring") {
  const auto ring = small_ring(2, RingMode::Local);
  // x - x^2 is x times a unit
  const auto i = ideal(ring, {"x - x^2", "y^2"});
  CHECK(hilbert_data(i).length == 2);
  CHECK(contains(make_artinian(i), poly(ring, "x")));
}

TEST_CASE("regular sequences") {
  const auto ring = small_ring(3);
  const auto i = ideal(ring, {"x*y"});
  CHECK(is_regular(poly(ring, "z"), i));
  CHECK_FALSE(is_regular(poly(ring, "x"), i));
  CHECK(is_regular_sequence(polys(ring, {"x + y", "z"}), i));
  CHECK_FALSE(is_regular_sequence(polys(ring, {"z", "x"}), i));
  CHECK_THROWS_AS(is_regular(poly(ring, "x*y"), i), Error);
  const auto found = find_linear_regular_sequence(i, 2, 20, 7);
  CHECK(found.size() == 2);
  CHECK(is_regular_sequence(found, i));
}

TEST_CASE("truncated ideals") {
  const auto ring = small_ring(2, RingMode::Local);
  const auto i = ideal(ring, {"x - y^2"}).with_truncation(3);
  CHECK(contains(i, poly(ring, "x^3")));
  CHECK(contains(i, poly(ring, "x*y")));
  CHECK_FALSE(contains(i, poly(ring, "y^2")));
}
