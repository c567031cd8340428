// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "macdual/error.hpp"
#include "macdual/rees.hpp"
#include "macdual_cli/cli.hpp"
#include "macdual_cli/io.hpp"
#include "support.hpp"

using namespace macdual;
using namespace macdual::testing;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::string scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "macdual-acceptance";
  fs::create_directories(dir);
  return (dir / name).string();
}

json run_json(std::vector<std::string> args, int& status) {
  args.push_back("--json");
  std::ostringstream out;
  std::ostringstream err;
  status = cli::run_command(args, out, err);
  if (status != 0) return json{{"error", err.str()}};
  return json::parse(out.str());
}

struct Instance {
  std::string label;
  Ideal ideal;
  unsigned bound;
};

std::vector<Instance> roundtrip_suite() {
  std::vector<Instance> suite;
  const auto curve = curve_ring();
  suite.push_back({"curve", curve_ideal(curve), 7});
  const auto yz = Ring::make(Field::rationals(), {"y", "z"}, RingMode::Graded, {"z"});
  suite.push_back({"<y^2>", ideal(yz, {"y^2"}), 3});
  suite.push_back({"<y^3>", ideal(yz, {"y^3"}), 5});
  std::mt19937_64 rng(20261019);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {2, 1}, {3, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {4, 2}, {2, 1}};
  for (const auto& [n, d] : shapes) {
    auto i = random_graded_ci(rng, n, d, 3);
    const unsigned b = max_generator_degree(i) + 2;
    std::ostringstream label;
    label << "CI n=" << n << " d=" << d << " " << to_string(std::span(i.generators()));
    suite.push_back({label.str(), i, d == 2 ? std::min(b, 4u) : b});
  }
  return suite;
}

std::vector<LimitInverseSystem> produced;

// the same ideal with its truncation spelled out as generators
Ideal untruncated(const Ideal& i) { return Ideal(i.ring_ptr(), i.all_generators()); }

Outcome criterion1() {
  Outcome o;
  const auto path = scratch("curve.ideal");
  cli::write_text(path, kCurveFile);
  const auto ring = curve_ring();
  const auto i = curve_ideal(ring);
  const std::vector<std::vector<std::string>> listed = {
      {"z^2", "y^3"}, {"x*z^2", "x*y^3"}, {"x^2*z^2", "x^2*y^3"}};
  for (unsigned m = 1; m <= 3; ++m) {
    int status = 0;
    const auto j = run_json({"socle", "-i", path, "--m", std::to_string(m)}, status);
    o.require(status == 0, "socle command failed at m=" + std::to_string(m));
    if (status != 0) return o;
    const auto im = artinian_reduction(i, {m});
    PolynomialEchelon computed(ring);
    PolynomialEchelon expected(ring);
    for (const auto& s : j["results"]) computed.insert(normal_form(poly(ring, s), im));
    for (const auto& s : listed[m - 1]) expected.insert(normal_form(poly(ring, s), im));
    bool same = computed.rank() == expected.rank();
    for (const auto& b : expected.basis()) same = same && computed.contains(b);
    o.require(same && j["results"].size() == 2, "span mismatch at m=" + std::to_string(m));
  }
  if (o.passed) o.detail = "soc R_1..R_3 spans agree modulo I_m";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto path = scratch("curve.ideal");
  cli::write_text(path, kCurveFile);
  const auto out = scratch("curve-H.json");
  int status = 0;
  (void)run_json({"limit", "-i", path, "--mmax", "7", "-o", out}, status);
  o.require(status == 0, "limit command failed");
  if (status != 0) return o;
  const auto sys = cli::limit_system_from_json(json::parse(cli::read_text(out)));
  produced.push_back(sys);
  const auto listed = listed_family();
  unsigned equal_count = 0;
  for (unsigned m = 1; m <= 7; ++m) {
    const auto expected = DualModule::generated_by(
        sys.ring, polys(sys.ring, listed[m - 1], Polynomial::Notation::Dual));
    const bool same = sys.module_at({m}) == expected;
    o.require(same, "module mismatch at m=" + std::to_string(m));
    equal_count += same ? 1 : 0;
  }
  if (o.passed) o.detail = std::to_string(equal_count) + "/7 modules equal the listed closures";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto ring = curve_ring();
  const auto i = curve_ideal(ring);
  const auto inv = invariants_of(i);
  o.require(inv.r == 2, "type is " + std::to_string(inv.r));

  const auto h = hilbert_data(i.plus(polys(ring, {"x"})));
  const std::vector<std::uint64_t> published = {1, 2, 2, 1, 1};

  // semigroup <6,7,11,13>: Apery set w.r.t. 6, graded by longest factorization in 7, 11, 13
  const unsigned limit = 30;
  const std::vector<unsigned> gens = {6, 7, 11, 13};
  std::vector<bool> in_s(limit + 1, false);
  in_s[0] = true;
  for (unsigned v = 1; v <= limit; ++v) {
    for (auto g : gens) in_s[v] = in_s[v] || (v >= g && in_s[v - g]);
  }
  std::vector<int> longest(limit + 1, -1);
  longest[0] = 0;
  for (unsigned v = 1; v <= limit; ++v) {
    for (unsigned g : {7u, 11u, 13u}) {
      if (v >= g && longest[v - g] >= 0) longest[v] = std::max(longest[v], longest[v - g] + 1);
    }
  }
  std::vector<std::uint64_t> oracle;
  std::size_t apery = 0;
  for (unsigned v = 0; v <= limit; ++v) {
    if (!in_s[v] || (v >= 6 && in_s[v - 6])) continue;
    ++apery;
    const auto k = static_cast<std::size_t>(longest[v]);
    if (oracle.size() <= k) oracle.resize(k + 1, 0);
    ++oracle[k];
  }
  auto show = [](const std::vector<std::uint64_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  o.require(apery == 6, "Apery set has " + std::to_string(apery) + " elements");
  o.require(h.values == oracle, "computed " + show(h.values) + " but oracle " + show(oracle));
  if (o.passed) {
    o.detail = "type 2; computed " + show(h.values) + " = oracle " + show(oracle);
    if (published != oracle) {
      o.detail += "; published " + show(published) + " disagrees with the oracle (its sum " +
                  std::to_string(7) + " exceeds the multiplicity 6)";
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& inst : roundtrip_suite()) {
    const auto& i = inst.ideal;
    const auto h = section_lift(i.ring_ptr(), dual_tower(i, inst.bound), inst.bound);
    produced.push_back(h);
    const auto rec = reconstruct(h);
    const bool forward = rec.stable && equal(rec.ideal, i);
    o.require(forward, inst.label + ": reconstruction differs");
    if (!forward) continue;
    const auto back = section_lift(i.ring_ptr(), dual_tower(rec.ideal, inst.bound), inst.bound);
    bool reverse = true;
    for (const auto& m : index_box(h.d, inst.bound)) reverse = reverse && back.module_at(m) == h.module_at(m);
    o.require(reverse, inst.label + ": reverse composite differs");
    count += forward && reverse ? 1 : 0;
  }
  if (o.passed) o.detail = std::to_string(count) + " ideals round-trip in both directions";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  std::size_t count = 0;
  std::size_t local = 0;
  std::uint64_t shortest = 1000;
  std::uint64_t longest = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = nvars(rng);
    const auto i = random_primary(rng, n, 20);
    Ideal j = random_primary(rng, n, 20);
    while (j.ring().mode() != i.ring().mode()) j = random_primary(rng, n, 20);
    j = make_artinian(untruncated(j).in_ring(i.ring_ptr()));
    const auto label = to_string(std::span(i.generators())) + " / " + to_string(std::span(j.generators()));

    const auto wi = perp_ideal(i);
    const auto wj = perp_ideal(j);
    const auto len = hilbert_data(i).length;
    shortest = std::min(shortest, len);
    longest = std::max(longest, len);
    local += i.ring().is_local() ? 1 : 0;
    o.require(wi.dimension() == len, "length not preserved: " + label);
    o.require(artinian_equal(perp_module(wi).ideal, i), "double perp fails: " + label);
    const auto sum = make_artinian(untruncated(i) + untruncated(j));
    o.require(perp_ideal(sum) == module_intersect(wi, wj), "sum law fails: " + label);
    const auto meet = make_artinian(ideal_intersect(untruncated(i), untruncated(j)));
    o.require(perp_ideal(meet) == module_sum(wi, wj), "intersection law fails: " + label);
    ++count;
  }
  if (o.passed) o.detail = std::to_string(count) + " random m-primary pairs (" + std::to_string(local) +
               " local), lengths " + std::to_string(shortest) + ".." + std::to_string(longest);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(66);
  std::size_t regular = 0;
  std::size_t rejected = 0;
  // regular sequences: z-blocks of random complete intersections and random linear forms
  for (int k = 0; k < 22; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const std::size_t d = (k % 2 == 0 || n == 2) ? 1 : 2;
    const auto i = random_graded_ci(rng, n, d, 3);
    std::vector<Polynomial> g;
    if (k % 4 == 3) {
      g = find_linear_regular_sequence(i, d, 50, static_cast<std::uint64_t>(k));
    } else {
      for (auto v : i.ring().z_block()) g.push_back(Polynomial::variable(i.ring_ptr(), v));
    }
    bool ok = true;
    for (unsigned l = 0; l <= 4; ++l) {
      const auto r = rees_dimension_check(g, i, l, 9);
      ok = ok && r.regular && r.checked && r.passed;
    }
    o.require(ok, "Rees check fails on " + to_string(std::span(i.generators())));
    regular += ok ? 1 : 0;
  }
  {
    // non-homogeneous m-primary case
    const auto ring = small_ring(2, RingMode::Local);
    const auto i = ideal(ring, {"x^2 - y^3 - y^4"});
    bool ok = true;
    for (unsigned l = 0; l <= 4; ++l) ok = ok && rees_dimension_check(polys(ring, {"y"}), i, l, 10).passed;
    o.require(ok, "Rees check fails on the local hypersurface");
  }
  // planted zero divisors: g_1 * q in I with q outside I
  for (int k = 0; k < 6; ++k) {
    const auto ring = small_ring(3);
    const auto g1 = random_polynomial(ring, rng, 1, 1, 3);
    const auto q = random_polynomial(ring, rng, 1, 2, 3);
    if (g1.is_zero() || q.is_zero()) {
      --k;
      continue;
    }
    const auto i = Ideal(ring, {g1 * q, poly(ring, "z^3")});
    if (contains(i, q) || contains(i, g1)) {
      --k;
      continue;
    }
    const auto r = rees_dimension_check({g1, poly(ring, "z")}, i, 2, 6);
    o.require(!r.regular && !r.passed, "planted non-regular sequence accepted");
    rejected += (!r.regular && !r.passed) ? 1 : 0;
  }

  // diagonal monoid ideals
  std::size_t diagonals = 0;
  for (std::size_t t = 1; t <= 3; ++t) {
    for (const auto& m : index_box(t, 5)) {
      const auto soc = monoid_socle(MonoidIdeal::diagonal(m));
      Exponent corner(t);
      for (std::size_t a = 0; a < t; ++a) corner.set(a, m[a] - 1);
      o.require(soc.size() == 1 && soc[0] == corner, "diagonal socle wrong at " + to_string(m));
      ++diagonals;
    }
  }
  // random monoid ideals against a brute-force scan
  std::size_t monoids = 0;
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<unsigned> entry(0, 4);
    const auto t = dim(rng);
    std::vector<Exponent> gens;
    for (std::size_t a = 0; a < t; ++a) {
      Exponent e(t);
      e.set(a, 1 + entry(rng));
      gens.push_back(e);
    }
    for (int extra = 0; extra < 3; ++extra) {
      Exponent e(t);
      for (std::size_t a = 0; a < t; ++a) e.set(a, entry(rng));
      if (e.degree() > 0) gens.push_back(e);
    }
    const MonoidIdeal monoid(t, gens);
    auto member = [&](const std::vector<unsigned>& n) {
      for (const auto& g : gens) {
        bool div = true;
        for (std::size_t a = 0; a < t; ++a) div = div && g[a] <= n[a];
        if (div) return true;
      }
      return false;
    };
    std::set<std::vector<unsigned>> oracle;
    std::vector<unsigned> n(t, 0);
    while (true) {
      if (!member(n)) {
        bool corner = true;
        for (std::size_t a = 0; a < t; ++a) {
          auto up = n;
          ++up[a];
          corner = corner && member(up);
        }
        if (corner) oracle.insert(n);
      }
      std::size_t a = 0;
      while (a < t && n[a] == 6) n[a++] = 0;
      if (a == t) break;
      ++n[a];
    }
    std::set<std::vector<unsigned>> got;
    for (const auto& e : monoid_socle(monoid)) got.insert(e.to_vector());
    o.require(got == oracle, "monoid socle differs from brute force");
    ++monoids;
  }

  // socle product on the round-trip suite
  std::size_t products = 0;
  for (const auto& inst : roundtrip_suite()) {
    const auto& i = inst.ideal;
    std::vector<Polynomial> h;
    for (auto v : i.ring().z_block()) h.push_back(Polynomial::variable(i.ring_ptr(), v));
    std::vector<MonoidIdeal> monoids_here;
    if (h.size() == 1) {
      monoids_here = {MonoidIdeal::diagonal({1}), MonoidIdeal::diagonal({3})};
    } else {
      monoids_here = {MonoidIdeal::diagonal({2, 2}),
                      MonoidIdeal(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 3}})};
    }
    for (const auto& m : monoids_here) {
      const auto r = socle_product_check(i, h, m);
      o.require(r.passed, "socle product fails on " + inst.label);
      products += r.passed ? 1 : 0;
    }
  }
  o.require(regular >= 20 && rejected >= 5, "too few instances");
  if (o.passed) {
    o.detail = std::to_string(regular) + " regular sequences, " + std::to_string(rejected) +
               " planted rejections, " + std::to_string(diagonals) + " diagonal and " +
               std::to_string(monoids) + " random monoid ideals, " + std::to_string(products) +
               " socle products";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(!produced.empty(), "no limit systems from criteria 2 and 4");
  for (const auto& h : produced) {
    const auto report = verify_lis(h);
    o.require(report.passed(), "verify_lis rejects a produced system");
  }
  if (produced.empty()) return o;
  const auto& base = produced.front();
  auto witness_names = [](const ConditionReport* c, const std::string& needle) {
    if (!c || c->passed) return false;
    return std::any_of(c->witnesses.begin(), c->witnesses.end(),
                       [&](const std::string& w) { return w.find(needle) != std::string::npos; });
  };
  {
    auto bad = base;
    bad.family[{4}][0] = Polynomial(bad.ring);
    const auto r = verify_lis(bad);
    o.require(!r.passed() && witness_names(r.find("dimension"), "m = (4)"), "zeroed H_4 not caught");
  }
  {
    auto bad = base;
    bad.family[{5}][1] += dual(bad.ring, "W^12");
    const auto r = verify_lis(bad);
    o.require(!r.passed() && witness_names(r.find("degree"), "m = (5)"), "degree inflation not caught");
  }
  {
    auto bad = base;
    bad.family[{3}][0] += bad.family[{3}][1];
    const auto r = verify_lis(bad);
    o.require(!r.passed() && witness_names(r.find("compatibility"), "m = (3)"),
              "broken compatibility not caught");
  }
  if (o.passed) {
    o.detail = std::to_string(produced.size()) + " produced systems verified; 3 mutations caught";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"worked-example socles", criterion1},
      {"worked-example limit system", criterion2},
      {"type and Hilbert profile", criterion3},
      {"round-trip bijection", criterion4},
      {"duality properties", criterion5},
      {"Rees map, monoid socles, socle products", criterion6},
      {"limit system verification", criterion7},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << took.count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << (k + 1) << " ("
              << criteria[k].first << "): " << o.detail << " [" << secs.str() << " s]"
              << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
