#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "homcss/builders.hpp"
#include "homcss/css_code.hpp"
#include "homcss/error.hpp"
#include "homcss/sampling.hpp"
#include "oracles.hpp"

using namespace homcss;

namespace {

ChainComplex tetrahedron() {
  return from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

void check_orthogonal(const CssCode& c) {
  for (const auto& a : c.w1().row_vectors())
    for (const auto& b : c.w2().row_vectors()) CHECK_FALSE(a.dot(b));
}

}  // namespace

TEST_CASE("build") {
  const auto c = CssCode::build(toric_grid(2), 1);
  CHECK(c.n() == 8);
  CHECK(c.w1().rows() == 4);
  CHECK(c.w2().rows() == 4);
  check_orthogonal(c);
  const auto c0 = CssCode::build(toric_grid(2), 0);
  CHECK(c0.w2().rows() == 0);
  CHECK(code_dimension(c0) == 1);
  const auto t4 = tensor_product(toric_grid(2), toric_grid(2));
  const auto c4 = CssCode::build(t4, 2);
  CHECK(c4.n() == t4.cells(2));
  check_orthogonal(c4);
  CHECK_THROWS_AS(CssCode::build(toric_grid(2), 3), InvalidArgument);
}

TEST_CASE("code dimension equals Betti number") {
  CHECK(code_dimension(CssCode::build(toric_grid(3), 1)) == 2);
  CHECK(code_dimension(CssCode::build(tetrahedron(), 1)) == 0);
  const auto t4 = tensor_product(toric_grid(2), toric_grid(2));
  CHECK(code_dimension(CssCode::build(t4, 2)) == 6);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = from_facets(random_facets(rng, 7, 6, 3));
    const auto b = oracle::betti(x);
    for (std::size_t i = 0; i <= x.dim(); ++i)
      CHECK(code_dimension(CssCode::build(x, i)) == b[i]);
  }
}

TEST_CASE("exact distance on toric codes") {
  for (std::size_t L = 2; L <= 3; ++L) {
    const auto t = toric_grid(L);
    const auto p = distance_exact(CssCode::build(t, 1));
    CHECK(p.n == 2 * L * L);
    CHECK(p.k == 2);
    CHECK(p.d.exact());
    const auto o = oracle::distance(t, 1, L + 1);
    REQUIRE(o);
    CHECK(p.d.lo == o->weight);
    CHECK(p.d.lo == L);
    CHECK(p.d.witness == o->support);
  }
  CHECK_THROWS_AS(distance_exact(CssCode::build(tetrahedron(), 1)), NoNontrivialClass);
}

TEST_CASE("bounded distance") {
  const auto c = CssCode::build(toric_grid(3), 1);
  const auto exact = distance_bounded(c, {26, 3, 1});
  CHECK(exact.d.exact());
  CHECK(exact.d.lo == 3);
  CHECK(exact.d.witness == distance_exact(c).d.witness);
  const auto interval = distance_bounded(c, {26, 2, 1});
  CHECK(interval.d.lo == 3);
  CHECK(interval.d.hi == 18);
  CHECK_FALSE(interval.d.exact());
  CHECK_FALSE(oracle::distance(toric_grid(3), 1, 2));
}

TEST_CASE("budget refusal names the dimension") {
  const auto t4 = tensor_product(toric_grid(2), toric_grid(2));
  const auto c = CssCode::build(t4, 2);
  try {
    distance_exact(c);
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(e.dimension() == 51);
  }
  const auto p = distance_auto(c);
  CHECK(p.d.exact());
  CHECK(p.d.lo == 4);
}

TEST_CASE("parallel search agrees with serial") {
  for (std::size_t L = 2; L <= 4; ++L) {
    const auto c = CssCode::build(toric_grid(L), 1);
    const auto serial = distance_exact(c, {26, 4, 1});
    const auto par = distance_exact(c, {26, 4, 4});
    CHECK(serial.d.lo == par.d.lo);
    CHECK(serial.d.witness == par.d.witness);
    const auto bs = distance_bounded(c, {26, 4, 1});
    const auto bp = distance_bounded(c, {26, 4, 3});
    CHECK(bs.d.witness == bp.d.witness);
  }
}

TEST_CASE("witness minimality by exhaustive scan on small random complexes") {
  Rng rng(19);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 15; ++trial) {
    const auto x = from_facets(random_facets(rng, 6, 4 + rng.below(4), 3));
    for (std::size_t i = 0; i <= x.dim(); ++i) {
      if (x.cells(i) > 12) continue;
      const auto c = CssCode::build(x, i);
      if (code_dimension(c) == 0) continue;
      const auto p = distance_exact(c);
      const auto o = oracle::distance(x, i, x.cells(i));
      REQUIRE(o);
      CHECK(p.d.lo == o->weight);
      CHECK(p.d.witness == o->support);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("systole") {
  CHECK(combinatorial_systole(toric_grid(3), 1).lo == 3);
  CHECK(combinatorial_systole(tetrahedron(), 2).lo == 4);
  CHECK(combinatorial_systole(toric_grid(4), 1, {10, 4, 1}).lo == 4);
  CHECK_THROWS_AS(combinatorial_systole(tetrahedron(), 1), NoNontrivialClass);
  CHECK_THROWS_AS(combinatorial_systole(toric_grid(5), 1, {10, 3, 1}), BudgetError);
}

TEST_CASE("ldpc") {
  for (std::size_t L = 2; L <= 5; ++L) CHECK(ldpc_check(CssCode::build(toric_grid(L), 1)) == 4);
  CHECK(ldpc_check(CssCode::build(tetrahedron(), 1)) == 3);
  // Leibniz: a 2-cell of T⁴ is face×vertex, edge×edge or vertex×face.
  const auto t4 = tensor_product(toric_grid(2), toric_grid(2));
  std::size_t expected = 0;
  for (const auto& col : {t4.boundary(3).max_col_weight(), t4.boundary(2).max_row_weight()})
    expected = std::max(expected, col);
  CHECK(ldpc_check(CssCode::build(t4, 2)) == expected);
}

TEST_CASE("zemor report") {
  std::vector<CodeParams> ps;
  for (std::size_t L = 2; L <= 4; ++L) ps.push_back(distance_exact(CssCode::build(toric_grid(L), 1)));
  CodeParams unit;
  unit.n = unit.k = 1;
  unit.d.lo = unit.d.hi = 1;
  ps.push_back(unit);
  const auto rows = zemor_report(ps, 0.0);
  for (const auto& r : rows) {
    CHECK(r.ratio_lo == doctest::Approx(1.0));
    CHECK(r.ratio_hi == doctest::Approx(1.0));
  }
  CHECK_FALSE(rows.back().exponent_lo.has_value());
  CHECK(*rows[0].exponent_lo == doctest::Approx(1.0));
  CHECK_FALSE(zemor_report(ps, 0.1)[0].exceeds);

  CodeParams wide;
  wide.n = 100;
  wide.k = 4;
  wide.d.lo = 3;
  wide.d.hi = 10;
  const auto row = zemor_report({wide}, 0.0)[0];
  CHECK(row.ratio_lo == doctest::Approx(0.36));
  CHECK(row.ratio_hi == doctest::Approx(4.0));
  CHECK(*row.exponent_lo == doctest::Approx(std::log(36.0) / std::log(100.0)));
}

TEST_CASE("params json") {
  const auto p = distance_exact(CssCode::build(toric_grid(3), 1));
  const auto j = params_to_json(p);
  CHECK(j.find("\"d\":{\"exact\":3}") != std::string::npos);
  CHECK(j.rfind("{\"n\":18,\"k\":2,", 0) == 0);
  auto q = p;
  q.d.hi = 18;
  CHECK(params_to_json(q).find("\"d\":{\"lo\":3,\"hi\":18}") != std::string::npos);
}
