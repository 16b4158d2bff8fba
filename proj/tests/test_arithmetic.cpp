#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "homcss/arithmetic.hpp"
#include "homcss/error.hpp"
#include "homcss/sampling.hpp"
#include "arith_oracle.hpp"

using namespace homcss;

namespace {

// Small-entry reference arithmetic on (a, b) pairs in int64.
struct Q {
  long long a = 0, b = 0;
};
using QM = std::vector<std::vector<Q>>;

Q mul(Q x, Q y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }
Q add(Q x, Q y) { return {x.a + y.a, x.b + y.b}; }

QM to_q(const ZSqrt2Matrix& m) {
  QM out(m.size(), std::vector<Q>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      out[r][c] = {m.at(r, c).a.convert_to<long long>(), m.at(r, c).b.convert_to<long long>()};
  return out;
}

QM qmul(const QM& x, const QM& y) {
  const auto n = x.size();
  QM out(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] = add(out[i][j], mul(x[i][k], y[k][j]));
  return out;
}

// Cofactor expansion, no division.
Q qdet(const QM& m) {
  const auto n = m.size();
  if (n == 1) return m[0][0];
  Q total;
  for (std::size_t c = 0; c < n; ++c) {
    QM minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    auto t = mul(m[0][c], qdet(minor));
    if (c % 2) t = {-t.a, -t.b};
    total = add(total, t);
  }
  return total;
}

bool q_preserves(const QM& m, const std::vector<Q>& f) {
  const auto n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Q s;
      for (std::size_t k = 0; k < n; ++k) s = add(s, mul(mul(m[k][i], f[k]), m[k][j]));
      const Q want = i == j ? f[i] : Q{};
      if (s.a != want.a || s.b != want.b) return false;
    }
  const auto d = qdet(m);
  return d.a == 1 && d.b == 0;
}

ZSqrt2Matrix integral(const std::vector<std::vector<BigInt>>& a) {
  return ZSqrt2Matrix::from_parts(a, std::vector<std::vector<BigInt>>(a.size(),
                                                                       std::vector<BigInt>(a.size(), 0)));
}

std::vector<ZSqrt2Matrix> integral_generators() {
  return {integral({{3, 2, 2}, {2, 2, 1}, {2, 1, 2}}), integral({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}})};
}

std::vector<ZSqrt2Matrix> sqrt2_generators() {
  auto found = search_form_preserving(QuadraticForm::sqrt2_form(2), 3, 2, 200);
  std::vector<ZSqrt2Matrix> out;
  for (const auto& m : found)
    if (entry_norm(m) > 1 && out.size() < 4) out.push_back(m);
  return out;
}

ZSqrt2Matrix random_matrix(Rng& rng, std::size_t n, int h) {
  ZSqrt2Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = ZSqrt2(static_cast<long long>(rng.below(2 * h + 1)) - h,
                          static_cast<long long>(rng.below(2 * h + 1)) - h);
  return m;
}

}  // namespace

TEST_CASE("ring operations") {
  const ZSqrt2 u(1, 1);
  CHECK(u * u.conjugate() == ZSqrt2(-1));
  CHECK(ZSqrt2(3, 2).conjugate() == ZSqrt2(3, -2));
  CHECK(u * u * u * u == ZSqrt2(17, 12));
  CHECK(u.norm() == -1);
  const auto [p1, p2] = u.embed();
  CHECK(p1 == doctest::Approx(1 + std::sqrt(2.0)));
  CHECK(p2 == doctest::Approx(1 - std::sqrt(2.0)));
  CHECK(exact_divide(ZSqrt2(17, 12), u) == ZSqrt2(7, 5));
  CHECK_FALSE(exact_divide(ZSqrt2(1), ZSqrt2(2)));
  CHECK(ZSqrt2(1, -2).to_string() == "1-2r2");
}

TEST_CASE("determinant and product match the int64 oracle") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng.below(4);
    const auto m = random_matrix(rng, n, 3);
    const auto d = determinant(m);
    const auto o = qdet(to_q(m));
    CHECK(d.a == o.a);
    CHECK(d.b == o.b);
    const auto m2 = random_matrix(rng, n, 3);
    const auto p = to_q(m * m2), po = qmul(to_q(m), to_q(m2));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(p[r][c].a == po[r][c].a);
        CHECK(p[r][c].b == po[r][c].b);
      }
  }
}

TEST_CASE("preserves_form") {
  const auto qi = QuadraticForm::integral_form(2);
  CHECK(preserves_form(ZSqrt2Matrix::identity(3), qi));
  CHECK_FALSE(preserves_form(integral({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), qi));
  const std::vector<Q> fi = {{-1, 0}, {1, 0}, {1, 0}};
  const auto bad = integral({{3, 2, 2}, {2, 1, 2}, {2, 2, 3}});
  CHECK_FALSE(preserves_form(bad, qi));
  CHECK_FALSE(q_preserves(to_q(bad), fi));
  for (const auto& g : integral_generators()) {
    CHECK(preserves_form(g, qi));
    CHECK(q_preserves(to_q(g), fi));
  }
  const std::vector<Q> fs = {{0, -1}, {1, 0}, {1, 0}};
  for (const auto& g : sqrt2_generators()) {
    CHECK(preserves_form(g, QuadraticForm::sqrt2_form(2)));
    CHECK(q_preserves(to_q(g), fs));
  }
}

TEST_CASE("search results all verify independently") {
  const std::vector<Q> fs = {{0, -1}, {1, 0}, {1, 0}};
  const auto found = search_form_preserving(QuadraticForm::sqrt2_form(2), 3, 2, 1000);
  CHECK(found.size() > 7);
  std::set<std::string> seen;
  for (const auto& m : found) {
    CHECK(q_preserves(to_q(m), fs));
    CHECK_FALSE(m.is_identity());
    CHECK(seen.insert(generators_to_json({m})).second);
  }
}

TEST_CASE("group closure and inverse") {
  const auto q = QuadraticForm::sqrt2_form(2);
  const auto gens = sqrt2_generators();
  REQUIRE(gens.size() >= 2);
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_word(rng, gens, 1 + rng.below(5));
    CHECK(preserves_form(m, q));
    const auto inv = group_inverse(m, q);
    CHECK(preserves_form(inv, q));
    CHECK((m * inv).is_identity());
  }
  CHECK_THROWS_AS(group_inverse(integral({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), q), InvalidArgument);
}

TEST_CASE("galois twist") {
  const auto q = QuadraticForm::sqrt2_form(2);
  CHECK(galois_twist(ZSqrt2Matrix::identity(3), q).is_identity());
  const auto gens = sqrt2_generators();
  Rng rng(8);
  double max_phi2 = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_word(rng, gens, 1 + rng.below(4));
    const auto b = random_word(rng, gens, 1 + rng.below(4));
    CHECK(preserves_form(galois_twist(a, q), QuadraticForm::twisted_form(2)));
    CHECK(galois_twist(a * b, q) == galois_twist(a, q) * galois_twist(b, q));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        max_phi2 = std::max(max_phi2, std::abs(a.at(r, c).embed().second));
  }
  MESSAGE("max |phi2(entry)| over sampled words: " << max_phi2);
  CHECK_THROWS_AS(galois_twist(integral({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), q), InvalidArgument);
}

TEST_CASE("entry norm and growth constant") {
  CHECK(entry_norm(ZSqrt2Matrix::identity(3)) == 1);
  CHECK(entry_norm(ZSqrt2Matrix(3)) == 0);
  CHECK(growth_constant({ZSqrt2Matrix::identity(3)}) == 9);
  auto five = ZSqrt2Matrix::identity(5);
  five.at(0, 1) = ZSqrt2(0, -5);
  CHECK(growth_constant({five, ZSqrt2Matrix::identity(5)}) == 75);

  const auto gens = sqrt2_generators();
  const auto c2 = growth_constant(gens);
  Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto len = 1 + rng.below(10);
    const auto w = random_word(rng, gens, len);
    CHECK(entry_norm(w) <= boost::multiprecision::pow(c2, static_cast<unsigned>(len)));
    const auto a = random_matrix(rng, 3, 50), b = random_matrix(rng, 3, 50);
    CHECK(entry_norm(a * b) <= 9 * entry_norm(a) * entry_norm(b));
  }
}

TEST_CASE("reduce_mod") {
  for (std::uint64_t n : {2, 3, 10}) CHECK(reduce_mod(ZSqrt2Matrix::identity(3), n).is_identity());
  auto u = ZSqrt2Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) u.at(i, i) = ZSqrt2(1, 1);
  const auto r = reduce_mod(u, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(r.a(i, j) == (i == j));
      CHECK(r.b(i, j) == (i == j));
    }
  auto neg = ZSqrt2Matrix::identity(2);
  neg.at(0, 1) = ZSqrt2(-1, -4);
  CHECK(reduce_mod(neg, 3).a(0, 1) == 2);
  CHECK(reduce_mod(neg, 3).b(0, 1) == 2);
  CHECK_THROWS_AS(reduce_mod(u, 1), InvalidArgument);

  const auto gens = sqrt2_generators();
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_word(rng, gens, 1 + rng.below(6));
    const auto b = random_word(rng, gens, 1 + rng.below(6));
    const std::uint64_t n = 2 + rng.below(50);
    CHECK(reduce_mod(a * b, n) == reduce_mod(a, n) * reduce_mod(b, n));
  }
  // One byte per residue below 256, two below 65536; Ā then B̄.
  CHECK(reduce_mod(u, 5).key().size() == 18);
  CHECK(reduce_mod(u, 1000).key().size() == 36);
  CHECK(reduce_mod(u, 5).key_hex().size() == 36);
}

TEST_CASE("gamma membership and entry bound") {
  CHECK(gamma_member(ZSqrt2Matrix::identity(3), 7));
  auto m = ZSqrt2Matrix::identity(3);
  m.at(0, 1) = ZSqrt2(8);
  CHECK_FALSE(gamma_member(m, 7));
  CHECK_THROWS_AS(entry_bound_check(ZSqrt2Matrix::identity(3), 3), InvalidArgument);
  CHECK_THROWS_AS(entry_bound_check(m, 7), InvalidArgument);

  const auto q = QuadraticForm::integral_form(2);
  for (std::uint64_t n : {2, 3, 5, 7}) {
    const auto found = gamma_search(integral_generators(), q, n, 100000);
    CHECK_FALSE(found.empty());
    for (const auto& g : found) {
      CHECK(gamma_member(g, n));
      CHECK(preserves_form(g, q));
      const auto w = entry_bound_check(g, n);
      CHECK(w.holds);
      CHECK(w.value >= n - 1);
    }
  }
}

TEST_CASE("normality of gamma") {
  const auto q = QuadraticForm::integral_form(2);
  const auto gens = integral_generators();
  const auto found = gamma_search(gens, q, 3, 100000);
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_word(rng, gens, 1 + rng.below(4));
    const auto& n = found[rng.below(found.size())];
    CHECK(gamma_member(g * n * group_inverse(g, q), 3));
  }
}

TEST_CASE("word length lower bound") {
  CHECK(word_length_lower_bound(1000000, 75.0) == 4);
  CHECK(word_length_lower_bound(2, 9.0) == 0);
  CHECK(word_length_lower_bound(10, 9.0) == 1);
}

TEST_CASE("quotient closure against a brute-force ambient group") {
  CHECK(quotient_closure({ZSqrt2Matrix::identity(3)}, 5, 10).order == 1);
  const auto gens = integral_generators();
  for (std::uint64_t n : {2, 3}) {
    const auto N = static_cast<long long>(n);
    const auto ambient = oracle::ambient_group(N);
    for (const auto& g : gens) CHECK(ambient.count(oracle::residue_of(g, N)) == 1);
    const auto reached = oracle::reachable_within(gens, ambient, N);
    const auto c = quotient_closure(gens, n, 1000000);
    CHECK(c.complete);
    CHECK(c.within_bound);
    CHECK(c.order == reached.size());
    CHECK(ambient.size() % c.order == 0);
    CHECK(c.ambient_bound == boost::multiprecision::pow(BigInt(n), 18));
    CHECK(BigInt(c.order) <= c.ambient_bound);
    CHECK(std::is_sorted(c.keys.begin(), c.keys.end()));
    MESSAGE("N=" << n << " closure " << c.order << ", ambient " << ambient.size());
  }
  CHECK_FALSE(quotient_closure(gens, 7, 10).complete);
}

TEST_CASE("injectivity radius") {
  const double c1 = 0.5, c2 = 2.0;
  CHECK(injectivity_radius_bound(std::exp((1 + c2) / c1), c1, c2) == doctest::Approx(1.0));
  CHECK(injectivity_radius_bound(100, c1, c2) < injectivity_radius_bound(1000, c1, c2));
  CHECK_THROWS_AS(injectivity_radius_bound(10, 0, 1), InvalidArgument);
}

TEST_CASE("generator json") {
  auto big = ZSqrt2Matrix::identity(2);
  big.at(0, 1) = ZSqrt2(BigInt("123456789012345678901234567890"), -3);
  const auto text = generators_to_json({big, ZSqrt2Matrix::identity(2)});
  const auto back = generators_from_json(text);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == big);
  CHECK(generators_from_json(R"([{"A":[[1,0],[0,1]]}])")[0].is_identity());
  CHECK_THROWS_AS(generators_from_json("[{\"B\":[[1]]}]"), ParseError);
  CHECK_THROWS_AS(generators_from_json("[{\"A\":[[1,2]]}]"), DimensionError);
}
