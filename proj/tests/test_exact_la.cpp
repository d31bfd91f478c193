#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/exact_la.hpp"

using namespace ribbonkit;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

IntMatrix from_grid(const oracle::Grid& g) {
  IntMatrix m(labels(static_cast<int>(g.size())));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  }
  return m;
}

oracle::Grid random_grid(std::mt19937& gen, int n, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  oracle::Grid g(n, std::vector<long>(n));
  for (auto& row : g) {
    for (auto& v : row) v = entry(gen);
  }
  return g;
}

oracle::Grid random_skew(std::mt19937& gen, int n) {
  std::uniform_int_distribution<int> entry(-1, 1);
  oracle::Grid g(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g[i][j] = entry(gen);
      g[j][i] = -g[i][j];
    }
  }
  return g;
}

}  // namespace

TEST_CASE("principal minors match cofactor expansion") {
  std::mt19937 gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const oracle::Grid g = random_grid(gen, n, -3, 3);
    const IntMatrix m = from_grid(g);
    const RatMatrix r = to_rational(m);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const long expected = oracle::laplace_det(oracle::principal(g, x));
      REQUIRE(det(m, EdgeSet(x)) == expected);
      REQUIRE(det(r, EdgeSet(x)) == expected);
    }
    REQUIRE(det(m) == oracle::laplace_det(g));
  }
}

TEST_CASE("principal pivots satisfy Tucker's minor identity") {
  std::mt19937 gen(2);
  int pivots = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 4;
    const RatMatrix m = to_rational(from_grid(random_grid(gen, n, -2, 2)));
    const EdgeSet x(gen() % (std::uint64_t{1} << n));
    const mpq_class base = det(m, x);
    if (base == 0) {
      CHECK_THROWS_AS(principal_pivot(m, x), Error);
      continue;
    }
    ++pivots;
    const RatMatrix p = principal_pivot(m, x);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      REQUIRE(det(p, EdgeSet(y)) == det(m, x ^ EdgeSet(y)) / base);
    }
  }
  CHECK(pivots > 20);
}

TEST_CASE("Smith normal forms of known matrices") {
  const IntMatrix a = from_grid({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  std::vector<mpz_class> expected = {2, 6, 12};
  CHECK(smith_normal_form(a).diagonal == expected);
  const IntMatrix b = from_grid({{1, 0}, {0, 0}});
  expected = {1, 0};
  CHECK(smith_normal_form(b).diagonal == expected);
  const IntMatrix c = from_grid({{0, 3}, {3, 0}});
  expected = {3, 3};
  CHECK(smith_normal_form(c).diagonal == expected);
}

TEST_CASE("Smith diagonals divide each other and multiply to the determinant") {
  std::mt19937 gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const oracle::Grid g = random_grid(gen, n, -4, 4);
    const auto d = smith_normal_form(from_grid(g)).diagonal;
    REQUIRE(static_cast<int>(d.size()) == n);
    mpz_class product = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      REQUIRE(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
      if (d[i] == 0 && i + 1 < d.size()) REQUIRE(d[i + 1] == 0);
      product *= d[i];
    }
    mpz_class expected = oracle::laplace_det(g);
    REQUIRE(product == abs(expected));
  }
}

TEST_CASE("principal unimodularity and represented systems") {
  const IntMatrix pu = from_grid({{1, 1, 1}, {-1, 0, 0}, {-1, 0, 0}});
  CHECK(is_pu(pu));
  const IntMatrix not_pu = from_grid({{2, 0}, {0, 1}});
  CHECK_FALSE(is_pu(not_pu));
  const SetSystem s = represented_system(pu);
  std::vector<EdgeSet> expected = {EdgeSet(0b000), EdgeSet(0b001), EdgeSet(0b011), EdgeSet(0b101)};
  CHECK(s.feasible() == expected);

  GF2Matrix m(labels(3));
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 0, true);
  m.set(0, 2, true);
  m.set(2, 0, true);
  CHECK(represented_system(m).feasible() == expected);
  CHECK(rank_gf2(m, m.all()) == 2);
  CHECK(is_symmetric(m));
}

TEST_CASE("rational matrices convert back only when integral") {
  RatMatrix r(labels(2));
  r(0, 0) = mpq_class(1, 2);
  CHECK_FALSE(to_integer(r).has_value());
  r(0, 0) = 3;
  REQUIRE(to_integer(r).has_value());
  CHECK((*to_integer(r))(0, 0) == 3);
}

TEST_CASE("rank-one updates and bordered matrices share lifted minors") {
  std::mt19937 gen(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const oracle::Grid skew = random_skew(gen, n);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = static_cast<int>(gen() % 3) - 1;
    const IntMatrix a = from_grid(skew);
    REQUIRE(is_skew_symmetric(a));
    const IntMatrix updated = rank_one_update(a, v);
    const IntMatrix border = bordered(a, v, "hat");
    REQUIRE(border.size() == n + 1);
    REQUIRE(border.index().back() == "hat");
    for (int i = 0; i < n; ++i) {
      REQUIRE(border(i, n) == v[i]);
      REQUIRE(border(n, i) == -v[i]);
      for (int j = 0; j < n; ++j) REQUIRE(updated(i, j) == skew[i][j] + v[i] * v[j]);
    }
    // Even subsets keep their index set; odd ones gain the border element.
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      EdgeSet lifted(x);
      if (lifted.size() % 2 == 1) lifted = lifted.with(n);
      REQUIRE(det(updated, EdgeSet(x)) == det(border, lifted));
    }
    REQUIRE(bordered_identity_check(a, v));
  }
  CHECK_THROWS_AS(bordered_identity_check(from_grid({{1}}), {1}), Error);
}

TEST_CASE("identity_plus adds one along the diagonal") {
  const IntMatrix m = from_grid({{0, 1}, {-1, 0}});
  const IntMatrix i = identity_plus(m);
  CHECK(i(0, 0) == 1);
  CHECK(i(1, 1) == 1);
  CHECK(i(0, 1) == 1);
  CHECK(det(i) == 2);
}
