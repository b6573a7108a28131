#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gfr/arith.hpp"
#include "oracles.hpp"

namespace arith = gfr::arith;

TEST_CASE("factorize") {
  auto f31 = arith::factorize((1ull << 5) - 1);
  REQUIRE(f31.factors.size() == 1);
  CHECK(f31.factors[0] == std::pair<std::uint64_t, int>{31, 1});

  auto f2047 = arith::factorize((1ull << 11) - 1);
  REQUIRE(f2047.factors.size() == 2);
  CHECK(f2047.factors[0] == std::pair<std::uint64_t, int>{23, 1});
  CHECK(f2047.factors[1] == std::pair<std::uint64_t, int>{89, 1});

  CHECK(arith::factorize(1).factors.empty());
  CHECK_THROWS_AS(arith::factorize(0), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t m = rng() % 100000 + 1;
    std::uint64_t prod = 1;
    for (auto [p, e] : arith::factorize(m).factors) {
      CHECK(arith::is_prime(p));
      for (int j = 0; j < e; ++j) prod *= p;
    }
    CHECK(prod == m);
  }
}

TEST_CASE("totient agrees with brute force and is multiplicative") {
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(arith::totient(n) == oracles::brute_totient(n));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = rng() % 300 + 1, b = rng() % 300 + 1;
    if (std::gcd(a, b) != 1) continue;
    CHECK(arith::totient(a * b) == arith::totient(a) * arith::totient(b));
  }
}

TEST_CASE("phi ratios are exact rationals") {
  CHECK(arith::phi_ratio(5) == arith::Rational(30, 31));
  CHECK(arith::phi_ratio(11) == arith::Rational(1936, 2047));
  CHECK(arith::phi_ratio(5).greater_than(arith::Rational(1, 3)));
  CHECK(arith::phi_ratio(11).greater_than(arith::Rational(1, 3)));
  CHECK_THROWS_AS(arith::phi_ratio(1), std::invalid_argument);
  CHECK_THROWS_AS(arith::phi_ratio(49), std::invalid_argument);

  // prime exponent lower bound (1 - 1/2p)^(p / log2 p)
  for (int p : {5, 7, 11, 13}) {
    double bound = std::pow(1.0 - 1.0 / (2.0 * p), p / std::log2(double(p)));
    CHECK(arith::phi_ratio(p).value() > bound);
  }
}

TEST_CASE("mobius and multiplicative order") {
  CHECK(arith::mobius(1) == 1);
  CHECK(arith::mobius(4) == 0);
  CHECK(arith::mobius(6) == 1);
  CHECK(arith::mobius(30) == -1);
  CHECK(arith::mult_order_2(7) == 3);
  CHECK(arith::mult_order_2(1) == 1);
  CHECK_THROWS_AS(arith::mult_order_2(6), std::invalid_argument);

  for (std::uint64_t d = 1; d <= 10001; d += 2) {
    std::uint64_t t = arith::mult_order_2(d);
    CHECK(arith::totient(d) % t == 0);
  }
}

TEST_CASE("mu partial sums") {
  CHECK(arith::mu_partial_sum(1) == 1.0);
  CHECK(arith::mu_partial_sum(3) == Catch::Approx(1.0 - 1.0 / 6.0));
  double s1 = arith::mu_partial_sum(1000);
  double s2 = arith::mu_partial_sum(2000);
  double s4 = arith::mu_partial_sum(4000);
  // Cauchy-style shrinkage is reported, not asserted against a rate; only
  // coarse sanity here.
  INFO("S(1000)=" << s1 << " S(2000)=" << s2 << " S(4000)=" << s4);
  CHECK(std::abs(s2 - s1) < 0.05);
  CHECK(std::abs(s4 - s2) < 0.05);
  CHECK(s4 > 0.5);
  CHECK(s4 < 1.0);
}

TEST_CASE("omega bound report") {
  auto r11 = arith::omega_bound_check(11);
  CHECK(r11.k == 2);
  CHECK(r11.prime_factors == std::vector<std::uint64_t>{23, 89});
  CHECK(r11.ok);  // 23 = 2*1*11+1, 89 = 2*4*11+1, 2 < 11/log2(11)

  auto r5 = arith::omega_bound_check(5);
  CHECK(r5.k == 1);
  CHECK(r5.ok);

  CHECK_THROWS_AS(arith::omega_bound_check(4), std::invalid_argument);
}

TEST_CASE("scan of good exponents") {
  auto list = arith::scan_good_f(13);
  REQUIRE(!list.empty());
  bool has5 = false;
  for (auto& g : list) {
    CHECK(g.f % 2 == 1);
    CHECK(std::gcd(g.f, g.f0) == 1);
    CHECK(g.ratio.greater_than(arith::Rational(1, 3)));
    if (g.f == 5) {
      has5 = true;
      CHECK(g.ratio == arith::Rational(30, 31));
    }
  }
  CHECK(has5);
  CHECK_THROWS_AS(arith::scan_good_f(49), std::invalid_argument);
}

TEST_CASE("mersenne gcd identity behind the f0 suggestion") {
  for (int a = 1; a <= 24; ++a)
    for (int b = 1; b <= 24; ++b) {
      std::uint64_t lhs = std::gcd((1ull << a) - 1, (1ull << b) - 1);
      std::uint64_t rhs = (1ull << std::gcd(a, b)) - 1;
      CHECK(lhs == rhs);
    }
}
