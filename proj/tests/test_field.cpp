#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gfr/field.hpp"
#include "oracles.hpp"

using gfr::Fe;
using gfr::Field;

TEST_CASE("default modulus is the smallest irreducible polynomial") {
  // frozen by exhaustive trial-division scan over 0x20..0x3f:
  // 0x23 = x^5+x+1 factors as (x^2+x+1)(x^3+x^2+1); 0x25 is the first clean one
  CHECK(Field(5).modulus() == 0x25u);
  CHECK(Field(4).modulus() == 0x13u);

  for (int f : {4, 5, 7, 11}) {
    std::uint32_t m = Field(f).modulus();
    CHECK(oracles::poly_irreducible(m));
    for (std::uint32_t t = (1u << f) + 1; t < m; t += 2) CHECK_FALSE(oracles::poly_irreducible(t));
  }
}

TEST_CASE("constructor rejects bad moduli and exponents") {
  CHECK_THROWS_AS(Field(5, 0x23), std::invalid_argument);  // reducible
  CHECK_THROWS_AS(Field(5, 0x13), std::invalid_argument);  // wrong degree
  CHECK_THROWS_AS(Field(3), std::invalid_argument);
  CHECK_THROWS_AS(Field(21), std::invalid_argument);
  CHECK_NOTHROW(Field(4, 0x13));
}

TEST_CASE("addition is xor") {
  Field F(5);
  CHECK(F.add(F.elem(0x05), F.elem(0x06)) == F.elem(0x03));
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    CHECK(F.add(F.elem(a), F.elem(a)) == F.zero());
    CHECK(F.add(F.elem(a), F.zero()) == F.elem(a));
  }
}

TEST_CASE("multiplication matches the long-division oracle") {
  Field F(5);
  CHECK(F.mul(F.elem(0x10), F.elem(0x02)) == F.elem(0x05));  // x^4 * x = x^2+1
  for (std::uint32_t a = 0; a < F.q(); ++a)
    for (std::uint32_t b = 0; b < F.q(); ++b) {
      std::uint32_t expect = oracles::field_mul(a, b, F.modulus());
      CHECK(F.mul(F.elem(a), F.elem(b)).bits == expect);
      CHECK(F.mul_noluts(F.elem(a), F.elem(b)).bits == expect);
    }
}

TEST_CASE("table and shift-reduce multiplication agree on random pairs") {
  for (int f : {7, 11}) {
    Field F(f);
    REQUIRE(F.has_tables());
    std::mt19937 rng(20240517u + f);
    std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
    for (int i = 0; i < 20000; ++i) {
      Fe a{d(rng)}, b{d(rng)};
      CHECK(F.mul(a, b) == F.mul_noluts(a, b));
    }
  }
}

TEST_CASE("inverses") {
  Field F(5);
  CHECK(F.inv(F.one()) == F.one());
  CHECK(F.inv(F.elem(0x02)) == F.elem(0x12));  // x * (x^4+x) = x^5+x^2 = 1
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    Fe x{a};
    CHECK(F.mul(x, F.inv(x)) == F.one());
    CHECK(F.inv(F.inv(x)) == x);
  }
}

TEST_CASE("powers") {
  Field F(5);
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    Fe x{a};
    CHECK(F.pow(x, 0) == F.one());
    CHECK(F.pow(x, F.q() - 1) == F.one());
    CHECK(F.pow(x, F.q()) == x);
    CHECK(F.pow(x, -1) == F.inv(x));
  }
  CHECK(F.pow(F.zero(), 0) == F.one());
  CHECK(F.pow(F.zero(), 5) == F.zero());
  CHECK_THROWS_AS(F.pow(F.zero(), -2), std::domain_error);
}

TEST_CASE("frobenius powers") {
  Field F(5);
  CHECK(F.frob_q0(F.zero(), 3) == F.zero());
  CHECK(F.frob_q0(F.one(), 3) == F.one());
  for (int f0 : {1, 2, 3})
    for (std::uint32_t a = 0; a < F.q(); ++a)
      CHECK(F.frob_q0(Fe{a}, f0) == F.pow(Fe{a}, std::int64_t{1} << f0));
}

TEST_CASE("frobenius is additive") {
  Field F(5);
  for (std::uint32_t a = 0; a < F.q(); ++a)
    for (std::uint32_t b = 0; b < F.q(); ++b)
      CHECK(F.frob_q0(F.add(Fe{a}, Fe{b}), 1) == F.add(F.frob_q0(Fe{a}, 1), F.frob_q0(Fe{b}, 1)));
}

TEST_CASE("root_exp inverts pow") {
  Field F(5);
  // q0 = 4 case: m = q0-1 = 3; 3*21 = 63 = 2*31+1, so the root exponent is 21
  CHECK(F.root_exp(F.one(), 3) == F.one());
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    Fe y = F.root_exp(Fe{a}, 3);
    CHECK(F.pow(y, 3).bits == a);
    if (a != 0) CHECK(y == F.pow(Fe{a}, 21));
  }
  CHECK_THROWS_AS(F.root_exp(F.one(), 31), std::domain_error);  // gcd(31, 31) != 1
  Field F4(4);
  CHECK_THROWS_AS(F4.root_exp(F4.one(), 3), std::domain_error);  // gcd(3, 15) != 1
}

TEST_CASE("primitive element counts match the totient") {
  for (int f : {4, 5}) {
    Field F(f);
    std::uint32_t count = 0;
    for (std::uint32_t a = 1; a < F.q(); ++a)
      if (F.is_primitive(Fe{a})) ++count;
    CHECK(count == oracles::brute_totient(F.q() - 1));
  }
  Field F(5);
  CHECK_FALSE(F.is_primitive(F.one()));
  CHECK_THROWS_AS(F.is_primitive(F.zero()), std::domain_error);
}

TEST_CASE("discrete logs round-trip") {
  Field F(5);
  Fe eta = F.generator();
  REQUIRE(F.is_primitive(eta));
  CHECK(F.dlog(eta, F.one()) == 0);
  CHECK(F.dlog(eta, eta) == 1);
  for (std::uint32_t a = 1; a < F.q(); ++a)
    CHECK(F.pow(eta, F.dlog(eta, Fe{a})) == Fe{a});

  // a primitive base other than the table generator
  for (std::uint32_t e = 2; e < F.q(); ++e) {
    Fe b{e};
    if (!F.is_primitive(b) || b == eta) continue;
    for (std::uint32_t a = 1; a < F.q(); ++a)
      CHECK(F.pow(b, F.dlog(b, Fe{a})) == Fe{a});
    break;
  }
  CHECK_THROWS_AS(F.dlog(eta, F.zero()), std::domain_error);
  CHECK_THROWS_AS(F.dlog(F.one(), eta), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  for (int f : {4, 5, 7}) {
    Field F(f);
    std::mt19937 rng(7u * f);
    std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
    for (int i = 0; i < 10000; ++i) {
      Fe a{d(rng)}, b{d(rng)}, c{d(rng)};
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(a, b) == F.mul(b, a));
    }
  }
}

TEST_CASE("bijections forced by coprime exponents") {
  Field F(5);  // q-1 = 31, q0 = 2: gcd(q0+1, q-1) = gcd(3, 31) = 1
  std::vector<bool> seen(F.q(), false);
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    Fe y = F.pow(Fe{a}, 3);
    CHECK_FALSE(seen[y.bits]);
    seen[y.bits] = true;
  }
  // a -> a + a^{q0} has kernel {0, 1} when gcd(q0^2-1, q-1) = 1
  std::uint32_t kernel = 0;
  for (std::uint32_t a = 0; a < F.q(); ++a)
    if (F.add(Fe{a}, F.frob_q0(Fe{a}, 1)) == F.zero()) ++kernel;
  CHECK(kernel == 2);
}

TEST_CASE("large fields run without tables") {
  Field F(17);  // q - 1 = 131071 is prime
  CHECK_FALSE(F.has_tables());
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint32_t> d(1, F.q() - 1);
  for (int i = 0; i < 200; ++i) {
    Fe a{d(rng)}, b{d(rng)};
    CHECK(F.mul(a, b).bits == oracles::field_mul(a.bits, b.bits, F.modulus()));
    CHECK(F.mul(a, F.inv(a)) == F.one());
    CHECK(F.pow(a, F.q() - 1) == F.one());
  }
  // BSGS discrete log round trip
  Fe eta = F.generator();
  REQUIRE(F.is_primitive(eta));
  for (int i = 0; i < 50; ++i) {
    Fe x{d(rng)};
    CHECK(F.pow(eta, F.dlog(eta, x)) == x);
  }
  // root_exp with m = q0 - 1 for f0 = 4
  for (int i = 0; i < 50; ++i) {
    Fe x{d(rng)};
    CHECK(F.pow(F.root_exp(x, 15), 15) == x);
  }
}

TEST_CASE("hex serialization") {
  Field F(5);
  CHECK(Field::hex(F.elem(0x1f)) == "0x1f");
  CHECK(F.parse_hex("0x1f") == F.elem(0x1f));
  CHECK_THROWS_AS(F.parse_hex("0x20zz"), std::invalid_argument);
  CHECK_THROWS_AS(F.parse_hex("0xff"), std::invalid_argument);  // out of range
}
