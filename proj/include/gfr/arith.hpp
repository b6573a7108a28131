#pragma once

// Elementary number theory over 64-bit integers: factorization of Mersenne
// numbers 2^n-1, Euler phi ratios as exact rationals, the Moebius function,
// multiplicative orders of 2, and the density series they feed into.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfr::arith {

inline constexpr std::uint64_t factor_limit = std::uint64_t{1} << 48;

struct Factorization {
  std::uint64_t m = 1;
  std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent), primes ascending
};

/// Trial division. Requires 1 <= m <= 2^48.
inline Factorization factorize(std::uint64_t m) {
  if (m < 1 || m > factor_limit)
    throw std::invalid_argument("factorize: argument out of range [1, 2^48]");
  Factorization out;
  out.m = m;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  strip(2);
  for (std::uint64_t d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

inline std::uint64_t totient(std::uint64_t m) {
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize(m).factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

/// Reduced fraction of two 64-bit naturals. Comparisons go through __int128
/// so they stay exact.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    std::uint64_t g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  bool greater_than(const Rational& o) const {
    return static_cast<unsigned __int128>(num) * o.den >
           static_cast<unsigned __int128>(o.num) * den;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// phi(2^n - 1) / (2^n - 1) as an exact rational, 2 <= n <= 48.
inline Rational phi_ratio(int n) {
  if (n < 2 || n > 48) throw std::invalid_argument("phi_ratio: n out of range [2, 48]");
  std::uint64_t m = (std::uint64_t{1} << n) - 1;
  return Rational(totient(m), m);
}

inline int mobius(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("mobius: undefined at 0");
  auto fac = factorize(d);
  for (auto [p, e] : fac.factors)
    if (e > 1) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

/// Multiplicative order of 2 modulo odd d; t_1 = 1.
inline std::uint64_t mult_order_2(std::uint64_t d) {
  if (d == 0 || d % 2 == 0) throw std::invalid_argument("mult_order_2: d must be odd and positive");
  if (d == 1) return 1;
  std::uint64_t r = 2 % d;
  std::uint64_t t = 1;
  while (r != 1) {
    r = (r * 2) % d;
    ++t;
  }
  return t;
}

/// Partial sum of sum_{d odd} mu(d)/(d*t_d), taken over d <= D in ascending
/// order. The series converges to about 0.73192 but no rate is asserted.
inline double mu_partial_sum(std::uint64_t D) {
  if (D < 1) throw std::invalid_argument("mu_partial_sum: D must be >= 1");
  double s = 0.0;
  for (std::uint64_t d = 1; d <= D; d += 2) {
    int mu = mobius(d);
    if (mu == 0) continue;
    s += static_cast<double>(mu) / (static_cast<double>(d) * static_cast<double>(mult_order_2(d)));
  }
  return s;
}

struct OmegaBoundReport {
  int p = 0;
  std::uint64_t mersenne = 0;
  std::vector<std::uint64_t> prime_factors;
  int k = 0;                       // number of distinct prime factors
  bool factors_are_1_mod_2p = false;
  bool k_below_log_bound = false;  // (2p)^k < 2^p - 1
  bool k_below_p_over_log2p = false;
  bool ok = false;
};

/// Checks that 2^p - 1 (p prime) has few prime factors: every factor is
/// 1 mod 2p, and the factor count k stays under log_{2p}(2^p-1) < p/log2(p).
inline OmegaBoundReport omega_bound_check(int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("omega_bound_check: p must be prime");
  if (p > 48) throw std::invalid_argument("omega_bound_check: 2^p-1 exceeds factor limit");
  OmegaBoundReport rep;
  rep.p = p;
  rep.mersenne = (std::uint64_t{1} << p) - 1;
  auto fac = factorize(rep.mersenne);
  for (auto [q, e] : fac.factors)
    for (int i = 0; i < e; ++i) rep.prime_factors.push_back(q);
  rep.k = static_cast<int>(fac.factors.size());

  rep.factors_are_1_mod_2p = true;
  for (auto [q, e] : fac.factors)
    if ((q - 1) % (2 * static_cast<std::uint64_t>(p)) != 0) rep.factors_are_1_mod_2p = false;

  unsigned __int128 pw = 1;
  bool overflow = false;
  for (int i = 0; i < rep.k; ++i) {
    pw *= 2 * static_cast<unsigned __int128>(p);
    if (pw > (static_cast<unsigned __int128>(1) << 100)) {
      overflow = true;
      break;
    }
  }
  rep.k_below_log_bound = !overflow && pw < rep.mersenne;

  double log2p = std::log2(static_cast<double>(p));
  rep.k_below_p_over_log2p = static_cast<double>(rep.k) * log2p < static_cast<double>(p);

  rep.ok = rep.factors_are_1_mod_2p && rep.k_below_log_bound && rep.k_below_p_over_log2p;
  return rep;
}

struct GoodExponent {
  int f = 0;
  int f0 = 1;  // smallest f0 >= 1 with gcd(f, f0) = 1
  Rational ratio;
};

/// Odd exponents f in [5, max_f] with phi(2^f-1)/(2^f-1) > 1/3, each with the
/// smallest coprime f0 (for odd f that makes gcd(2^f-1, 2^{2 f0}-1) = 1).
inline std::vector<GoodExponent> scan_good_f(int max_f) {
  if (max_f > 48) throw std::invalid_argument("scan_good_f: max_f out of range");
  std::vector<GoodExponent> out;
  const Rational third(1, 3);
  for (int f = 5; f <= max_f; f += 2) {
    Rational r = phi_ratio(f);
    if (!r.greater_than(third)) continue;
    GoodExponent g;
    g.f = f;
    g.f0 = 1;
    while (std::gcd(f, g.f0) != 1) ++g.f0;
    g.ratio = r;
    out.push_back(g);
  }
  return out;
}

}  // namespace gfr::arith
