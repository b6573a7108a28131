#pragma once

// Arithmetic in GF(2^f) for 4 <= f <= 20.
//
// Elements are packed into 32-bit words: bit i of Fe::bits is the coefficient
// of x^i. The defining polynomial uses the same encoding with bit f set, so
// x^5+x^2+1 is 0x25. Multiplication goes through log/antilog tables keyed to
// a primitive element when q <= 2^16 and falls back to shift-and-reduce above
// that; the two strategies agree and are cross-tested.
//
// Fields are immutable after construction; every operation is const and safe
// for concurrent use.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfr/arith.hpp"

namespace gfr {

/// A packed element of GF(2^f): bit i = coefficient of x^i.
struct Fe {
  std::uint32_t bits = 0;
  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

namespace poly2 {

// GF(2)[x] with coefficients packed into a u64.

inline int degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t p) {
  int dp = degree(p);
  for (int d = degree(a); d >= dp; d = degree(a)) a ^= p << (d - dp);
  return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = 0;
  a = mod(a, p);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree(p) & 1) a ^= p;
  }
  return r;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

/// Ben-Or style irreducibility test: p of degree f is irreducible over GF(2)
/// iff x^{2^f} = x mod p and gcd(x^{2^{f/r}} - x, p) = 1 for each prime r | f.
inline bool irreducible(std::uint64_t p) {
  int f = degree(p);
  if (f < 1) return false;
  if (f == 1) return true;
  if ((p & 1) == 0) return false;  // divisible by x
  auto frob_pow = [&](int k) {     // x^{2^k} mod p
    std::uint64_t t = 2;           // the polynomial x
    for (int i = 0; i < k; ++i) t = mulmod(t, t, p);
    return t;
  };
  if (frob_pow(f) != 2) return false;
  for (auto [r, e] : arith::factorize(static_cast<std::uint64_t>(f)).factors) {
    std::uint64_t t = frob_pow(f / static_cast<int>(r));
    if (gcd(t ^ 2, p) != 1) return false;
  }
  return true;
}

}  // namespace poly2

class Field {
 public:
  static constexpr int min_exponent = 4;
  static constexpr int max_exponent = 20;
  static constexpr std::uint32_t table_limit = 1u << 16;

  /// Builds GF(2^f). With poly = 0 the numerically smallest irreducible
  /// polynomial of degree f is used. Throws on out-of-range f or a reducible
  /// or wrong-degree modulus.
  explicit Field(int f, std::uint32_t poly = 0) : f_(f) {
    if (f < min_exponent || f > max_exponent)
      throw std::invalid_argument("Field: exponent must be in [4, 20]");
    q_ = std::uint32_t{1} << f;
    if (poly == 0) {
      for (std::uint32_t t = q_ + 1;; t += 2) {
        if (poly2::irreducible(t)) {
          poly = t;
          break;
        }
      }
    } else {
      if (poly2::degree(poly) != f)
        throw std::invalid_argument("Field: modulus degree differs from f");
      if (!poly2::irreducible(poly))
        throw std::invalid_argument("Field: modulus is reducible");
    }
    poly_ = poly;
    q1_factors_.clear();
    for (auto [p, e] : arith::factorize(q_ - 1).factors) q1_factors_.push_back(p);
    if (q_ <= table_limit) build_tables();
    gen_ = find_generator();
  }

  int f() const { return f_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return poly_; }
  bool has_tables() const { return !log_.empty(); }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// The primitive element the log tables are keyed to.
  Fe generator() const { return gen_; }

  Fe elem(std::uint32_t bits) const {
    if (bits >= q_) throw std::invalid_argument("Field::elem: value out of range");
    return Fe{bits};
  }

  Fe add(Fe x, Fe y) const { return Fe{x.bits ^ y.bits}; }

  Fe mul(Fe x, Fe y) const {
    if (!log_.empty()) {
      if (x.bits == 0 || y.bits == 0) return Fe{0};
      return Fe{antilog_[log_[x.bits] + log_[y.bits]]};
    }
    return Fe{mul_shift_reduce(x.bits, y.bits)};
  }

  /// Multiplication by shift-and-reduce regardless of tables (cross-check path).
  Fe mul_noluts(Fe x, Fe y) const { return Fe{mul_shift_reduce(x.bits, y.bits)}; }

  Fe inv(Fe x) const {
    if (x.bits == 0) throw std::domain_error("Field::inv: zero has no inverse");
    if (!log_.empty()) return Fe{antilog_[(q_ - 1 - log_[x.bits]) % (q_ - 1)]};
    return pow(x, static_cast<std::int64_t>(q_) - 2);
  }

  /// Square-and-multiply; exponents are reduced mod q-1 for nonzero bases,
  /// so negative exponents are fine away from zero.
  Fe pow(Fe x, std::int64_t e) const {
    if (x.bits == 0) {
      if (e > 0) return Fe{0};
      if (e == 0) return Fe{1};
      throw std::domain_error("Field::pow: zero to a negative power");
    }
    std::int64_t m = static_cast<std::int64_t>(q_) - 1;
    std::int64_t r = e % m;
    if (r < 0) r += m;
    Fe acc{1};
    Fe base = x;
    while (r) {
      if (r & 1) acc = mul(acc, base);
      base = mul(base, base);
      r >>= 1;
    }
    return acc;
  }

  /// x^{2^{f0}}, computed by f0 squarings.
  Fe frob_q0(Fe x, int f0) const {
    Fe r = x;
    for (int i = 0; i < f0; ++i) r = mul(r, r);
    return r;
  }

  /// The m-th root y = x^{1/m}, defined when gcd(m, q-1) = 1; root of 0 is 0.
  Fe root_exp(Fe x, std::uint64_t m) const {
    std::uint64_t n = q_ - 1;
    if (std::gcd(m, n) != 1)
      throw std::domain_error("Field::root_exp: exponent not invertible mod q-1");
    if (x.bits == 0) return Fe{0};
    std::uint64_t e = inverse_mod(m % n, n);
    return pow(x, static_cast<std::int64_t>(e));
  }

  /// True iff x generates the multiplicative group.
  bool is_primitive(Fe x) const {
    if (x.bits == 0) throw std::domain_error("Field::is_primitive: zero");
    for (std::uint64_t p : q1_factors_)
      if (pow(x, static_cast<std::int64_t>((q_ - 1) / p)) == one()) return false;
    return true;
  }

  /// The unique i in [0, q-2] with eta^i = x, for primitive eta and x != 0.
  std::uint32_t dlog(Fe eta, Fe x) const {
    if (x.bits == 0) throw std::domain_error("Field::dlog: log of zero");
    if (!is_primitive(eta)) throw std::domain_error("Field::dlog: base not primitive");
    std::uint64_t n = q_ - 1;
    if (!log_.empty()) {
      std::uint64_t le = log_[eta.bits] % n;
      std::uint64_t lx = log_[x.bits] % n;
      // eta = g^le with gcd(le, n) = 1; solve le * i = lx (mod n).
      return static_cast<std::uint32_t>((static_cast<unsigned __int128>(lx) * inverse_mod(le, n)) % n);
    }
    return dlog_bsgs(eta, x);
  }

  static std::string hex(Fe x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x.bits);
    return buf;
  }

  static std::string hex_u32(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
  }

  Fe parse_hex(const std::string& s) const {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos, 16);
    if (pos != s.size() || v >= q_) throw std::invalid_argument("Field::parse_hex: bad element '" + s + "'");
    return Fe{static_cast<std::uint32_t>(v)};
  }

 private:
  std::uint32_t mul_shift_reduce(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t r = 0;
    std::uint64_t aa = a;
    while (b) {
      if (b & 1) r ^= aa;
      aa <<= 1;
      b >>= 1;
    }
    for (int d = 2 * f_ - 2; d >= f_; --d)
      if (r >> d & 1) r ^= static_cast<std::uint64_t>(poly_) << (d - f_);
    return static_cast<std::uint32_t>(r);
  }

  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(n), nr = static_cast<std::int64_t>(a % n);
    while (nr != 0) {
      std::int64_t qq = r / nr;
      std::int64_t tmp = t - qq * nt;
      t = nt;
      nt = tmp;
      tmp = r - qq * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::domain_error("inverse_mod: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
  }

  bool is_primitive_raw(std::uint32_t x) const {
    for (std::uint64_t p : q1_factors_) {
      // power by shift-reduce only: tables may not exist yet
      std::uint64_t e = (q_ - 1) / p;
      std::uint32_t acc = 1, base = x;
      while (e) {
        if (e & 1) acc = mul_shift_reduce(acc, base);
        base = mul_shift_reduce(base, base);
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  }

  std::uint32_t find_generator_raw() const {
    for (std::uint32_t c = 2; c < q_; ++c)
      if (is_primitive_raw(c)) return c;
    throw std::logic_error("Field: no primitive element found");
  }

  void build_tables() {
    std::uint32_t g = find_generator_raw();
    log_.assign(q_, 0);
    antilog_.assign(2 * (q_ - 1), 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      antilog_[i] = v;
      antilog_[i + q_ - 1] = v;  // doubled so mul skips the mod
      log_[v] = i;
      v = mul_shift_reduce(v, g);
    }
    gen_ = Fe{g};
  }

  Fe find_generator() const {
    if (!log_.empty()) return gen_;
    return Fe{find_generator_raw()};
  }

  std::uint32_t dlog_bsgs(Fe eta, Fe x) const {
    std::uint64_t n = q_ - 1;
    std::uint32_t m = 1;
    while (static_cast<std::uint64_t>(m) * m < n) ++m;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> baby(m);  // (value, j)
    Fe t = one();
    for (std::uint32_t j = 0; j < m; ++j) {
      baby[j] = {t.bits, j};
      t = mul(t, eta);
    }
    std::sort(baby.begin(), baby.end());
    Fe giant = pow(eta, -static_cast<std::int64_t>(m));
    Fe cur = x;
    for (std::uint32_t i = 0; i <= m; ++i) {
      auto it = std::lower_bound(baby.begin(), baby.end(),
                                 std::make_pair(cur.bits, std::uint32_t{0}));
      if (it != baby.end() && it->first == cur.bits)
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * m + it->second) % n);
      cur = mul(cur, giant);
    }
    throw std::logic_error("Field::dlog: not found (base not primitive?)");
  }

  int f_;
  std::uint32_t q_ = 0;
  std::uint32_t poly_ = 0;
  Fe gen_{0};
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint64_t> q1_factors_;
};

}  // namespace gfr
