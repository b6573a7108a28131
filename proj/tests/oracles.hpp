#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <cstdint>
#include <numeric>
#include <vector>

#include "gfr/graph.hpp"
#include "gfr/perm.hpp"

namespace oracles {

// ---- GF(2)[x] by long division -------------------------------------------

inline int poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

/// Carry-less product, no reduction.
inline std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i <= poly_degree(b); ++i)
    if (b >> i & 1) r ^= a << i;
  return r;
}

/// Remainder of long division a mod p.
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  int dp = poly_degree(p);
  while (poly_degree(a) >= dp) a ^= p << (poly_degree(a) - dp);
  return a;
}

/// Smallest nontrivial factor found by trial division over all polynomials of
/// degree 1..deg/2, or 0 if none (i.e. the polynomial is irreducible).
inline std::uint64_t poly_smallest_factor(std::uint64_t p) {
  int half = poly_degree(p) / 2;
  for (std::uint64_t d = 2; poly_degree(d) <= half; ++d)
    if (poly_mod(p, d) == 0) return d;
  return 0;
}

inline bool poly_irreducible(std::uint64_t p) {
  return poly_degree(p) >= 1 && poly_smallest_factor(p) == 0;
}

/// Field product by long division: (a*b) mod p.
inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
  return static_cast<std::uint32_t>(poly_mod(poly_mul(a, b), p));
}

// ---- integers -------------------------------------------------------------

inline std::uint64_t brute_totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

// ---- brute-force graph automorphisms ---------------------------------------
// Factorial backtracking with adjacency-consistency pruning; fine to ~12
// vertices. Deliberately independent of the refinement-based search.

inline void brute_aut_rec(const gfr::Graph& g, std::vector<int>& img, std::vector<bool>& used,
                          int v, std::vector<gfr::Perm>& out) {
  int n = g.n();
  if (v == n) {
    out.push_back(gfr::Perm(img));
    return;
  }
  for (int c = 0; c < n; ++c) {
    if (used[c] || g.degree(c) != g.degree(v)) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; ++w) ok = g.adj(v, w) == g.adj(c, img[w]);
    if (!ok) continue;
    img[v] = c;
    used[c] = true;
    brute_aut_rec(g, img, used, v + 1, out);
    used[c] = false;
  }
}

inline std::vector<gfr::Perm> brute_automorphisms(const gfr::Graph& g) {
  std::vector<int> img(g.n(), 0);
  std::vector<bool> used(g.n(), false);
  std::vector<gfr::Perm> out;
  brute_aut_rec(g, img, used, 0, out);
  return out;
}

}  // namespace oracles
