#pragma once

// Conditions (U1) and (U2) on u, the bijection between u and its primitive
// witness eta, and enumeration of the admissible set U_{q,q0}.
//
//   (U1)  u = (1 + eta^{q0}) / (eta + eta^{q0}) for a primitive eta,
//   (U2)  X^{q0+1} + u X^{q0} + (u+1) X + 1 has no roots in F_q.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gfr/higman.hpp"
#include "gfr/parallel.hpp"

namespace gfr {

/// An admissible u with its primitive witness; the skip parameter k is
/// filled in by the Petersen-graph witness, -1 until then.
struct ParamTriple {
  Fe u, eta;
  long k = -1;
};

/// u = (1 + eta^{q0}) / (eta + eta^{q0}); requires eta outside {0, 1}.
inline Fe u_from_eta(const Higman& H, Fe eta) {
  if (eta.bits == 0 || eta.bits == 1)
    throw std::domain_error("u_from_eta: eta must be outside {0, 1}");
  const Field& F = H.field();
  Fe eq = H.pow_q0(eta);
  Fe den = F.add(eta, eq);
  if (den.bits == 0) throw std::domain_error("u_from_eta: eta + eta^q0 vanishes");
  return F.mul(F.add(F.one(), eq), F.inv(den));
}

/// The inverse map u -> 1 + (u/(u+1))^{1/(q0-1)}; requires u outside {0, 1}
/// and gcd(q0-1, q-1) = 1 (implied by the standing gcd assumption).
inline Fe eta_from_u(const Higman& H, Fe u) {
  if (u.bits == 0 || u.bits == 1)
    throw std::domain_error("eta_from_u: u must be outside {0, 1}");
  const Field& F = H.field();
  Fe t = F.mul(u, F.inv(F.add(u, F.one())));
  return F.add(F.one(), F.root_exp(t, H.q0() - 1));
}

/// U(x) = (x^{q0+1} + x + 1) / (x^{q0} + x); poles at x in {0, 1}.
inline Fe rational_u(const Higman& H, Fe x) {
  if (x.bits == 0 || x.bits == 1) throw std::domain_error("rational_u: pole at x in {0, 1}");
  const Field& F = H.field();
  Fe xq = H.pow_q0(x);
  Fe num = F.add(F.add(F.mul(xq, x), x), F.one());
  Fe den = F.add(xq, x);
  if (den.bits == 0) throw std::domain_error("rational_u: x^q0 = x off the poles");
  return F.mul(num, F.inv(den));
}

/// Evaluates P_u(x) = x^{q0+1} + u x^{q0} + (u+1) x + 1.
inline Fe u2_poly_eval(const Higman& H, Fe u, Fe x) {
  const Field& F = H.field();
  Fe xq = H.pow_q0(x);
  Fe r = F.mul(xq, x);
  r = F.add(r, F.mul(u, xq));
  r = F.add(r, F.mul(F.add(u, F.one()), x));
  return F.add(r, F.one());
}

/// (U2) by brute evaluation over all of F_q. 0 and 1 are never roots, so the
/// scan may start anywhere; it covers everything regardless.
inline bool u2_holds(const Higman& H, Fe u) {
  for (std::uint32_t x = 0; x < H.q(); ++x)
    if (u2_poly_eval(H, u, Fe{x}).bits == 0) return false;
  return true;
}

/// True iff (U1) holds: the witness eta_from_u(u) is primitive.
inline bool u1_holds(const Higman& H, Fe u) {
  if (u.bits == 0 || u.bits == 1) return false;
  return H.field().is_primitive(eta_from_u(H, u));
}

struct USetCounts {
  std::uint32_t count_u1 = 0;
  std::uint32_t count_u2 = 0;
  std::uint32_t count_both = 0;
};

/// All u satisfying (U1) and (U2), sorted by integer encoding, with their
/// witnesses. Requires gcd(q-1, q0^2-1) = 1.
inline std::vector<ParamTriple> enumerate_u_set(const Higman& H, USetCounts* counts = nullptr) {
  H.require_gcd();
  const std::uint32_t q = H.q();
  std::vector<std::uint8_t> u1(q, 0), u2(q, 0);
  parallel_chunks(q, [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t v = lo; v < hi; ++v) {
      Fe u{v};
      if (u1_holds(H, u)) u1[v] = 1;
      if (u2_holds(H, u)) u2[v] = 1;
    }
  });
  std::vector<ParamTriple> out;
  USetCounts c;
  for (std::uint32_t v = 0; v < q; ++v) {
    c.count_u1 += u1[v];
    c.count_u2 += u2[v];
    if (u1[v] && u2[v]) {
      ++c.count_both;
      out.push_back(ParamTriple{Fe{v}, eta_from_u(H, Fe{v}), -1});
    }
  }
  if (counts) *counts = c;
  return out;
}

}  // namespace gfr
