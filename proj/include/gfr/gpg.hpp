#pragma once

// Generalized Petersen graphs GPG(n, k) and their role as the neighborhood
// of the identity in Gamma_u.
//
// Vertices c_1..c_n (outer) map to ids 0..n-1 and c'_1..c'_n (inner) to ids
// n..2n-1, with c_i -> i-1. Edges are the outer cycle c_i c_{i+1}, the spokes
// c_i c'_i, and the inner skip c'_i c'_{i+k}, subscripts mod n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gfr/aut.hpp"
#include "gfr/cayley.hpp"
#include "gfr/graph.hpp"
#include "gfr/perm.hpp"

namespace gfr {

struct GpgSpec {
  int n = 0;
  int k = 0;
  GpgSpec(int n_, int k_) : n(n_), k(k_) {
    if (n < 3) throw std::invalid_argument("GpgSpec: need n >= 3");
    if (k <= 0 || k >= n) throw std::invalid_argument("GpgSpec: need 1 <= k < n");
    if (2 * k == n) throw std::invalid_argument("GpgSpec: k = n/2 degenerates the inner rim");
  }
};

namespace gpg_detail {
// subscript (1-based, mod n) -> vertex id
inline int outer_id(int i, int n) { return ((i - 1) % n + n) % n; }
inline int inner_id(int i, int n) { return n + outer_id(i, n); }
}  // namespace gpg_detail

/// Builds the cubic graph GPG(n, k) on 2n vertices. Skips above n/2 produce
/// the same undirected graph as n-k.
inline Graph gpg_build(int n, int k) {
  GpgSpec spec(n, k);
  using gpg_detail::inner_id;
  using gpg_detail::outer_id;
  Graph g(2 * n);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(outer_id(i, n), outer_id(i + 1, n));
    g.add_edge(outer_id(i, n), inner_id(i, n));
    g.add_edge(inner_id(i, n), inner_id(i + k, n));
  }
  return g;
}

/// rho: c_i -> c_{i+1}, both rims.
inline Perm gpg_rho(int n) {
  Perm p;
  p.img.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    p.img[gpg_detail::outer_id(i, n)] = gpg_detail::outer_id(i + 1, n);
    p.img[gpg_detail::inner_id(i, n)] = gpg_detail::inner_id(i + 1, n);
  }
  return p;
}

/// delta: c_i -> c_{-i}, both rims.
inline Perm gpg_delta(int n) {
  Perm p;
  p.img.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    p.img[gpg_detail::outer_id(i, n)] = gpg_detail::outer_id(-i, n);
    p.img[gpg_detail::inner_id(i, n)] = gpg_detail::inner_id(-i, n);
  }
  return p;
}

struct AlphaCandidate {
  Perm perm;
  bool is_automorphism = false;
};

/// alpha: c_i -> c'_{ki}, c'_i -> c_{ki}. A permutation only when
/// gcd(k, n) = 1; an automorphism only for special k, so the flag is tested
/// rather than assumed.
inline AlphaCandidate gpg_alpha(int n, int k) {
  if (std::gcd(n, k) != 1)
    throw std::invalid_argument("gpg_alpha: k must be invertible mod n to define a bijection");
  AlphaCandidate out;
  out.perm.img.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    out.perm.img[gpg_detail::outer_id(i, n)] = gpg_detail::inner_id(k * i, n);
    out.perm.img[gpg_detail::inner_id(i, n)] = gpg_detail::outer_id(k * i, n);
  }
  out.is_automorphism = is_graph_automorphism(gpg_build(n, k), out.perm);
  return out;
}

struct GpgParamReport {
  unsigned long long aut_order = 0;
  bool odd_part_is_cyclic_normal_order_n = false;
  bool checked_involutions = false;  // (ii) applies only for k != +-1 mod n
  bool no_involution_commutes = false;
  bool ok = false;
};

/// Brute-force verification on Aut(GPG(n, k)) for odd n != 5: the odd-order
/// elements form one cyclic normal subgroup of order n, and for k != +-1 no
/// involution commutes with it. Degree 2n is capped at 64.
inline GpgParamReport gpgparam_check(int n, int k) {
  GpgSpec spec(n, k);
  if (n % 2 == 0 || n == 5) throw std::invalid_argument("gpgparam_check: need odd n, n != 5");
  if (2 * n > 64) throw std::length_error("gpgparam_check: 2n capped at 64");

  Graph g = gpg_build(n, k);
  PermGroup aut = aut_group(g);
  GpgParamReport rep;
  rep.aut_order = aut.order();

  std::vector<Perm> elements;
  aut.chain.for_each_element([&](const Perm& p) { elements.push_back(p); });

  std::vector<Perm> odd;
  for (const Perm& p : elements)
    if (p.order() % 2 == 1) odd.push_back(p);

  bool subgroup_ok = odd.size() == static_cast<std::size_t>(n);
  // closure and normality
  for (const Perm& a : odd) {
    for (const Perm& b : odd) {
      Perm ab = a.then(b);
      bool in = false;
      for (const Perm& c : odd) in = in || c == ab;
      subgroup_ok = subgroup_ok && in;
    }
  }
  for (const Perm& gel : elements) {
    Perm gi = gel.inverse();
    for (const Perm& a : odd) {
      Perm conj = gi.then(a).then(gel);
      bool in = false;
      for (const Perm& c : odd) in = in || c == conj;
      subgroup_ok = subgroup_ok && in;
    }
  }
  bool cyclic = false;
  for (const Perm& a : odd) cyclic = cyclic || a.order() == n;
  rep.odd_part_is_cyclic_normal_order_n = subgroup_ok && cyclic;

  int km = ((k % n) + n) % n;
  rep.checked_involutions = km != 1 && km != n - 1;
  if (rep.checked_involutions) {
    Perm gen;
    for (const Perm& a : odd)
      if (a.order() == n) gen = a;
    bool found = false;
    for (const Perm& p : elements)
      if (p.order() == 2 && p.then(gen) == gen.then(p)) found = true;
    rep.no_involution_commutes = !found;
  } else {
    rep.no_involution_commutes = true;  // hypothesis excludes k = +-1
  }
  rep.ok = rep.odd_part_is_cyclic_normal_order_n && rep.no_involution_commutes;
  return rep;
}

struct NeighborhoodIso {
  long k = -1;
  std::vector<std::uint32_t> gpg_to_vertex;  // GPG id -> Gamma_u vertex id
  bool verified = false;
};

/// The explicit isomorphism from GPG(q-1, k) onto the neighborhood of the
/// identity in Gamma_u: c_i -> Phi_{eta^i, u eta^{i(q0+1)}} and
/// c'_i -> Phi_{w, (u+1) w^{q0+1}} with w = eta^i/(1+eta), where k is cut
/// from 1 + eta = eta^{k+1}. Throws if the map fails to be an isomorphism.
inline NeighborhoodIso neighborhood_iso(const Higman& H, ParamTriple& triple) {
  H.require_gcd();
  const Field& F = H.field();
  const std::uint32_t q = F.q();
  const int n = static_cast<int>(q) - 1;
  Fe u = triple.u;
  Fe eta = triple.eta;
  if (!F.is_primitive(eta)) throw std::domain_error("neighborhood_iso: eta not primitive");

  NeighborhoodIso out;
  out.k = (static_cast<long>(F.dlog(eta, F.add(F.one(), eta))) - 1 + n) % n;
  triple.k = out.k;

  Fe u1 = F.add(u, F.one());
  Fe inv_1eta = F.inv(F.add(F.one(), eta));
  auto vid = [&](Phi p) { return p.a.bits * q + p.c.bits; };

  out.gpg_to_vertex.assign(2 * n, 0);
  Fe pw = eta;  // eta^i for i = 1..n
  for (int i = 1; i <= n; ++i) {
    Fe wa = F.mul(pw, inv_1eta);
    Phi ci{pw, F.mul(u, H.pow_q0p1(pw))};
    Phi cpi{wa, F.mul(u1, H.pow_q0p1(wa))};
    out.gpg_to_vertex[gpg_detail::outer_id(i, n)] = vid(ci);
    out.gpg_to_vertex[gpg_detail::inner_id(i, n)] = vid(cpi);
    pw = F.mul(pw, eta);
  }

  // bijectivity onto Omega_u u Omega_{u+1}
  {
    std::vector<std::uint32_t> sorted = out.gpg_to_vertex;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::domain_error("neighborhood_iso: image not injective");
    std::vector<std::uint32_t> expect;
    for (Phi p : H.omega(OrbitLabel::finite(u))) expect.push_back(vid(p));
    for (Phi p : H.omega(OrbitLabel::finite(u1))) expect.push_back(vid(p));
    std::sort(expect.begin(), expect.end());
    if (sorted != expect) throw std::domain_error("neighborhood_iso: image misses the neighborhood");
  }

  // edge-for-edge agreement with the adjacency of Gamma_u
  Graph gpg = gpg_build(n, static_cast<int>(out.k));
  auto gamma_adj = [&](std::uint32_t x, std::uint32_t y) {
    Phi px{Fe{x / q}, Fe{x % q}}, py{Fe{y / q}, Fe{y % q}};
    return u_edge(H, px, py, u) || u_edge(H, px, py, u1);
  };
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b)
      if (gpg.adj(a, b) != gamma_adj(out.gpg_to_vertex[a], out.gpg_to_vertex[b]))
        throw std::domain_error("neighborhood_iso: edge sets disagree");
  out.verified = true;
  return out;
}

}  // namespace gfr
