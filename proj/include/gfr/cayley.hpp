#pragma once

// The Cayley graph Gamma_u = Cay(K, Omega_u u Omega_{u+1}).
//
// Vertices are the elements of K indexed by id = int(a) * q + int(c), so the
// identity is vertex 0 and the K'-coset of the identity occupies ids 0..q-1.
// x ~ y iff x y^-1 lies in the connection set; right translations and
// conjugation by Psi therefore act as automorphisms.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gfr/graph.hpp"
#include "gfr/higman.hpp"
#include "gfr/params.hpp"

namespace gfr {

struct CayleyGraph {
  const Higman* ctx = nullptr;
  Fe u{0};
  Graph graph;

  std::uint32_t vertex_id(Phi p) const { return p.a.bits * ctx->q() + p.c.bits; }
  Phi vertex(std::uint32_t id) const {
    return Phi{Fe{id >> ctx->field().f()}, Fe{id & (ctx->q() - 1)}};
  }
};

/// The directed u-edge relation: Phi_{a,c} ->u Phi_{b,d} iff the difference
/// lies in Omega_u, via the closed form c + d = (a+b)^{q0} (u a + (u+1) b).
/// Asking about a loop is an error.
inline bool u_edge(const Higman& H, Phi p, Phi r, Fe u) {
  if (p == r) throw std::invalid_argument("u_edge: loop query");
  const Field& F = H.field();
  Fe lhs = F.add(p.c, r.c);
  Fe s = F.add(p.a, r.a);
  Fe rhs = F.mul(H.pow_q0(s), F.add(F.mul(u, p.a), F.mul(F.add(u, F.one()), r.a)));
  return lhs == rhs;
}

/// Membership form of the same relation: p r^-1 in Omega_u.
inline bool u_edge_definitional(const Higman& H, Phi p, Phi r, Fe u) {
  if (p == r) throw std::invalid_argument("u_edge: loop query");
  Phi d = H.phi_mul(p, H.phi_inv(r));
  return d.a.bits != 0 && d.c == H.field().mul(u, H.pow_q0p1(d.a));
}

/// Expanded form c + d = u (a+b)^{q0+1} + a^{q0} b + b^{q0+1}.
inline bool u_edge_expanded(const Higman& H, Phi p, Phi r, Fe u) {
  if (p == r) throw std::invalid_argument("u_edge: loop query");
  const Field& F = H.field();
  Fe s = F.add(p.a, r.a);
  Fe rhs = F.mul(u, H.pow_q0p1(s));
  rhs = F.add(rhs, F.mul(H.pow_q0(p.a), r.a));
  rhs = F.add(rhs, H.pow_q0p1(r.a));
  return F.add(p.c, r.c) == rhs;
}

/// Builds Gamma_u. Requires gcd(q-1, q0^2-1) = 1 and q^2 <= 2^20 vertices.
inline CayleyGraph build_cayley(const Higman& H, Fe u) {
  H.require_gcd();
  const std::uint32_t q = H.q();
  if (static_cast<std::uint64_t>(q) * q > Graph::max_vertices)
    throw std::length_error("build_cayley: q^2 exceeds the vertex cap");
  CayleyGraph cg;
  cg.ctx = &H;
  cg.u = u;
  cg.graph = Graph(static_cast<int>(q * q));

  std::vector<Phi> conn = H.omega(OrbitLabel::finite(u));
  for (Phi s : H.omega(OrbitLabel::finite(H.field().add(u, H.field().one())))) conn.push_back(s);
  for (const Phi& s : conn) {
    for (std::uint32_t id = 0; id < q * q; ++id) {
      Phi x = cg.vertex(id);
      // neighbors of x are s^-1 x = (s x^-1)^-1; equivalently y with x y^-1 = s,
      // i.e. y = s^-1 x; the connection set is inverse-closed so s x works too
      Phi y = H.phi_mul(H.phi_inv(s), x);
      cg.graph.add_edge(static_cast<int>(id), static_cast<int>(cg.vertex_id(y)));
    }
  }
  return cg;
}

/// The vertex permutation of the right translation x -> x t.
inline std::vector<int> translation_perm(const CayleyGraph& cg, Phi t) {
  const std::uint32_t n = cg.ctx->q() * cg.ctx->q();
  std::vector<int> img(n);
  for (std::uint32_t id = 0; id < n; ++id)
    img[id] = static_cast<int>(cg.vertex_id(cg.ctx->phi_mul(cg.vertex(id), t)));
  return img;
}

/// The vertex permutation of conjugation x -> psi^-1 x psi.
inline std::vector<int> conjugation_perm(const CayleyGraph& cg, Psi psi) {
  const std::uint32_t n = cg.ctx->q() * cg.ctx->q();
  std::vector<int> img(n);
  for (std::uint32_t id = 0; id < n; ++id)
    img[id] = static_cast<int>(cg.vertex_id(cg.ctx->conj_by_psi(cg.vertex(id), psi)));
  return img;
}

struct IncidenceReport {
  long long checked = 0;
  long long violations = 0;
  long long per_equivalence[6] = {0, 0, 0, 0, 0, 0};
};

/// Exhaustive check of the six u-edge equivalences over all pairs of nonzero
/// (a, b). Requires u outside {0, 1} and the gcd precondition.
inline IncidenceReport incidence_suite(const Higman& H, Fe u) {
  H.require_gcd();
  if (u.bits == 0 || u.bits == 1)
    throw std::domain_error("incidence_suite: u must be outside {0, 1}");
  const Field& F = H.field();
  const std::uint32_t q = F.q();
  Fe u1 = F.add(u, F.one());
  Fe eta = eta_from_u(H, u);
  Fe etainv = F.inv(eta);
  Fe one_eta = F.add(F.one(), eta);

  IncidenceReport rep;
  auto tally = [&](int idx, bool edge, bool expect) {
    ++rep.checked;
    if (edge != expect) {
      ++rep.violations;
      ++rep.per_equivalence[idx];
    }
  };

  for (std::uint32_t ai = 1; ai < q; ++ai)
    for (std::uint32_t bi = 1; bi < q; ++bi) {
      Fe a{ai}, b{bi};
      Phi pu{a, F.mul(u, H.pow_q0p1(a))};
      Phi ru{b, F.mul(u, H.pow_q0p1(b))};
      Phi pv{a, F.mul(u1, H.pow_q0p1(a))};
      Phi rv{b, F.mul(u1, H.pow_q0p1(b))};

      // (1) pu ->u ru iff b = a/eta; (2) pu ->u+1 ru iff b = a*eta
      bool same = ai == bi;
      tally(0, same ? false : u_edge(H, pu, ru, u), b == F.mul(a, etainv));
      tally(1, same ? false : u_edge(H, pu, ru, u1), b == F.mul(a, eta));
      // (3)(4) within Omega_{u+1}
      tally(2, same ? false : u_edge(H, pv, rv, u), b == F.mul(a, F.mul(eta, F.inv(one_eta))));
      tally(3, same ? false : u_edge(H, pv, rv, u1), b == F.mul(a, F.mul(one_eta, etainv)));
      // (5)(6) across the two orbits; the vertices differ whenever a, b != 0
      tally(4, u_edge(H, pu, rv, u), b == F.mul(a, F.inv(one_eta)));
      tally(5, u_edge(H, pu, rv, u1), u2_poly_eval(H, u, F.mul(a, F.inv(b))).bits == 0);
    }
  return rep;
}

struct NeighborhoodView {
  std::vector<std::uint32_t> vertices;  // original ids, ascending
  Graph graph;                          // induced subgraph in that order
};

/// The induced subgraph on the neighbors of v, original ids retained.
inline NeighborhoodView neighborhood(const Graph& g, std::uint32_t v) {
  NeighborhoodView nv;
  g.for_neighbors(static_cast<int>(v), [&](int w) { nv.vertices.push_back(w); });
  nv.graph = Graph(static_cast<int>(nv.vertices.size()));
  for (std::size_t i = 0; i < nv.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < nv.vertices.size(); ++j)
      if (g.adj(static_cast<int>(nv.vertices[i]), static_cast<int>(nv.vertices[j])))
        nv.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return nv;
}

}  // namespace gfr
