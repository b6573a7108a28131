#pragma once

// The groups K, H and G = HK over GF(2^f).
//
// K is the order-q^2 group of unipotent lower-triangular matrices Phi_{a,c},
// stored as coordinate pairs (a, c); the 3x3 matrix form exists only in test
// oracles. H is the cyclic group of diagonal matrices Psi_lambda acting on K
// by conjugation. Conjugation is right conjugation, g^h = h^-1 g h, so that
// Psi_lambda sends Phi_{a,c} to Phi_{a/lambda, c/lambda^{q0+1}}.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfr/field.hpp"

namespace gfr {

/// Phi_{a,c}; the identity is Phi_{0,0}.
struct Phi {
  Fe a, c;
  friend constexpr bool operator==(Phi, Phi) = default;
  friend constexpr auto operator<=>(Phi, Phi) = default;
};

/// Psi_lambda, lambda != 0.
struct Psi {
  Fe lambda;
};

/// Label of an H-orbit on K \ {identity}: a finite u in F_q, or infinity.
struct OrbitLabel {
  bool infinite = false;
  Fe u{0};
  static OrbitLabel inf() { return {true, Fe{0}}; }
  static OrbitLabel finite(Fe u) { return {false, u}; }
};

struct GhkReport {
  bool commutators_form_center = false;   // commutator set = {1} u Omega_inf = Z(K)
  bool kprime_elem_abelian_order_q = false;
  bool quotient_elem_abelian_order_q = false;
  bool omega_generates_k = false;         // <Omega_u> = K for each sampled u
  bool h_transitive = false;              // on K'\{1} and on nontrivial K'-cosets
  bool h_irreducible = false;             // no proper nontrivial H-invariant subgroup
  std::vector<std::uint32_t> sampled_u;
  bool all_ok() const {
    return commutators_form_center && kprime_elem_abelian_order_q &&
           quotient_elem_abelian_order_q && omega_generates_k && h_transitive && h_irreducible;
  }
};

class Higman {
 public:
  /// Requires 1 <= f0 and q0 = 2^f0 < q. gcd_ok() records whether
  /// gcd(q-1, q0^2-1) = 1, the precondition of most structural results.
  Higman(Field field, int f0) : field_(std::move(field)), f0_(f0) {
    if (f0 < 1 || f0 >= field_.f())
      throw std::invalid_argument("Higman: need 1 <= f0 < f so that q0 < q");
    q0_ = std::uint32_t{1} << f0;
    std::uint64_t q1 = field_.q() - 1;
    std::uint64_t q0sq1 = static_cast<std::uint64_t>(q0_) * q0_ - 1;
    gcd_ok_ = std::gcd(q1, q0sq1) == 1;
  }

  const Field& field() const { return field_; }
  int f0() const { return f0_; }
  std::uint32_t q0() const { return q0_; }
  std::uint32_t q() const { return field_.q(); }
  bool gcd_ok() const { return gcd_ok_; }

  void require_gcd() const {
    if (!gcd_ok_)
      throw std::domain_error("Higman: gcd(q-1, q0^2-1) = " +
                              std::to_string(std::gcd<std::uint64_t>(field_.q() - 1,
                                                                     std::uint64_t(q0_) * q0_ - 1)) +
                              " != 1");
  }

  Phi identity() const { return Phi{Fe{0}, Fe{0}}; }

  Fe pow_q0(Fe x) const { return field_.frob_q0(x, f0_); }
  Fe pow_q0p1(Fe x) const { return field_.mul(pow_q0(x), x); }  // x^{q0+1}

  /// Phi_{a,c} * Phi_{b,d} = Phi_{a+b, c+d+a^{q0} b}.
  Phi phi_mul(Phi p, Phi r) const {
    const Field& F = field_;
    return Phi{F.add(p.a, r.a), F.add(F.add(p.c, r.c), F.mul(pow_q0(p.a), r.a))};
  }

  /// Phi_{a,c}^-1 = Phi_{a, c+a^{q0+1}}.
  Phi phi_inv(Phi p) const { return Phi{p.a, field_.add(p.c, pow_q0p1(p.a))}; }

  /// [p, r] = p^-1 r^-1 p r = Phi_{0, a^{q0} b + a b^{q0}}.
  Phi phi_commutator(Phi p, Phi r) const {
    const Field& F = field_;
    Fe v = F.add(F.mul(pow_q0(p.a), r.a), F.mul(p.a, pow_q0(r.a)));
    return Phi{Fe{0}, v};
  }

  /// Psi^-1 Phi Psi = Phi_{a/lambda, c/lambda^{q0+1}}.
  Phi conj_by_psi(Phi p, Psi psi) const {
    if (psi.lambda.bits == 0) throw std::domain_error("conj_by_psi: lambda must be nonzero");
    const Field& F = field_;
    Fe li = F.inv(psi.lambda);
    return Phi{F.mul(p.a, li), F.mul(p.c, pow_q0p1(li))};
  }

  /// The H-orbit Omega_u = {Phi_{a, u a^{q0+1}} : a != 0}, or Omega_inf =
  /// {Phi_{0,c} : c != 0}; elements sorted by (a, c) encoding.
  std::vector<Phi> omega(OrbitLabel label) const {
    std::vector<Phi> out;
    out.reserve(field_.q() - 1);
    if (label.infinite) {
      for (std::uint32_t c = 1; c < field_.q(); ++c) out.push_back(Phi{Fe{0}, Fe{c}});
    } else {
      for (std::uint32_t a = 1; a < field_.q(); ++a) {
        Fe fa{a};
        out.push_back(Phi{fa, field_.mul(label.u, pow_q0p1(fa))});
      }
    }
    return out;
  }

  /// Exhaustive structural checks on K, K', K/K' and the H-action.
  /// Requires gcd(q-1, q0^2-1) = 1. All u are sampled when q <= 64, a fixed
  /// deterministic sample otherwise.
  GhkReport ghk_property_suite() const {
    require_gcd();
    const Field& F = field_;
    const std::uint32_t q = F.q();
    GhkReport rep;

    // (i) commutator values cover F_q exactly, and Z(K) = {Phi_{0,c}}.
    {
      std::vector<bool> seen(q, false);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) seen[phi_commutator(Phi{Fe{a}, Fe{0}}, Phi{Fe{b}, Fe{0}}).c.bits] = true;
      bool cover = true;
      for (std::uint32_t v = 0; v < q; ++v) cover = cover && seen[v];
      // center: Phi_{a,c} commutes with everything iff a^{q0} b + a b^{q0} = 0 for all b
      bool center_ok = true;
      for (std::uint32_t a = 1; a < q && center_ok; ++a) {
        bool central = true;
        for (std::uint32_t b = 1; b < q; ++b)
          if (phi_commutator(Phi{Fe{a}, Fe{0}}, Phi{Fe{b}, Fe{0}}).c.bits != 0) {
            central = false;
            break;
          }
        if (central) center_ok = false;  // a nonzero a must not be central
      }
      rep.commutators_form_center = cover && center_ok;
    }

    // (ii) K' and K/K' are elementary abelian of order q.
    {
      bool ok = true;
      std::uint32_t count = 0;
      for (std::uint32_t c = 0; c < q; ++c) {
        Phi p{Fe{0}, Fe{c}};
        ++count;
        ok = ok && phi_mul(p, p) == identity();
      }
      rep.kprime_elem_abelian_order_q = ok && count == q;
      // cosets are labelled by a; squares of all of K land in K'
      bool sq = true;
      for (std::uint32_t a = 0; a < q && sq; ++a)
        for (std::uint32_t c = 0; c < q; ++c) {
          Phi s = phi_mul(Phi{Fe{a}, Fe{c}}, Phi{Fe{a}, Fe{c}});
          if (s.a.bits != 0) {
            sq = false;
            break;
          }
        }
      rep.quotient_elem_abelian_order_q = sq;
    }

    // (iii) <Omega_u> = K for sampled u.
    {
      if (q <= 64)
        for (std::uint32_t u = 0; u < q; ++u) rep.sampled_u.push_back(u);
      else
        for (std::uint32_t u = 0; u < 16; ++u) rep.sampled_u.push_back(u * (q / 16) + 1);
      bool ok = true;
      for (std::uint32_t u : rep.sampled_u) ok = ok && omega_generates(Fe{u});
      rep.omega_generates_k = ok;
    }

    // (iv) H transitive on K'\{1} and on the nontrivial K'-cosets.
    {
      std::vector<bool> corb(q, false), aorb(q, false);
      std::uint32_t cn = 0, an = 0;
      for (std::uint32_t l = 1; l < q; ++l) {
        Psi psi{Fe{l}};
        Phi pc = conj_by_psi(Phi{Fe{0}, Fe{1}}, psi);
        Phi pa = conj_by_psi(Phi{Fe{1}, Fe{0}}, psi);
        if (!corb[pc.c.bits]) {
          corb[pc.c.bits] = true;
          ++cn;
        }
        if (!aorb[pa.a.bits]) {
          aorb[pa.a.bits] = true;
          ++an;
        }
      }
      rep.h_transitive = cn == q - 1 && an == q - 1;
    }

    // (v surrogate) the H-orbit of every nontrivial element of K' (resp.
    // K/K') spans the whole group additively.
    {
      bool ok = true;
      for (std::uint32_t x = 1; x < q && ok; ++x) {
        ok = orbit_spans(Fe{x}, true) && orbit_spans(Fe{x}, false);
      }
      rep.h_irreducible = ok;
    }

    return rep;
  }

  /// Serialization: "a-hex:c-hex".
  static std::string phi_str(Phi p) { return Field::hex(p.a) + ":" + Field::hex(p.c); }

 private:
  bool omega_generates(Fe u) const {
    const std::uint32_t q = field_.q();
    auto id = [&](Phi p) { return p.a.bits * q + p.c.bits; };
    std::vector<Phi> gens = omega(OrbitLabel::finite(u));
    std::vector<bool> in(static_cast<std::size_t>(q) * q, false);
    std::vector<Phi> work;
    in[id(identity())] = true;
    work.push_back(identity());
    std::size_t count = 1;
    while (!work.empty()) {
      Phi x = work.back();
      work.pop_back();
      for (const Phi& g : gens) {
        Phi y = phi_mul(x, g);
        std::uint32_t i = id(y);
        if (!in[i]) {
          in[i] = true;
          ++count;
          work.push_back(y);
        }
      }
    }
    return count == static_cast<std::size_t>(q) * q;
  }

  // F_2-span of the H-orbit of x under the K' action (c / lambda^{q0+1}) or
  // the coset action (a / lambda).
  bool orbit_spans(Fe x, bool kprime_action) const {
    const Field& F = field_;
    std::vector<std::uint32_t> basis(F.f(), 0);  // basis[i] has leading bit i
    int rank = 0;
    auto insert = [&](std::uint32_t v) {
      for (int i = F.f() - 1; i >= 0 && v; --i) {
        if (!(v >> i & 1)) continue;
        if (!basis[i]) {
          basis[i] = v;
          ++rank;
          return;
        }
        v ^= basis[i];
      }
    };
    for (std::uint32_t l = 1; l < F.q(); ++l) {
      Fe li = F.inv(Fe{l});
      Fe y = kprime_action ? F.mul(x, pow_q0p1(li)) : F.mul(x, li);
      insert(y.bits);
    }
    return rank == F.f();
  }

  Field field_;
  int f0_;
  std::uint32_t q0_ = 0;
  bool gcd_ok_ = false;
};

}  // namespace gfr
