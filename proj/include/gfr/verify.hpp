#pragma once

// End-to-end verification pipeline: for a triple (q, q0, u) it runs
//   gcd gate -> (U1)/(U2) -> build -> connectivity/degree -> incidence
//   suite -> Petersen witness -> automorphism group -> Frobenius analysis
//   -> block systems
// and reports every outcome in one machine-readable record. The report
// passes iff every boolean check holds, the automorphism order equals
// q^2 (q-1), and the incidence suite has zero violations.

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfr/aut.hpp"
#include "gfr/cayley.hpp"
#include "gfr/gpg.hpp"
#include "gfr/higman.hpp"
#include "gfr/parallel.hpp"
#include "gfr/params.hpp"

namespace gfr {

inline constexpr const char* version_string = "0.1.0";

/// A pipeline failure carrying the stage it happened in.
struct StageError : std::runtime_error {
  std::string stage;
  StageError(const std::string& stage_, const std::string& what_)
      : std::runtime_error(stage_ + ": " + what_), stage(stage_) {}
};

struct VerificationChecks {
  bool gcd_ok = false;
  bool u1 = false;
  bool u2 = false;
  bool connected = false;
  bool degree = false;
  bool gpg_iso = false;
  unsigned long long aut_order = 0;
  unsigned long long expected_order = 0;
  bool frobenius = false;
  unsigned long long stabilizer_order = 0;
  bool unique_block_is_kprime = false;
  long long incidence_violations = -1;
};

struct VerificationReport {
  int f = 0;
  std::uint32_t poly = 0;
  int f0 = 0;
  Fe u{0};
  Fe eta{0};
  long k = -1;
  VerificationChecks checks;
  std::vector<std::pair<std::string, double>> timing_ms;

  bool pass() const {
    const VerificationChecks& c = checks;
    return c.gcd_ok && c.u1 && c.u2 && c.connected && c.degree && c.gpg_iso &&
           c.aut_order == c.expected_order && c.frobenius &&
           c.unique_block_is_kprime && c.incidence_violations == 0;
  }
};

namespace detail {
class StageClock {
 public:
  explicit StageClock(VerificationReport& rep) : rep_(rep), last_(clock::now()) {}
  void lap(const std::string& stage) {
    auto now = clock::now();
    rep_.timing_ms.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  using clock = std::chrono::steady_clock;
  VerificationReport& rep_;
  clock::time_point last_;
};
}  // namespace detail

/// Verifies one u. Throws StageError on precondition violations (the gcd
/// gate, u in {0,1}, resource guards); check failures are reported, not
/// thrown.
inline VerificationReport verify_one(const Higman& H, Fe u) {
  VerificationReport rep;
  rep.f = H.field().f();
  rep.poly = H.field().modulus();
  rep.f0 = H.f0();
  rep.u = u;
  const Field& F = H.field();
  const std::uint32_t q = F.q();
  detail::StageClock clock(rep);

  rep.checks.gcd_ok = H.gcd_ok();
  if (!rep.checks.gcd_ok)
    throw StageError("gcd", "gcd(q-1, q0^2-1) != 1 for q=" + std::to_string(q) +
                                ", q0=" + std::to_string(H.q0()));
  clock.lap("gcd");

  if (u.bits == 0 || u.bits == 1) throw StageError("u1", "u violates the (U1) domain: u in {0,1}");
  rep.eta = eta_from_u(H, u);
  rep.checks.u1 = F.is_primitive(rep.eta);
  rep.checks.u2 = u2_holds(H, u);
  clock.lap("conditions");

  CayleyGraph cg = build_cayley(H, u);
  clock.lap("build");

  rep.checks.connected = connected(cg.graph);
  rep.checks.degree = cg.graph.regular_degree() == 2 * (static_cast<int>(q) - 1);
  clock.lap("shape");

  rep.checks.incidence_violations = incidence_suite(H, u).violations;
  clock.lap("incidence");

  ParamTriple triple{u, rep.eta, -1};
  try {
    auto iso = neighborhood_iso(H, triple);
    rep.checks.gpg_iso = iso.verified;
    rep.k = iso.k;
  } catch (const std::domain_error&) {
    rep.checks.gpg_iso = false;  // not a Petersen neighborhood: u is inadmissible
  }
  clock.lap("gpg");

  PermGroup aut = aut_group(cg.graph);
  rep.checks.aut_order = aut.order();
  rep.checks.expected_order = static_cast<unsigned long long>(q) * q * (q - 1);
  clock.lap("aut");

  // G <= Aut: every translation by a connection-set element and the
  // conjugation by Psi_eta must sift into the computed group
  bool members = true;
  for (Phi s : H.omega(OrbitLabel::finite(u))) members = members && aut.contains(Perm{translation_perm(cg, s)});
  members = members && aut.contains(Perm{conjugation_perm(cg, Psi{rep.eta})});
  FrobeniusReport fr = frobenius_report(aut);
  rep.checks.frobenius = members && fr.is_frobenius;
  rep.checks.stabilizer_order = fr.stabilizer_order;
  clock.lap("frobenius");

  auto systems = block_systems(aut, 0);
  bool unique_kprime = systems.size() == 1;
  if (unique_kprime) {
    const std::vector<int>& b = systems[0].block_of_base;
    unique_kprime = b.size() == q;
    for (std::size_t i = 0; i < b.size() && unique_kprime; ++i)
      unique_kprime = b[i] == static_cast<int>(i);
  }
  rep.checks.unique_block_is_kprime = unique_kprime;
  clock.lap("blocks");

  return rep;
}

/// Verifies every u in U_{q,q0}, in parallel, reports sorted by u.
inline std::vector<VerificationReport> verify_all(const Higman& H) {
  std::vector<ParamTriple> triples = enumerate_u_set(H);
  std::vector<VerificationReport> reports(triples.size());
  std::vector<std::string> errors(triples.size());
  parallel_chunks(static_cast<std::uint32_t>(triples.size()), [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t i = lo; i < hi; ++i) {
      try {
        reports[i] = verify_one(H, triples[i].u);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) throw std::runtime_error("u=" + Field::hex(triples[i].u) + ": " + errors[i]);
  return reports;
}

/// OrbitSet serialization: {label, elements[]} with "a-hex:c-hex" members.
inline nlohmann::ordered_json orbit_to_json(const Higman& H, OrbitLabel label) {
  nlohmann::ordered_json j;
  j["label"] = label.infinite ? "inf" : Field::hex(label.u);
  auto elems = nlohmann::ordered_json::array();
  for (Phi p : H.omega(label)) elems.push_back(Higman::phi_str(p));
  j["elements"] = elems;
  return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["params"] = {{"f", rep.f},
                 {"poly", Field::hex_u32(rep.poly)},
                 {"f0", rep.f0},
                 {"u", Field::hex(rep.u)},
                 {"eta", Field::hex(rep.eta)},
                 {"k", rep.k}};
  nlohmann::ordered_json c;
  c["gcd_ok"] = rep.checks.gcd_ok;
  c["u1"] = rep.checks.u1;
  c["u2"] = rep.checks.u2;
  c["connected"] = rep.checks.connected;
  c["degree"] = rep.checks.degree;
  c["gpg_iso"] = rep.checks.gpg_iso;
  c["aut_order"] = rep.checks.aut_order;
  c["expected_order"] = rep.checks.expected_order;
  c["frobenius"] = rep.checks.frobenius;
  c["stabilizer_order"] = rep.checks.stabilizer_order;
  c["unique_block_is_Kprime"] = rep.checks.unique_block_is_kprime;
  c["incidence_violations"] = rep.checks.incidence_violations;
  j["checks"] = c;
  j["pass"] = rep.pass();
  j["version"] = version_string;
  if (with_timing) {
    nlohmann::ordered_json t;
    for (auto& [stage, ms] : rep.timing_ms) t[stage] = ms;
    j["timing_ms"] = t;
  }
  return j;
}

}  // namespace gfr
