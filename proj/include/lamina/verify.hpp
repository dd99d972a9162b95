#ifndef LAMINA_VERIFY_HPP_
#define LAMINA_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lamina/atlas.hpp"
#include "lamina/portrait.hpp"
#include "lamina/solenoid.hpp"

namespace lamina {

/// Outcome of one verification sweep. `witnesses` holds the first 20
/// counterexamples; `failures` counts all of them.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    passed = false;
    ++failures;
    if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
  }
};

/// Per-period component counts against (number of period-n angles) / 2.
CheckResult check_census(const Atlas& atlas);

/// The critical arc of every portrait equals (t1/2 + 1/2 -> t2/2) for its
/// characteristic arc (t1 -> t2). Fails on portraits where t1/2 + 1/2 is not
/// in the cycle; witnesses name the actual arc.
CheckResult check_critical_arc_formula(const std::vector<OrbitPortrait>& portraits);

/// The critical arc doubles onto the characteristic arc, has length
/// (1 + l)/2 for characteristic length l, is the longest arc of its class and
/// the shortest of all arcs longer than 1/2.
CheckResult check_critical_arc_preimage(const std::vector<OrbitPortrait>& portraits);

CheckResult check_rigidity(const RigidityReport& report);

/// No two distinct components share a labelled address.
CheckResult check_address_injectivity(const Atlas& atlas);
/// No two distinct components share an invariant bundle.
CheckResult check_bundle_injectivity(const Atlas& atlas);

CheckResult check_irregular_points(const Atlas& atlas);

/// At least `count` deterministic probe points: every periodic point of
/// period <= 6, several rho(t), and preperiodic bases with mixed tails.
std::vector<SolenoidPoint> solenoid_probe_points(std::size_t depth);

/// Abelian group axioms, rho homomorphism, shift and inversion automorphisms.
CheckResult check_solenoid_algebra(std::size_t depth);
/// The adding machine agrees with translation by rho(1) and has order
/// exactly 2^depth on every probe point.
CheckResult check_adding_machine(std::size_t depth);

/// Unbounded counts from the two profile routes agree, and every leaf-count
/// disagreement sits on a satellite step reporting n_j against n_{j-1}.
CheckResult check_lu_discrepancy_pattern(const Atlas& atlas, int max_period);

}  // namespace lamina

#endif  // LAMINA_VERIFY_HPP_
