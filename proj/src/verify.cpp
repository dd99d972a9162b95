#include "lamina/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "lamina/leaf_invariants.hpp"

namespace lamina {

CheckResult check_census(const Atlas& atlas) {
  CheckResult r{"census"};
  const auto counts = atlas.counts_by_period();
  for (int n = 1; n <= atlas.max_period(); ++n) {
    ++r.cases;
    const BigInt expected = n == 1 ? BigInt(1) : count_periodic_angles(n) / 2;
    if (BigInt(counts[static_cast<std::size_t>(n)]) != expected) {
      r.fail("period " + std::to_string(n) + ": " + std::to_string(counts[static_cast<std::size_t>(n)]) +
             " components, expected " + expected.str());
    }
  }
  return r;
}

CheckResult check_critical_arc_formula(const std::vector<OrbitPortrait>& portraits) {
  CheckResult r{"critical_arc_formula"};
  for (const auto& p : portraits) {
    ++r.cases;
    const DirectedArc ch = characteristic_arc(p);
    const DirectedArc formula{ch.start.halves().second, ch.end.halves().first};
    const DirectedArc actual = critical_arc(p);
    if (actual != formula) {
      r.fail(to_string(p) + ": critical arc " + to_string(actual) + ", formula " + to_string(formula));
    }
  }
  return r;
}

// Recomputed from the class structure rather than through critical_arc.
CheckResult check_critical_arc_preimage(const std::vector<OrbitPortrait>& portraits) {
  CheckResult r{"critical_arc_preimage"};
  const Rational half(1, 2);
  for (const auto& p : portraits) {
    ++r.cases;
    const DirectedArc ch = characteristic_arc(p);
    std::optional<DirectedArc> longest;
    std::optional<Rational> shortest_long;
    for (const auto& cls : p.classes()) {
      const bool preimage =
          std::any_of(cls.begin(), cls.end(), [&](const Angle& a) { return a.doubled() == ch.start; });
      for (const auto& a : complementary_arcs(cls)) {
        if (a.length() > half && (!shortest_long || a.length() < *shortest_long)) shortest_long = a.length();
        if (preimage && (!longest || a.length() > longest->length())) longest = a;
      }
    }
    const bool ok = longest && longest->start.doubled() == ch.start && longest->end.doubled() == ch.end &&
                    longest->length() == (Rational(1) + ch.length()) / 2 && longest->length() == *shortest_long &&
                    critical_arc(p) == *longest;
    if (!ok) r.fail(to_string(p) + ": no arc of the preimage class doubles onto " + to_string(ch));
  }
  return r;
}

CheckResult check_rigidity(const RigidityReport& report) {
  CheckResult r{"rotation_rigidity"};
  r.cases = report.pairs_checked;
  for (const auto& c : report.counterexamples) {
    r.fail(to_string(c.from) + " rotated by " + c.rotation.str() + " gives " + to_string(c.to));
  }
  return r;
}

CheckResult check_address_injectivity(const Atlas& atlas) {
  CheckResult r{"labelled_address_injectivity"};
  std::map<std::string, const HyperbolicComponent*> seen;
  for (const auto& c : atlas.components()) {
    ++r.cases;
    auto [it, inserted] = seen.emplace(to_string(c.address), &c);
    if (!inserted) r.fail(it->second->name() + " and " + c.name() + " share " + it->first);
  }
  return r;
}

CheckResult check_bundle_injectivity(const Atlas& atlas) {
  CheckResult r{"bundle_injectivity"};
  const auto report = injectivity_sweep(atlas);
  r.cases = report.pairs;
  for (const auto& [a, b] : report.bundle_collisions) r.fail(a + " and " + b + " have equal bundles");
  return r;
}

CheckResult check_irregular_points(const Atlas& atlas) {
  CheckResult r{"irregular_points"};
  for (const auto& c : atlas.components()) {
    ++r.cases;
    const auto b = invariant_bundle(c, atlas);
    if (b.irregular_points != c.period + 1) {
      r.fail(c.name() + ": " + std::to_string(b.irregular_points) + " irregular points");
    }
  }
  return r;
}

std::vector<SolenoidPoint> solenoid_probe_points(std::size_t depth) {
  std::vector<SolenoidPoint> out;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_periodic_angles(n)) out.push_back(periodic_point(a, depth));
  }
  for (const auto& t : {Rational(1), Rational(1, 3), Rational(1, 5), Rational(3, 7), Rational(2), Rational(-1, 6),
                        Rational(5, 12)}) {
    out.push_back(rho(t, depth));
  }
  // Preperiodic bases with tails from a fixed linear congruential stream.
  std::uint32_t state = 12345;
  for (int k = 1; k < 12; ++k) {
    std::vector<std::uint8_t> tail(depth);
    for (auto& b : tail) {
      state = state * 1103515245u + 12345u;
      b = (state >> 16) & 1;
    }
    out.emplace_back(Angle(k, 24), std::move(tail));
  }
  return out;
}

CheckResult check_solenoid_algebra(std::size_t depth) {
  CheckResult r{"solenoid_algebra"};
  const auto pts = solenoid_probe_points(depth);
  const auto unit = SolenoidPoint::unit(depth);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& x = pts[i];
    ++r.cases;
    if (group_mul(x, unit) != x) r.fail("identity fails at " + to_string(x));
    if (group_mul(x, group_inverse(x)) != unit) r.fail("inverse fails at " + to_string(x));
    if (inversion(inversion(x)) != x) r.fail("inversion is not an involution at " + to_string(x));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const auto& y = pts[j];
      const auto xy = group_mul(x, y);
      ++r.cases;
      if (xy != group_mul(y, x)) r.fail("not commutative: " + to_string(x) + ", " + to_string(y));
      if (shift(xy) != group_mul(shift(x), shift(y))) r.fail("shift not a homomorphism at " + to_string(x));
      if (inversion(xy) != group_mul(inversion(x), inversion(y))) {
        r.fail("inversion not a homomorphism at " + to_string(x));
      }
      // Associativity on a thinned set of triples.
      if ((i + j) % 7 == 0) {
        const auto& z = pts[(i * 31 + j * 17) % pts.size()];
        ++r.cases;
        if (group_mul(xy, z) != group_mul(x, group_mul(y, z))) r.fail("not associative at " + to_string(x));
      }
    }
  }
  // rho(s + t) = rho(s) rho(t).
  const std::vector<Rational> params{Rational(0), Rational(1), Rational(1, 3), Rational(2, 5), Rational(-3, 7),
                                     Rational(7, 4), Rational(5, 6)};
  for (const auto& s : params) {
    for (const auto& t : params) {
      ++r.cases;
      if (rho(s + t, depth) != group_mul(rho(s, depth), rho(t, depth))) {
        r.fail("rho not additive at " + s.str() + ", " + t.str());
      }
    }
  }
  return r;
}

CheckResult check_adding_machine(std::size_t depth) {
  CheckResult r{"adding_machine"};
  const auto one = rho(Rational(1), depth);
  // Literal iteration up to 2^16 steps; beyond that the rho route.
  constexpr std::size_t kIterateDepth = 16;
  const std::size_t order = depth > kIterateDepth ? 0 : std::size_t{1} << depth;
  for (const auto& x : solenoid_probe_points(depth)) {
    ++r.cases;
    if (adding_machine(x) != group_mul(one, x)) r.fail("adding machine is not translation by rho(1) at " + to_string(x));
    if (depth > kIterateDepth) {
      // sigma^k is translation by rho(k); the order is a power of two, so
      // sigma^(2^d) = id and sigma^(2^(d-1)) != id pin it down.
      const Rational full(BigInt(1) << depth);
      if (group_mul(rho(full, depth), x) != x) r.fail("adding machine^(2^d) is not the identity at " + to_string(x));
      if (group_mul(rho(full / 2, depth), x) == x) r.fail("order below 2^" + std::to_string(depth) + " at " + to_string(x));
      continue;
    }
    SolenoidPoint y = x;
    for (std::size_t k = 1; k <= order; ++k) {
      y = adding_machine(y);
      if (y == x && k != order) {
        r.fail("order " + std::to_string(k) + " < 2^" + std::to_string(depth) + " at " + to_string(x));
        break;
      }
    }
    if (y != x) r.fail("adding machine^(2^d) is not the identity at " + to_string(x));
  }
  return r;
}

CheckResult check_lu_discrepancy_pattern(const Atlas& atlas, int max_period) {
  CheckResult r{"lu_discrepancy_pattern"};
  for (const auto& c : atlas.components()) {
    if (c.period > max_period) continue;
    ++r.cases;
    const auto report = lu_discrepancy(c, atlas);
    for (const auto& d : report.discrepancies) {
      const bool expected = d.field == "leaf_count" && d.step_kind == ComponentKind::satellite &&
                            d.address_value == d.step_period && d.portrait_value == d.previous_period;
      if (!expected) {
        r.fail(c.name() + " step " + std::to_string(d.step) + ": " + d.field + " " + std::to_string(d.address_value) +
               " vs " + std::to_string(d.portrait_value));
      }
    }
  }
  return r;
}

}  // namespace lamina
