#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "lamina/atlas.hpp"
#include "lamina/serialize.hpp"
#include "lamina/solenoid.hpp"
#include "lamina/verify.hpp"

namespace lamina {
namespace {

Angle A(const char* text) { return Angle::parse(text); }

SolenoidPoint S(const char* base, std::vector<std::uint8_t> tail) { return SolenoidPoint(A(base), std::move(tail)); }

std::vector<Angle> As(std::initializer_list<const char*> texts) {
  std::vector<Angle> out;
  for (const char* t : texts) out.push_back(A(t));
  return out;
}

TEST(SolenoidTest, CoordinatesExamples) {
  EXPECT_EQ(coordinates(S("1/3", {1, 0})), As({"1/3", "2/3", "1/3"}));
  EXPECT_EQ(coordinates(S("0", {0, 0, 0})), As({"0", "0", "0", "0"}));
  EXPECT_EQ(coordinates(S("1/2", {1})), As({"1/2", "3/4"}));
}

TEST(SolenoidTest, TailBitsAreValidated) {
  EXPECT_THROW(S("1/3", {2}), std::invalid_argument);
  EXPECT_THROW(SolenoidPoint::from_coordinates(As({"1/3", "1/5"})), std::invalid_argument);
  EXPECT_EQ(SolenoidPoint::from_coordinates(As({"1/3", "2/3", "1/3"})), S("1/3", {1, 0}));
}

TEST(SolenoidTest, GroupMultiplicationExamples) {
  const auto x = S("1/3", {1, 0});
  EXPECT_EQ(group_mul(x, SolenoidPoint::unit(2)), x);
  EXPECT_EQ(group_mul(x, group_inverse(x)), SolenoidPoint::unit(2));
  // (1/3, 2/3, 1/3) + (2/3, 1/3, 2/3) vanishes in every coordinate.
  const auto y = S("2/3", {0, 1});
  EXPECT_EQ(coordinates(y), As({"2/3", "1/3", "2/3"}));
  EXPECT_EQ(group_mul(x, y), SolenoidPoint::unit(2));
  EXPECT_THROW(group_mul(x, SolenoidPoint::unit(3)), std::invalid_argument);
}

TEST(SolenoidTest, AddingMachineExamples) {
  EXPECT_EQ(adding_machine(S("1/5", {0, 0, 0})), S("1/5", {1, 0, 0}));
  EXPECT_EQ(adding_machine(S("1/5", {1, 1})), S("1/5", {0, 0}));
  EXPECT_EQ(adding_machine(S("1/5", {1, 0, 1})), S("1/5", {0, 1, 1}));
  for (std::size_t d = 0; d <= 6; ++d) EXPECT_EQ(adding_machine(SolenoidPoint::unit(d)), rho(Rational(1), d));
}

TEST(SolenoidTest, RhoExamples) {
  EXPECT_EQ(rho(Rational(0), 5), SolenoidPoint::unit(5));
  const auto r = rho(Rational(1), 3);
  EXPECT_EQ(r.base(), Angle());
  EXPECT_EQ(coordinates(r), As({"0", "1/2", "1/4", "1/8"}));
  EXPECT_EQ(rho(Rational(2), 7), group_mul(rho(Rational(1), 7), rho(Rational(1), 7)));
}

TEST(SolenoidTest, ShiftExamples) {
  const auto x = S("1/3", {1, 0});
  EXPECT_EQ(shift(x), S("2/3", {0, 1}));
  EXPECT_EQ(unshift(shift(x)), x.truncated(1));
  EXPECT_EQ(shift(periodic_point(A("1/3"), 9)), periodic_point(A("2/3"), 9));
  EXPECT_THROW(unshift(SolenoidPoint::unit(0)), std::invalid_argument);
}

TEST(SolenoidTest, PeriodicPointExamples) {
  EXPECT_EQ(periodic_point(A("1/3"), 2), S("1/3", {1, 0}));
  EXPECT_EQ(periodic_point(A("0"), 6), SolenoidPoint::unit(6));
  EXPECT_EQ(coordinates(periodic_point(A("1/7"), 3)), As({"1/7", "4/7", "2/7", "1/7"}));
  EXPECT_THROW(periodic_point(A("1/4"), 3), std::invalid_argument);
}

TEST(SolenoidTest, PeriodicPointsAreShiftPeriodicAndInjective) {
  const std::size_t depth = 8;
  std::set<std::pair<std::string, std::string>> seen;
  for (int den = 1; den < (1 << depth); den += 2) {
    for (int num = 0; num < den; ++num) {
      const Angle t(num, den);
      if (t.den() != den) continue;
      const auto p = periodic_point(t, depth);
      SolenoidPoint q = p;
      for (std::size_t k = 0; k < orbit(t).period(); ++k) q = shift(q);
      ASSERT_EQ(q, p) << t.str();
      ASSERT_TRUE(seen.emplace(p.base().str(), p.tail_string()).second) << t.str();
    }
  }
}

// Componentwise addition, checked directly on coordinate lists.
TEST(SolenoidTest, GroupMultiplicationIsComponentwise) {
  for (std::size_t depth : {0u, 1u, 5u, 16u}) {
    const auto probes = solenoid_probe_points(depth);
    for (std::size_t i = 0; i < probes.size(); i += 3) {
      for (std::size_t j = 0; j < probes.size(); j += 5) {
        const auto cx = coordinates(probes[i]);
        const auto cy = coordinates(probes[j]);
        const auto cz = coordinates(group_mul(probes[i], probes[j]));
        for (std::size_t k = 0; k <= depth; ++k) ASSERT_EQ(cz[k], cx[k] + cy[k]);
      }
    }
  }
}

TEST(SolenoidTest, GroupAxiomsOnProbeSet) {
  for (std::size_t depth = 0; depth <= 16; depth += 4) {
    const auto probes = solenoid_probe_points(depth);
    ASSERT_GE(probes.size(), 100u);
    const auto unit = SolenoidPoint::unit(depth);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto& x = probes[i];
      ASSERT_EQ(group_mul(x, unit), x);
      ASSERT_EQ(group_mul(x, group_inverse(x)), unit);
      ASSERT_EQ(inversion(inversion(x)), x);
      const auto& y = probes[(i * 7 + 3) % probes.size()];
      const auto& z = probes[(i * 13 + 5) % probes.size()];
      ASSERT_EQ(group_mul(x, y), group_mul(y, x));
      ASSERT_EQ(group_mul(group_mul(x, y), z), group_mul(x, group_mul(y, z)));
      ASSERT_EQ(shift(group_mul(x, y)), group_mul(shift(x), shift(y)));
      ASSERT_EQ(inversion(group_mul(x, y)), group_mul(inversion(x), inversion(y)));
    }
  }
}

TEST(SolenoidTest, RhoIsAHomomorphism) {
  const std::vector<Rational> ts{Rational(0), Rational(1), Rational(1, 3), Rational(-2, 5), Rational(7, 4),
                                 Rational(11, 9)};
  for (const auto& s : ts) {
    for (const auto& t : ts) ASSERT_EQ(rho(s + t, 12), group_mul(rho(s, 12), rho(t, 12)));
  }
}

TEST(SolenoidTest, AddingMachineHasExactOrder) {
  for (std::size_t d = 1; d <= 10; ++d) {
    const auto x = periodic_point(A("1/7"), d);
    SolenoidPoint y = x;
    std::size_t steps = 0;
    do {
      y = adding_machine(y);
      ++steps;
    } while (y != x);
    ASSERT_EQ(steps, std::size_t{1} << d);
  }
}

TEST(SolenoidTest, AddingMachineCheckBothRoutes) {
  EXPECT_TRUE(check_adding_machine(8).passed);
  EXPECT_TRUE(check_adding_machine(24).passed);
}

TEST(AffineTest, IdentityAndInvolution) {
  const auto id = AffineSolenoidMap::identity(8);
  for (const auto& x : affine_probe_set(8)) EXPECT_EQ(apply_affine(id, x), x);
  const AffineSolenoidMap r{SolenoidPoint::unit(8), 0, true};
  EXPECT_TRUE(affine_equal(compose_affine(r, r), id, 8));
  EXPECT_EQ(compose_affine(r, r), id);
}

TEST(AffineTest, ApplyIsTranslationAfterShiftAfterInversion) {
  const auto tau = rho(Rational(1, 3), 10);
  const AffineSolenoidMap m{tau, 2, true};
  for (const auto& x : affine_probe_set(10)) {
    EXPECT_EQ(apply_affine(m, x), group_mul(tau, shift(shift(inversion(x)))));
  }
}

TEST(AffineTest, NegativePowersConsumeDepth) {
  const AffineSolenoidMap back{SolenoidPoint::unit(6), -2, false};
  const auto x = periodic_point(A("1/5"), 6);
  const auto y = apply_affine(back, x);
  EXPECT_EQ(y.depth(), 4u);
  EXPECT_EQ(y, unshift(unshift(x)));
  const AffineSolenoidMap deep{SolenoidPoint::unit(6), -7, false};
  EXPECT_THROW(apply_affine(deep, x), std::invalid_argument);
}

TEST(AffineTest, CompositionMatchesFunctionalComposition) {
  const std::vector<AffineSolenoidMap> maps{
      {rho(Rational(1, 3), 12), 1, false},
      {rho(Rational(2, 5), 12), 0, true},
      {periodic_point(A("3/7"), 12), 2, true},
      {SolenoidPoint::unit(12), -1, false},
  };
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      const auto fg = compose_affine(f, g);
      for (const auto& x : affine_probe_set(12)) {
        const auto lhs = apply_affine(fg, x);
        const auto rhs = apply_affine(f, apply_affine(g, x));
        const std::size_t common = std::min(lhs.depth(), rhs.depth());
        ASSERT_EQ(lhs.truncated(common), rhs.truncated(common)) << to_string(f) << " o " << to_string(g);
      }
    }
  }
}

// Negating every coordinate commutes with doubling, so at every depth the
// observed relation is commutation, not the dihedral one.
TEST(AffineTest, ObservedRelations) {
  for (std::size_t depth : {4u, 16u}) {
    const auto rel = observe_affine_relations(depth);
    EXPECT_TRUE(rel.inversion_is_involution);
    EXPECT_TRUE(rel.shift_commutes_with_inversion);
    EXPECT_FALSE(rel.dihedral_relation_holds);
  }
  const AffineSolenoidMap f{SolenoidPoint::unit(16), 1, false};
  const AffineSolenoidMap r{SolenoidPoint::unit(16), 0, true};
  EXPECT_TRUE(affine_equal(compose_affine(f, r), compose_affine(r, f), 16));
}

TEST(SolenoidTest, SameLeafPeriodic) {
  const Atlas atlas = atlas_build(4);
  EXPECT_TRUE(same_leaf_periodic(A("1/7"), A("2/7"), atlas));
  EXPECT_FALSE(same_leaf_periodic(A("1/7"), A("5/7"), atlas));
  EXPECT_TRUE(same_leaf_periodic(A("1/3"), A("2/3"), atlas));
  EXPECT_TRUE(same_leaf_periodic(A("6/7"), A("1/7"), atlas));
  EXPECT_FALSE(same_leaf_periodic(A("1/3"), A("1/7"), atlas));
  EXPECT_THROW(same_leaf_periodic(A("1/31"), A("2/31"), atlas), std::invalid_argument);
  EXPECT_THROW(same_leaf_periodic(A("1/4"), A("1/3"), atlas), std::invalid_argument);
}

TEST(SolenoidTest, SerializationRoundTrip) {
  const auto x = periodic_point(A("3/7"), 9);
  const Json j = solenoid_to_json(x);
  EXPECT_EQ(j.dump(), R"({"base":"3/7","tail":")" + x.tail_string() + R"(","depth":9})");
  EXPECT_EQ(solenoid_from_json(j), x);
  const AffineSolenoidMap m{rho(Rational(1, 3), 5), -2, true};
  EXPECT_EQ(affine_from_json(affine_to_json(m)), m);
}

}  // namespace
}  // namespace lamina
