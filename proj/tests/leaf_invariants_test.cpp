#include <gtest/gtest.h>

#include <stdexcept>

#include "lamina/leaf_invariants.hpp"
#include "lamina/serialize.hpp"

namespace lamina {
namespace {

Angle A(const char* text) { return Angle::parse(text); }

using Records = std::vector<LeafCycleRecord>;

LeafCycleRecord R(int leaves, int unbounded) { return {leaves, leaves, unbounded, ProfileSource::address_rule}; }

class LeafTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { atlas_ = new Atlas(atlas_build(8)); }
  static void TearDownTestSuite() {
    delete atlas_;
    atlas_ = nullptr;
  }
  static const HyperbolicComponent& at(const char* angle) {
    const auto* c = atlas_->query_by_angle(A(angle));
    if (c == nullptr) throw std::out_of_range(angle);
    return *c;
  }
  static Atlas* atlas_;
};

Atlas* LeafTest::atlas_ = nullptr;

TEST_F(LeafTest, UnboundedCountExamples) {
  const auto& rabbit = atlas_->root_portrait(at("1/7"));
  const auto& airplane = atlas_->root_portrait(at("3/7"));
  const auto& basilica = atlas_->root_portrait(at("1/3"));
  EXPECT_EQ(unbounded_count(rabbit, true, PortraitKind::satellite), 6);
  EXPECT_EQ(unbounded_count(airplane, true, PortraitKind::primitive), 3);
  EXPECT_EQ(unbounded_count(basilica, true, PortraitKind::satellite), 4);
  EXPECT_EQ(unbounded_count(OrbitPortrait({{Angle()}}), false, PortraitKind::trivial), 1);
  EXPECT_EQ(unbounded_count(airplane, false, PortraitKind::primitive), 2);
}

TEST_F(LeafTest, SatelliteRootDoublesAndRotationDoesNotMatter) {
  for (const auto& c : atlas_->components()) {
    if (c.is_main_cardioid()) continue;
    const auto& p = atlas_->root_portrait(c);
    const auto kind = *p.kind();
    const int root = unbounded_count(p, true, kind);
    if (kind == PortraitKind::satellite) ASSERT_EQ(root, 2 * unbounded_count(p, false, kind));
    ASSERT_GE(root, 3) << c.name();
    const auto turned = rotate_portrait(p, A("1/5"));
    ASSERT_EQ(unbounded_count(turned, true, kind), root);
    ASSERT_EQ(unbounded_count(turned, false, kind), unbounded_count(p, false, kind));
  }
}

TEST(AddressProfileTest, Examples) {
  EXPECT_EQ(lu_profile_from_address(std::vector<int>{1, 2, 3}), (Records{R(2, 2), R(3, 3)}));
  EXPECT_EQ(lu_profile_from_address(std::vector<int>{1, 3}), (Records{R(3, 6)}));
  EXPECT_EQ(lu_profile_from_address(std::vector<int>{1, 2, 4}), (Records{R(2, 2), R(4, 4)}));
  EXPECT_EQ(lu_profile_from_address(std::vector<int>{1, 2, 5, 7}), (Records{R(2, 2), R(5, 2), R(7, 3)}));
  EXPECT_TRUE(lu_profile_from_address(std::vector<int>{1}).empty());
}

TEST(AddressProfileTest, Rejections) {
  EXPECT_THROW(lu_profile_from_address(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(lu_profile_from_address(std::vector<int>{2, 4}), std::invalid_argument);
  EXPECT_THROW(lu_profile_from_address(std::vector<int>{1, 3, 3}), std::invalid_argument);
}

TEST_F(LeafTest, PortraitProfileExamples) {
  const auto airplane = lu_profile_from_portraits(at("3/7"), *atlas_);
  ASSERT_EQ(airplane.size(), 2u);
  EXPECT_EQ(airplane.back().leaf_count, 3);
  EXPECT_EQ(airplane.back().unbounded_count, 3);
  EXPECT_EQ(airplane.back().source, ProfileSource::portrait_rule);

  const auto rabbit = lu_profile_from_portraits(at("1/7"), *atlas_);
  ASSERT_EQ(rabbit.size(), 1u);
  EXPECT_EQ(rabbit.back().leaf_count, 1);
  EXPECT_EQ(rabbit.back().unbounded_count, 6);

  const auto basilica = lu_profile_from_portraits(at("1/3"), *atlas_);
  ASSERT_EQ(basilica.size(), 1u);
  EXPECT_EQ(basilica.back().leaf_count, 1);
  EXPECT_EQ(basilica.back().unbounded_count, 4);
}

TEST_F(LeafTest, RabbitDiscrepancyIsTheSatelliteLeafCount) {
  const auto report = lu_discrepancy(at("1/7"), *atlas_);
  ASSERT_EQ(report.discrepancies.size(), 1u);
  const auto& d = report.discrepancies.front();
  EXPECT_EQ(d.field, "leaf_count");
  EXPECT_EQ(d.address_value, 3);
  EXPECT_EQ(d.portrait_value, 1);
  EXPECT_EQ(d.step_kind, ComponentKind::satellite);
  EXPECT_TRUE(lu_discrepancy(at("3/7"), *atlas_).discrepancies.size() == 1u);
}

TEST_F(LeafTest, ProfilesAgreeOnUnboundedCountsThroughSix) {
  for (const auto& c : atlas_->components()) {
    if (c.period > 6) continue;
    const auto report = lu_discrepancy(c, *atlas_);
    for (const auto& d : report.discrepancies) {
      ASSERT_EQ(d.field, "leaf_count") << c.name();
      ASSERT_EQ(d.step_kind, ComponentKind::satellite) << c.name();
      ASSERT_EQ(d.address_value, d.step_period) << c.name();
      ASSERT_EQ(d.portrait_value, d.previous_period) << c.name();
    }
  }
}

TEST_F(LeafTest, DiscrepancyReportIsStable) {
  for (const char* angle : {"1/7", "3/7", "11/31", "2/5"}) {
    EXPECT_EQ(discrepancy_to_json(lu_discrepancy(at(angle), *atlas_)).dump(),
              discrepancy_to_json(lu_discrepancy(at(angle), *atlas_)).dump());
  }
}

TEST_F(LeafTest, RootRecordHasAtLeastThreeUnbounded) {
  for (const auto& c : atlas_->components()) {
    if (c.is_main_cardioid()) continue;
    const auto profile = lu_profile_from_address(c.address);
    ASSERT_FALSE(profile.empty());
    ASSERT_GE(profile.back().unbounded_count, 3) << c.name();
    for (const auto& r : profile) ASSERT_GE(r.unbounded_count, 1);
  }
}

TEST_F(LeafTest, BoundCheckExamples) {
  const Atlas small = atlas_build(5);
  EXPECT_TRUE(nonperiodic_bound_check(small, *small.query_by_angle(A("3/7")), 4).violations.empty());
  EXPECT_TRUE(nonperiodic_bound_check(small, *small.query_by_angle(A("1/3")), 5).violations.empty());
  EXPECT_TRUE(nonperiodic_bound_check(small, *small.query_by_angle(A("1/7")), 3).violations.empty());
  EXPECT_GT(nonperiodic_bound_check(small, *small.query_by_angle(A("3/7")), 4).angles_checked, 0u);
  EXPECT_THROW(nonperiodic_bound_check(small, 6), std::invalid_argument);
}

// The rays at the period-6 satellite of the basilica's 1/3 limb land in
// threes for the period-5 centre in that limb, but that satellite is not an
// address entry (6 > 5), so the sweep reports it.
TEST_F(LeafTest, BoundCheckReportsBranchCyclesOffTheAddressChain) {
  const auto report = nonperiodic_bound_check(*atlas_, at("11/31"), 6);
  ASSERT_FALSE(report.violations.empty());
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.valence, 3);
    EXPECT_EQ(exact_period(v.angle), 6);
  }
}

TEST_F(LeafTest, BundleExamples) {
  const auto basilica = invariant_bundle(at("1/3"), *atlas_);
  EXPECT_EQ(basilica.period, 2);
  EXPECT_EQ(basilica.kind, ComponentKind::satellite);
  EXPECT_EQ(to_string(basilica.labelled_address), "1 -(1/2)-> 2");
  EXPECT_EQ(basilica.irregular_points, 3);

  const auto airplane = invariant_bundle(at("3/7"), *atlas_);
  EXPECT_EQ(airplane.period, 3);
  EXPECT_EQ(airplane.kind, ComponentKind::primitive);
  EXPECT_EQ(airplane.irregular_points, 4);

  const auto main = invariant_bundle(atlas_->main_cardioid(), *atlas_);
  EXPECT_EQ(main.period, 1);
  EXPECT_EQ(main.irregular_points, 2);
  EXPECT_EQ(main.kind, ComponentKind::main_cardioid);
}

TEST_F(LeafTest, IrregularPointsArePeriodPlusOne) {
  for (const auto& c : atlas_->components()) ASSERT_EQ(invariant_bundle(c, *atlas_).irregular_points, c.period + 1);
}

TEST_F(LeafTest, DistinguishExamples) {
  const auto rabbit = invariant_bundle(at("1/7"), *atlas_);
  const auto corabbit = invariant_bundle(at("5/7"), *atlas_);
  const auto airplane = invariant_bundle(at("3/7"), *atlas_);
  const auto basilica = invariant_bundle(at("1/3"), *atlas_);

  const auto rc = distinguish(rabbit, corabbit);
  EXPECT_EQ(rc.field, "labelled_address");
  EXPECT_EQ(rc.left, "1 -(1/3)-> 3");
  EXPECT_EQ(rc.right, "1 -(2/3)-> 3");
  EXPECT_EQ(distinguish(airplane, rabbit).field, "kind");
  EXPECT_TRUE(distinguish(basilica, basilica).equal());
  EXPECT_EQ(distinguish(basilica, airplane).field, "period");
}

TEST_F(LeafTest, MirrorMatchesConjugateComponent) {
  for (const auto& c : atlas_->components()) {
    const HyperbolicComponent* conj =
        c.is_main_cardioid() ? &atlas_->main_cardioid() : atlas_->query_by_angle(c.root_hi.negated());
    ASSERT_NE(conj, nullptr);
    const auto b = invariant_bundle(c, *atlas_);
    ASSERT_EQ(mirror(b), invariant_bundle(*conj, *atlas_)) << c.name();
    ASSERT_EQ(mirror(mirror(b)), b);
    if (!(*conj == c)) ASSERT_FALSE(distinguish(b, mirror(b)).equal()) << c.name();
  }
}

TEST_F(LeafTest, InjectivityThroughEight) {
  const auto report = injectivity_sweep(*atlas_);
  EXPECT_EQ(report.components, 236u);
  EXPECT_EQ(report.pairs, 236u * 235u / 2);
  EXPECT_TRUE(report.bundle_collisions.empty());
  EXPECT_TRUE(report.address_collisions.empty());
}

TEST_F(LeafTest, BundleRecord) {
  const Json j = bundle_to_json(invariant_bundle(at("3/7"), *atlas_));
  EXPECT_EQ(j.at("schema_version"), kRecordSchemaVersion);
  EXPECT_EQ(j.at("period"), 3);
  EXPECT_EQ(j.at("kind"), "primitive");
  EXPECT_EQ(j.at("irregular_points"), 4);
}

}  // namespace
}  // namespace lamina
