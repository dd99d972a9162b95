#ifndef LAMINA_LEAF_INVARIANTS_HPP_
#define LAMINA_LEAF_INVARIANTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lamina/atlas.hpp"
#include "lamina/portrait.hpp"

namespace lamina {

enum class ProfileSource { address_rule, portrait_rule };

std::string to_string(ProfileSource source);

/// One cycle of periodic leaves and the number of unbounded Fatou
/// components on each leaf of the cycle.
struct LeafCycleRecord {
  int point_period = 0;
  int leaf_count = 0;
  int unbounded_count = 1;
  ProfileSource source = ProfileSource::address_rule;

  friend bool operator==(const LeafCycleRecord&, const LeafCycleRecord&) = default;
};

/// v off the dynamic root; 2v on a satellite dynamic root; 3 on a primitive
/// dynamic root.
int unbounded_count(const OrbitPortrait& portrait, bool is_dynamic_root, PortraitKind kind);

/// One record per arrow n_{j-1} -> n_j of the internal address.
std::vector<LeafCycleRecord> lu_profile_from_address(const LabelledAddress& address);
std::vector<LeafCycleRecord> lu_profile_from_address(const std::vector<int>& periods);

/// Same profile computed from the realized root portraits of the components
/// on the combinatorial arc.
std::vector<LeafCycleRecord> lu_profile_from_portraits(const HyperbolicComponent& component, const Atlas& atlas);

struct ProfileDiscrepancy {
  std::size_t step = 0;  // 1-based arrow index
  std::string field;     // "leaf_count", "unbounded_count" or "length"
  int address_value = 0;
  int portrait_value = 0;
  /// Kind of the arc component at this step.
  ComponentKind step_kind = ComponentKind::primitive;
  int previous_period = 0;
  int step_period = 0;
};

struct DiscrepancyReport {
  std::string component;
  std::vector<LeafCycleRecord> by_address;
  std::vector<LeafCycleRecord> by_portraits;
  std::vector<ProfileDiscrepancy> discrepancies;
};

DiscrepancyReport lu_discrepancy(const HyperbolicComponent& component, const Atlas& atlas);

struct BoundViolation {
  std::string component;
  Angle angle;
  int valence = 0;
};

struct BoundReport {
  std::size_t components_checked = 0;
  std::size_t angles_checked = 0;
  std::vector<BoundViolation> violations;
};

/// For each component, identifies periodic angles of period <= max_period
/// that land together (root portraits of every component whose wake holds
/// it, itself included) and checks that every angle outside the
/// address-chain portraits has valence <= 2.
BoundReport nonperiodic_bound_check(const Atlas& atlas, int max_period);
BoundReport nonperiodic_bound_check(const Atlas& atlas, const HyperbolicComponent& component, int max_period);

struct InvariantBundle {
  int period = 1;
  OrbitPortrait root_portrait;
  ComponentKind kind = ComponentKind::main_cardioid;
  LabelledAddress labelled_address;
  std::vector<LeafCycleRecord> lu_profile;
  int irregular_points = 2;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

InvariantBundle invariant_bundle(const HyperbolicComponent& component, const Atlas& atlas);

/// Orientation reversal: every portrait angle negated, rotation labels
/// p/q replaced by (q-p)/q.
InvariantBundle mirror(const InvariantBundle& bundle);

struct Distinction {
  /// Empty when the bundles are equal; otherwise the first differing field.
  std::string field;
  std::string left;
  std::string right;

  bool equal() const { return field.empty(); }
};

Distinction distinguish(const InvariantBundle& a, const InvariantBundle& b);

struct InjectivityReport {
  std::size_t components = 0;
  std::size_t pairs = 0;
  /// Pairs of distinct components with equal bundles.
  std::vector<std::pair<std::string, std::string>> bundle_collisions;
  /// Pairs of distinct components with equal labelled addresses.
  std::vector<std::pair<std::string, std::string>> address_collisions;
};

InjectivityReport injectivity_sweep(const Atlas& atlas);

}  // namespace lamina

#endif  // LAMINA_LEAF_INVARIANTS_HPP_
