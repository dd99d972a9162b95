#ifndef LAMINA_PORTRAIT_HPP_
#define LAMINA_PORTRAIT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lamina/angle.hpp"

namespace lamina {

enum class PortraitKind { trivial, satellite, primitive };

std::string to_string(PortraitKind kind);

/// A family of angle classes A_1..A_p, listed in forward-orbit order
/// (doubling should carry A_i onto A_{i+1 mod p}). Construction does not
/// validate; use validate_portrait. Angles inside each class are kept sorted.
class OrbitPortrait {
 public:
  OrbitPortrait() = default;
  explicit OrbitPortrait(std::vector<std::vector<Angle>> classes);

  const std::vector<std::vector<Angle>>& classes() const { return classes_; }
  int point_period() const { return static_cast<int>(classes_.size()); }
  /// Cardinality of the first class.
  int valence() const;
  /// Exact period of the first angle under doubling.
  int ray_period() const;
  /// nullopt when (p, v, ray_period) matches none of the three kinds.
  std::optional<PortraitKind> kind() const;

  std::vector<Angle> all_angles() const;
  bool contains(const Angle& theta) const;
  /// Index of the class holding theta, or -1.
  int class_of(const Angle& theta) const;

  /// Same family of sets, ignoring the order in which classes are listed.
  friend bool operator==(const OrbitPortrait& a, const OrbitPortrait& b);

 private:
  std::vector<std::vector<Angle>> classes_;
};

std::string to_string(const OrbitPortrait& portrait);

enum class ViolationKind { empty, period_mismatch, cardinality, not_bijective, order_reversed, linked };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Every axiom the candidate breaks; empty iff it is a valid orbit portrait.
std::vector<Violation> validate_portrait(const OrbitPortrait& candidate);

/// Complementary arcs of one finite angle set, in increasing order of start.
std::vector<DirectedArc> complementary_arcs(const std::vector<Angle>& angles);

/// The unique shortest complementary arc over all classes. Throws
/// std::invalid_argument for valence 1 and std::logic_error if the shortest
/// arc is not unique.
DirectedArc characteristic_arc(const OrbitPortrait& portrait);

/// The complementary arc longer than 1/2 that doubling maps onto the
/// characteristic arc (t1 -> t2): the longest arc of its own class and the
/// shortest of all arcs longer than 1/2. Its endpoints are whichever halves of
/// t1 and t2 are periodic, so it is (t1/2 + 1/2 -> t2/2) or (t1/2 -> t2/2 + 1/2).
DirectedArc critical_arc(const OrbitPortrait& portrait);

/// Builds the valid portrait whose characteristic arc is (theta1 -> theta2).
/// Returns nullopt when the pair is not the characteristic arc of any
/// portrait. Throws std::invalid_argument when the angles are not periodic
/// of equal period, or when the arc is not the shorter of the two.
std::optional<OrbitPortrait> realize_portrait(const Angle& theta1, const Angle& theta2);

/// Classes reordered to start at the one holding the characteristic arc
/// (or the smallest angle, for valence 1) and follow the doubling orbit.
OrbitPortrait canonical_form(const OrbitPortrait& portrait);

/// s/v where the first return map advances every angle of A_1 by s places in
/// circular order. Throws std::invalid_argument unless the portrait is a
/// satellite portrait.
Rational rotation_number(const OrbitPortrait& portrait);

OrbitPortrait rotate_portrait(const OrbitPortrait& portrait, const Angle& theta);

/// All valid portraits of valence >= 2 with ray period in [2, max_ray_period],
/// found by realizing every shorter-arc pair of equal-period angles.
std::vector<OrbitPortrait> enumerate_portraits(int max_ray_period);

struct RigidityCounterexample {
  OrbitPortrait from;
  OrbitPortrait to;
  Angle rotation;
};

struct RigidityReport {
  int max_ray_period = 0;
  std::size_t portraits = 0;
  std::size_t pairs_checked = 0;
  std::size_t rotations_tested = 0;
  std::vector<RigidityCounterexample> counterexamples;
};

/// Checks that no rotation carries one valid portrait onto a different one
/// (or onto itself by a nonzero angle).
RigidityReport rigidity_sweep(int max_ray_period);
RigidityReport rigidity_sweep(const std::vector<OrbitPortrait>& portraits, int max_ray_period);

}  // namespace lamina

#endif  // LAMINA_PORTRAIT_HPP_
