#ifndef LAMINA_SOLENOID_HPP_
#define LAMINA_SOLENOID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lamina/angle.hpp"

namespace lamina {

class Atlas;

/// A point of the dyadic solenoid truncated to `depth` backward steps: the
/// coordinate t_0 = base and bits b_1..b_d with t_k = (t_{k-1} + b_k) / 2.
/// b_1 is the first backward step and the least significant counter digit.
class SolenoidPoint {
 public:
  SolenoidPoint() = default;
  /// Throws std::invalid_argument if a tail entry is not 0 or 1.
  SolenoidPoint(Angle base, std::vector<std::uint8_t> tail);

  /// The identity element at the given depth.
  static SolenoidPoint unit(std::size_t depth);
  /// Re-encodes a coordinate list t_0..t_d. Throws std::invalid_argument if
  /// some t_k does not double to t_{k-1}.
  static SolenoidPoint from_coordinates(const std::vector<Angle>& coordinates);

  const Angle& base() const { return base_; }
  const std::vector<std::uint8_t>& tail() const { return tail_; }
  std::size_t depth() const { return tail_.size(); }
  /// Tail as a string of '0'/'1', b_1 first.
  std::string tail_string() const;

  /// Drops coordinates past `depth`.
  SolenoidPoint truncated(std::size_t depth) const;

  friend bool operator==(const SolenoidPoint&, const SolenoidPoint&) = default;

 private:
  Angle base_;
  std::vector<std::uint8_t> tail_;
};

std::string to_string(const SolenoidPoint& p);

/// t_0..t_d.
std::vector<Angle> coordinates(const SolenoidPoint& p);

/// Componentwise addition mod 1. Throws std::invalid_argument on depth
/// mismatch.
SolenoidPoint group_mul(const SolenoidPoint& x, const SolenoidPoint& y);
SolenoidPoint group_inverse(const SolenoidPoint& x);

/// Every coordinate negated.
SolenoidPoint inversion(const SolenoidPoint& x);

/// The one-parameter subgroup t -> (t, t/2, t/4, ...) mod 1.
SolenoidPoint rho(const Rational& t, std::size_t depth);

/// Translation by rho(1): binary increment of the tail, carry past depth
/// discarded, base unchanged.
SolenoidPoint adding_machine(const SolenoidPoint& x);

/// Natural extension of doubling: prepends the doubled base, depth kept by
/// dropping the deepest bit.
SolenoidPoint shift(const SolenoidPoint& x);
/// Inverse of shift; loses one level of depth. Throws std::invalid_argument
/// at depth 0.
SolenoidPoint unshift(const SolenoidPoint& x);

/// The invariant lift of a periodic angle: every coordinate lies on the
/// angle's cycle. Throws std::invalid_argument for even denominators.
SolenoidPoint periodic_point(const Angle& theta, std::size_t depth);

/// x -> tau * shift^n(r(x)), r the identity or the inversion.
struct AffineSolenoidMap {
  SolenoidPoint translation;
  int shift_power = 0;
  bool invert = false;

  static AffineSolenoidMap identity(std::size_t depth);

  friend bool operator==(const AffineSolenoidMap&, const AffineSolenoidMap&) = default;
};

std::string to_string(const AffineSolenoidMap& m);

/// Negative shift powers consume one level of depth each; the translation is
/// truncated to the resulting depth. Throws std::invalid_argument when the
/// input is too shallow.
SolenoidPoint apply_affine(const AffineSolenoidMap& m, const SolenoidPoint& x);

/// Normal form of first ∘ second. The translation is evaluated as
/// first(second(unit)).
AffineSolenoidMap compose_affine(const AffineSolenoidMap& first, const AffineSolenoidMap& second);

/// Probe points: periodic points of period <= 4, rho(1/3), rho(1/5).
std::vector<SolenoidPoint> affine_probe_set(std::size_t depth);

/// Functional equality on the probe set, compared after truncating both
/// images to a common depth.
bool affine_equal(const AffineSolenoidMap& a, const AffineSolenoidMap& b, std::size_t depth);

/// Relations between shift and inversion observed on the probe set.
struct AffineRelations {
  std::size_t depth = 0;
  bool inversion_is_involution = false;
  bool shift_commutes_with_inversion = false;
  /// shift ∘ r == r ∘ shift^{-1}, the dihedral relation.
  bool dihedral_relation_holds = false;
};

AffineRelations observe_affine_relations(std::size_t depth);

/// True iff some root portrait in the atlas holds both angles in one class,
/// i.e. the two rays land together for some parameter. Throws
/// std::invalid_argument for non-periodic angles or periods beyond the atlas.
bool same_leaf_periodic(const Angle& theta1, const Angle& theta2, const Atlas& atlas);

}  // namespace lamina

#endif  // LAMINA_SOLENOID_HPP_
