#ifndef LAMINA_ATLAS_HPP_
#define LAMINA_ATLAS_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamina/angle.hpp"
#include "lamina/portrait.hpp"

namespace lamina {

enum class ComponentKind { main_cardioid, primitive, satellite };

std::string to_string(ComponentKind kind);
ComponentKind parse_component_kind(const std::string& text);

struct AddressEntry {
  int period = 1;
  /// Label on the arrow into this entry: the rotation number for satellites,
  /// otherwise the sub-wake angle p/q of the previous entry when q > 2.
  std::optional<Rational> label;

  friend bool operator==(const AddressEntry&, const AddressEntry&) = default;
};

using LabelledAddress = std::vector<AddressEntry>;

/// "1 -(1/2)-> 2 -> 3"
std::string to_string(const LabelledAddress& address);
std::vector<int> periods_of(const LabelledAddress& address);

/// A hyperbolic component identified by the two parameter rays landing at
/// its root. The main cardioid has period 1 and both root angles equal to 0.
struct HyperbolicComponent {
  int period = 1;
  Angle root_lo;
  Angle root_hi;
  ComponentKind kind = ComponentKind::main_cardioid;
  std::optional<Rational> rotation;
  LabelledAddress address;

  bool is_main_cardioid() const { return kind == ComponentKind::main_cardioid; }
  std::string name() const;

  friend bool operator==(const HyperbolicComponent&, const HyperbolicComponent&) = default;
};

/// Internal address of a periodic angle, read off its kneading sequence.
/// Throws std::invalid_argument for 0 or non-periodic angles.
std::vector<int> internal_address(const Angle& theta);

/// Lavaurs pairing of periodic angles. Entry n holds the root pairs of
/// period n (entries 0 and 1 are empty), each pair ordered (lo, hi) with
/// lo < hi, sorted by lo.
std::vector<std::vector<std::pair<Angle, Angle>>> pair_root_angles(int max_period);

/// Counterclockwise arc between the root angles.
DirectedArc wake(const HyperbolicComponent& component);

/// True iff both root angles of `inner` lie strictly inside the wake of
/// `outer`. The main cardioid is visible from nothing and sees nothing.
bool visible(const HyperbolicComponent& outer, const HyperbolicComponent& inner);

class Atlas {
 public:
  Atlas() = default;
  Atlas(int max_period, std::vector<HyperbolicComponent> components);

  int max_period() const { return max_period_; }
  const std::vector<HyperbolicComponent>& components() const { return components_; }
  const HyperbolicComponent& main_cardioid() const { return components_.front(); }
  /// Components per period, index = period.
  std::vector<std::size_t> counts_by_period() const;

  /// Component with theta as one of its root angles.
  const HyperbolicComponent* query_by_angle(const Angle& theta) const;
  /// Innermost component whose wake strictly contains theta, else the main
  /// cardioid.
  const HyperbolicComponent& query_enclosing(const Angle& theta) const;
  /// All components whose unlabelled internal address equals `periods`.
  std::vector<const HyperbolicComponent*> query_by_address(const std::vector<int>& periods) const;
  const HyperbolicComponent* query_by_labelled_address(const LabelledAddress& address) const;

  /// Components crossed by the combinatorial arc, one per internal-address
  /// entry, starting with the main cardioid and ending with `component`.
  /// Throws std::out_of_range when an entry's component is not in the atlas.
  std::vector<const HyperbolicComponent*> combinatorial_arc(const HyperbolicComponent& component) const;

  /// Realized root portrait (valence 1 portrait {{0}} for the main cardioid).
  const OrbitPortrait& root_portrait(const HyperbolicComponent& component) const;

  friend bool operator==(const Atlas& a, const Atlas& b) {
    return a.max_period_ == b.max_period_ && a.components_ == b.components_;
  }

 private:
  int max_period_ = 0;
  std::vector<HyperbolicComponent> components_;
  std::map<Angle, std::size_t> by_root_;
  std::vector<OrbitPortrait> portraits_;
};

/// Throws std::invalid_argument unless max_period >= 1.
Atlas atlas_build(int max_period);

/// Root pair of the satellite of `parent` with the given rotation number,
/// obtained by tuning the corresponding satellite of the main cardioid.
std::pair<Angle, Angle> satellite_root_pair(const HyperbolicComponent& parent, const Rational& rotation);

/// p/q of the sub-wake of `parent` holding `inner` (which must be visible
/// from `parent`, or be the main cardioid's descendant when parent is the
/// main cardioid). Throws std::invalid_argument when no sub-wake with
/// q <= 2 * inner.period + 2 holds it.
Rational subwake_angle(const HyperbolicComponent& parent, const HyperbolicComponent& inner);

/// Internal address along the combinatorial arc. Arrows into satellite
/// entries carry the rotation number of the satellite; other arrows carry
/// the sub-wake angle p/q of the previous entry unless q = 2, where the
/// label is forced.
LabelledAddress labelled_internal_address(const HyperbolicComponent& component, const Atlas& atlas);

inline constexpr int kAtlasFormatVersion = 1;

/// Newline-delimited JSON: a header record, then one record per component.
void atlas_write(const Atlas& atlas, std::ostream& out);
Atlas atlas_read(std::istream& in);
void atlas_save(const Atlas& atlas, const std::filesystem::path& path);
Atlas atlas_load(const std::filesystem::path& path);

}  // namespace lamina

#endif  // LAMINA_ATLAS_HPP_
