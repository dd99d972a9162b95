#ifndef LAMINA_SERIALIZE_HPP_
#define LAMINA_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lamina/angle.hpp"
#include "lamina/atlas.hpp"
#include "lamina/leaf_invariants.hpp"
#include "lamina/portrait.hpp"
#include "lamina/solenoid.hpp"

// JSON record forms shared by the atlas file, bundle reports and the CLI.
// Field order is fixed; rationals are always exact "num/den" strings.

namespace lamina {

using Json = nlohmann::ordered_json;

inline constexpr int kRecordSchemaVersion = 1;

/// "p/q" with q > 0; a bare integer is accepted.
Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& r);

Json angle_to_json(const Angle& a);
Json arc_to_json(const DirectedArc& arc);
Json orbit_to_json(const Angle& theta, const Orbit& orb);

/// classes, point_period, valence, ray_period, kind, rotation (or null),
/// characteristic/critical arcs when the valence allows.
Json portrait_to_json(const OrbitPortrait& p);
OrbitPortrait portrait_from_json(const Json& j);

Json address_to_json(const LabelledAddress& address);
LabelledAddress address_from_json(const Json& j);

Json component_to_json(const HyperbolicComponent& c);
HyperbolicComponent component_from_json(const Json& j);

Json solenoid_to_json(const SolenoidPoint& p);
SolenoidPoint solenoid_from_json(const Json& j);
Json affine_to_json(const AffineSolenoidMap& m);
AffineSolenoidMap affine_from_json(const Json& j);

Json record_to_json(const LeafCycleRecord& r);
Json bundle_to_json(const InvariantBundle& b);
Json discrepancy_to_json(const DiscrepancyReport& r);

}  // namespace lamina

#endif  // LAMINA_SERIALIZE_HPP_
