#include "lamina/serialize.hpp"

#include <stdexcept>

namespace lamina {

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto integer = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational");
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational: " + std::string(s));
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(integer(text));
  BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(integer(text.substr(0, slash)), den);
}

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Json angle_to_json(const Angle& a) { return a.str(); }

Json arc_to_json(const DirectedArc& arc) {
  Json j;
  j["start"] = arc.start.str();
  j["end"] = arc.end.str();
  j["length"] = rational_string(arc.length());
  return j;
}

Json orbit_to_json(const Angle& theta, const Orbit& orb) {
  Json j;
  j["angle"] = theta.str();
  j["prefix"] = Json::array();
  for (const auto& a : orb.prefix) j["prefix"].push_back(a.str());
  j["cycle"] = Json::array();
  for (const auto& a : orb.cycle) j["cycle"].push_back(a.str());
  j["preperiod"] = orb.preperiod();
  j["period"] = orb.period();
  return j;
}

Json portrait_to_json(const OrbitPortrait& p) {
  Json j;
  j["classes"] = Json::array();
  for (const auto& cls : p.classes()) {
    Json c = Json::array();
    for (const auto& a : cls) c.push_back(a.str());
    j["classes"].push_back(std::move(c));
  }
  j["point_period"] = p.point_period();
  j["valence"] = p.valence();
  j["ray_period"] = p.ray_period();
  const auto kind = p.kind();
  j["kind"] = kind ? Json(to_string(*kind)) : Json(nullptr);
  j["rotation"] = kind == PortraitKind::satellite ? Json(rational_string(rotation_number(p))) : Json(nullptr);
  if (p.valence() >= 2 && validate_portrait(p).empty()) {
    j["characteristic_arc"] = arc_to_json(characteristic_arc(p));
    j["critical_arc"] = arc_to_json(critical_arc(p));
  }
  return j;
}

OrbitPortrait portrait_from_json(const Json& j) {
  std::vector<std::vector<Angle>> classes;
  for (const auto& c : j.at("classes")) {
    std::vector<Angle> cls;
    for (const auto& a : c) cls.push_back(Angle::parse(a.get<std::string>()));
    classes.push_back(std::move(cls));
  }
  return OrbitPortrait(std::move(classes));
}

Json address_to_json(const LabelledAddress& address) {
  Json out = Json::array();
  for (const auto& e : address) {
    Json j;
    j["period"] = e.period;
    j["label"] = e.label ? Json(rational_string(*e.label)) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

LabelledAddress address_from_json(const Json& j) {
  LabelledAddress out;
  for (const auto& e : j) {
    AddressEntry entry{e.at("period").get<int>(), std::nullopt};
    if (!e.at("label").is_null()) entry.label = parse_rational(e.at("label").get<std::string>());
    out.push_back(std::move(entry));
  }
  return out;
}

Json component_to_json(const HyperbolicComponent& c) {
  Json j;
  j["period"] = c.period;
  j["root_pair"] = Json::array({c.root_lo.str(), c.root_hi.str()});
  j["kind"] = to_string(c.kind);
  j["rotation"] = c.rotation ? Json(rational_string(*c.rotation)) : Json(nullptr);
  j["address"] = address_to_json(c.address);
  return j;
}

HyperbolicComponent component_from_json(const Json& j) {
  HyperbolicComponent c;
  c.period = j.at("period").get<int>();
  const auto& pair = j.at("root_pair");
  if (pair.size() != 2) throw std::runtime_error("root_pair must hold two angles");
  c.root_lo = Angle::parse(pair[0].get<std::string>());
  c.root_hi = Angle::parse(pair[1].get<std::string>());
  c.kind = parse_component_kind(j.at("kind").get<std::string>());
  if (!j.at("rotation").is_null()) c.rotation = parse_rational(j.at("rotation").get<std::string>());
  c.address = address_from_json(j.at("address"));
  return c;
}

Json solenoid_to_json(const SolenoidPoint& p) {
  Json j;
  j["base"] = p.base().str();
  j["tail"] = p.tail_string();
  j["depth"] = p.depth();
  return j;
}

SolenoidPoint solenoid_from_json(const Json& j) {
  const auto tail_text = j.at("tail").get<std::string>();
  std::vector<std::uint8_t> tail;
  for (char ch : tail_text) {
    if (ch != '0' && ch != '1') throw std::runtime_error("tail must be a bit string");
    tail.push_back(ch == '1' ? 1 : 0);
  }
  if (j.contains("depth") && j.at("depth").get<std::size_t>() != tail.size()) {
    throw std::runtime_error("depth does not match tail length");
  }
  return SolenoidPoint(Angle::parse(j.at("base").get<std::string>()), std::move(tail));
}

Json affine_to_json(const AffineSolenoidMap& m) {
  Json j;
  j["tau"] = solenoid_to_json(m.translation);
  j["n"] = m.shift_power;
  j["invert"] = m.invert;
  return j;
}

AffineSolenoidMap affine_from_json(const Json& j) {
  return {solenoid_from_json(j.at("tau")), j.at("n").get<int>(), j.at("invert").get<bool>()};
}

Json record_to_json(const LeafCycleRecord& r) {
  Json j;
  j["point_period"] = r.point_period;
  j["leaf_count"] = r.leaf_count;
  j["unbounded_count"] = r.unbounded_count;
  j["source"] = to_string(r.source);
  return j;
}

Json bundle_to_json(const InvariantBundle& b) {
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["period"] = b.period;
  j["kind"] = to_string(b.kind);
  j["root_portrait"] = Json::array();
  for (const auto& cls : b.root_portrait.classes()) {
    Json c = Json::array();
    for (const auto& a : cls) c.push_back(a.str());
    j["root_portrait"].push_back(std::move(c));
  }
  j["address"] = address_to_json(b.labelled_address);
  j["lu_profile"] = Json::array();
  for (const auto& r : b.lu_profile) j["lu_profile"].push_back(record_to_json(r));
  j["irregular_points"] = b.irregular_points;
  return j;
}

Json discrepancy_to_json(const DiscrepancyReport& r) {
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["component"] = r.component;
  j["by_address"] = Json::array();
  for (const auto& x : r.by_address) j["by_address"].push_back(record_to_json(x));
  j["by_portraits"] = Json::array();
  for (const auto& x : r.by_portraits) j["by_portraits"].push_back(record_to_json(x));
  j["discrepancies"] = Json::array();
  for (const auto& d : r.discrepancies) {
    Json e;
    e["step"] = d.step;
    e["field"] = d.field;
    e["address_value"] = d.address_value;
    e["portrait_value"] = d.portrait_value;
    e["step_kind"] = to_string(d.step_kind);
    e["previous_period"] = d.previous_period;
    e["step_period"] = d.step_period;
    j["discrepancies"].push_back(std::move(e));
  }
  return j;
}

}  // namespace lamina
