#include "lamina/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lamina/serialize.hpp"

namespace lamina {

using nlohmann::ordered_json;

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::main_cardioid: return "main_cardioid";
    case ComponentKind::primitive: return "primitive";
    case ComponentKind::satellite: return "satellite";
  }
  return "unknown";
}

ComponentKind parse_component_kind(const std::string& text) {
  if (text == "main_cardioid") return ComponentKind::main_cardioid;
  if (text == "primitive") return ComponentKind::primitive;
  if (text == "satellite") return ComponentKind::satellite;
  throw std::invalid_argument("unknown component kind: " + text);
}

std::string to_string(const LabelledAddress& address) {
  std::string out;
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i) out += address[i].label ? " -(" + address[i].label->str() + ")-> " : " -> ";
    out += std::to_string(address[i].period);
  }
  return out;
}

std::vector<int> periods_of(const LabelledAddress& address) {
  std::vector<int> out;
  for (const auto& e : address) out.push_back(e.period);
  return out;
}

std::string HyperbolicComponent::name() const {
  if (is_main_cardioid()) return "main cardioid";
  return "(" + root_lo.str() + ", " + root_hi.str() + ")";
}

std::vector<int> internal_address(const Angle& theta) {
  if (theta.is_zero()) throw std::invalid_argument("angle 0 is the main cardioid; its address is [1]");
  if (!is_periodic(theta)) throw std::invalid_argument("internal address needs a periodic angle, got " + theta.str());
  const KneadingSequence nu = kneading_sequence(theta);
  const auto n = nu.period;
  auto same = [](KneadingSymbol a, KneadingSymbol b) { return a == b && a != KneadingSymbol::star; };
  std::vector<int> address{1};
  std::size_t r = 1;
  while (r < n) {
    std::size_t k = r + 1;
    while (same(nu.at(k), nu.at(k - r))) ++k;
    address.push_back(static_cast<int>(k));
    r = k;
  }
  return address;
}

std::vector<std::vector<std::pair<Angle, Angle>>> pair_root_angles(int max_period) {
  if (max_period < 1) throw std::invalid_argument("max period must be >= 1");
  std::vector<std::vector<std::pair<Angle, Angle>>> pairs(static_cast<std::size_t>(max_period) + 1);
  std::vector<Chord> placed;
  for (int n = 2; n <= max_period; ++n) {
    std::vector<Angle> open = enumerate_periodic_angles(n);
    auto& here = pairs[static_cast<std::size_t>(n)];
    while (!open.empty()) {
      // Smallest unpaired angle goes to the nearest later angle whose chord
      // crosses nothing placed so far.
      bool matched = false;
      for (std::size_t j = 1; j < open.size(); ++j) {
        const Chord candidate{open.front(), open[j]};
        const bool crosses = std::any_of(placed.begin(), placed.end(),
                                         [&](const Chord& c) { return chords_cross(c, candidate); });
        if (crosses) continue;
        placed.push_back(candidate);
        here.push_back(candidate);
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(j));
        open.erase(open.begin());
        matched = true;
        break;
      }
      if (!matched) throw std::logic_error("no admissible partner for " + open.front().str());
    }
    std::sort(here.begin(), here.end());
  }
  return pairs;
}

DirectedArc wake(const HyperbolicComponent& component) {
  if (component.is_main_cardioid()) throw std::invalid_argument("the main cardioid has no wake");
  return {component.root_lo, component.root_hi};
}

bool visible(const HyperbolicComponent& outer, const HyperbolicComponent& inner) {
  if (outer.is_main_cardioid() || inner.is_main_cardioid()) return false;
  const DirectedArc w = wake(outer);
  return w.contains_open(inner.root_lo) && w.contains_open(inner.root_hi);
}

Atlas::Atlas(int max_period, std::vector<HyperbolicComponent> components)
    : max_period_(max_period), components_(std::move(components)) {
  if (components_.empty() || !components_.front().is_main_cardioid()) {
    throw std::invalid_argument("atlas must start with the main cardioid");
  }
  portraits_.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.is_main_cardioid()) {
      if (i != 0) throw std::invalid_argument("atlas holds more than one main cardioid");
      portraits_.push_back(OrbitPortrait({{Angle()}}));
      by_root_.emplace(Angle(), i);
      continue;
    }
    auto p = realize_portrait(c.root_lo, c.root_hi);
    if (!p) throw std::invalid_argument("root pair " + c.name() + " does not realize a portrait");
    portraits_.push_back(canonical_form(*p));
    by_root_.emplace(c.root_lo, i);
    by_root_.emplace(c.root_hi, i);
  }
}

std::vector<std::size_t> Atlas::counts_by_period() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_period_) + 1, 0);
  for (const auto& c : components_) {
    if (c.period >= 1 && c.period <= max_period_) ++counts[static_cast<std::size_t>(c.period)];
  }
  return counts;
}

const HyperbolicComponent* Atlas::query_by_angle(const Angle& theta) const {
  auto it = by_root_.find(theta);
  return it == by_root_.end() ? nullptr : &components_[it->second];
}

const HyperbolicComponent& Atlas::query_enclosing(const Angle& theta) const {
  const HyperbolicComponent* best = &components_.front();
  Rational best_width(2);
  for (const auto& c : components_) {
    if (c.is_main_cardioid()) continue;
    const DirectedArc w = wake(c);
    if (!w.contains_open(theta)) continue;
    const Rational width = w.length();
    if (width < best_width) {
      best = &c;
      best_width = width;
    }
  }
  return *best;
}

std::vector<const HyperbolicComponent*> Atlas::query_by_address(const std::vector<int>& periods) const {
  std::vector<const HyperbolicComponent*> out;
  for (const auto& c : components_) {
    if (periods_of(c.address) == periods) out.push_back(&c);
  }
  return out;
}

const HyperbolicComponent* Atlas::query_by_labelled_address(const LabelledAddress& address) const {
  for (const auto& c : components_) {
    if (c.address == address) return &c;
  }
  return nullptr;
}

std::vector<const HyperbolicComponent*> Atlas::combinatorial_arc(const HyperbolicComponent& component) const {
  std::vector<const HyperbolicComponent*> arc{&components_.front()};
  if (component.is_main_cardioid()) return arc;
  const auto periods = internal_address(component.root_lo);
  for (std::size_t j = 1; j < periods.size(); ++j) {
    const int period = periods[j];
    if (j + 1 == periods.size()) {
      if (period != component.period) {
        throw std::logic_error("internal address of " + component.name() + " does not end at its period");
      }
      const auto* self = query_by_angle(component.root_lo);
      if (self == nullptr) throw std::out_of_range("component " + component.name() + " is not in the atlas");
      arc.push_back(self);
      break;
    }
    // The entry is the outermost period-`period` component whose wake holds
    // the target, inside the previous entry's wake.
    const HyperbolicComponent* pick = nullptr;
    Rational pick_width;
    for (const auto& c : components_) {
      if (c.period != period || !visible(c, component)) continue;
      if (!arc.back()->is_main_cardioid() && !visible(*arc.back(), c)) continue;
      const Rational width = wake(c).length();
      if (pick == nullptr || width > pick_width) {
        pick = &c;
        pick_width = width;
      }
    }
    if (pick == nullptr) {
      throw std::out_of_range("no period-" + std::to_string(period) + " component on the arc of " +
                              component.name() + " in this atlas");
    }
    arc.push_back(pick);
  }
  return arc;
}

const OrbitPortrait& Atlas::root_portrait(const HyperbolicComponent& component) const {
  const auto* c = query_by_angle(component.root_lo);
  if (c == nullptr) throw std::out_of_range("component " + component.name() + " is not in the atlas");
  return portraits_[static_cast<std::size_t>(c - components_.data())];
}

namespace {

// Binary period block of a periodic angle: its numerator over 2^m - 1.
BigInt block_of(const Angle& a, int m) { return a.num() * (((BigInt(1) << m) - 1) / a.den()); }

// Replaces every 0 digit of the period-q angle by `zero` and every 1 digit by
// `one`, both m-bit blocks.
Angle tune(const Angle& a, int q, const BigInt& zero, const BigInt& one, int m) {
  const BigInt digits = block_of(a, q);
  BigInt out = 0;
  for (int i = q - 1; i >= 0; --i) {
    out <<= m;
    out += bit_test(digits, static_cast<unsigned>(i)) ? one : zero;
  }
  return Angle(out, (BigInt(1) << (q * m)) - 1);
}

}  // namespace

std::pair<Angle, Angle> satellite_root_pair(const HyperbolicComponent& parent, const Rational& rotation) {
  const auto p = static_cast<long long>(boost::multiprecision::numerator(rotation));
  const auto q = static_cast<long long>(boost::multiprecision::denominator(rotation));
  if (p <= 0 || p >= q) throw std::invalid_argument("rotation number must lie strictly between 0 and 1");
  // The period-q cycle with rotation number p/q: sorted t_0 < ... < t_{q-1},
  // doubling sends t_i to t_{i+p}, and t_i >= 1/2 exactly for i >= q - p.
  BigInt digits = 0;
  for (long long j = 0; j < q; ++j) {
    digits <<= 1;
    if ((j * p) % q >= q - p) digits += 1;
  }
  const Angle first(digits, (BigInt(1) << q) - 1);
  std::vector<Angle> cycle = orbit(first).cycle;
  const DirectedArc ch = characteristic_arc(OrbitPortrait({cycle}));
  if (parent.is_main_cardioid()) return {ch.start, ch.end};
  const int m = parent.period;
  const BigInt zero = block_of(parent.root_lo, m);
  const BigInt one = block_of(parent.root_hi, m);
  const int qi = static_cast<int>(q);
  return {tune(ch.start, qi, zero, one, m), tune(ch.end, qi, zero, one, m)};
}

Rational subwake_angle(const HyperbolicComponent& parent, const HyperbolicComponent& inner) {
  const long long limit = 2LL * inner.period + 2;
  for (long long q = 2; q <= limit; ++q) {
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational angle(p, q);
      const auto [lo, hi] = satellite_root_pair(parent, angle);
      const DirectedArc w{lo, hi};
      if (w.contains_closed(inner.root_lo) && w.contains_closed(inner.root_hi)) return angle;
    }
  }
  throw std::invalid_argument(inner.name() + " lies in no sub-wake of " + parent.name());
}

LabelledAddress labelled_internal_address(const HyperbolicComponent& component, const Atlas& atlas) {
  LabelledAddress out;
  const auto arc = atlas.combinatorial_arc(component);
  for (std::size_t j = 0; j < arc.size(); ++j) {
    const auto* step = arc[j];
    AddressEntry entry{step->period, std::nullopt};
    if (step->kind == ComponentKind::satellite) {
      entry.label = step->rotation;
    } else if (j > 0) {
      const Rational angle = subwake_angle(*arc[j - 1], *step);
      if (boost::multiprecision::denominator(angle) > 2) entry.label = angle;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Atlas atlas_build(int max_period) {
  if (max_period < 1) throw std::invalid_argument("max period must be >= 1");
  std::vector<HyperbolicComponent> components;
  components.push_back({1, Angle(), Angle(), ComponentKind::main_cardioid, std::nullopt, {{1, std::nullopt}}});
  const auto pairs = pair_root_angles(max_period);
  for (int n = 2; n <= max_period; ++n) {
    for (const auto& [lo, hi] : pairs[static_cast<std::size_t>(n)]) {
      const auto portrait = realize_portrait(lo, hi);
      if (!portrait) throw std::logic_error("Lavaurs pair (" + lo.str() + ", " + hi.str() + ") is not realizable");
      HyperbolicComponent c{n, lo, hi, ComponentKind::primitive, std::nullopt, {}};
      if (portrait->kind() == PortraitKind::satellite) {
        c.kind = ComponentKind::satellite;
        c.rotation = rotation_number(*portrait);
      }
      components.push_back(std::move(c));
    }
  }
  const Atlas skeleton(max_period, components);
  for (auto& c : components) {
    if (!c.is_main_cardioid()) c.address = labelled_internal_address(c, skeleton);
  }
  return Atlas(max_period, std::move(components));
}

void atlas_write(const Atlas& atlas, std::ostream& out) {
  ordered_json header;
  header["format"] = "lamina-atlas";
  header["version"] = kAtlasFormatVersion;
  header["max_period"] = atlas.max_period();
  header["components"] = atlas.components().size();
  out << header.dump() << '\n';
  for (const auto& c : atlas.components()) out << component_to_json(c).dump() << '\n';
}

Atlas atlas_read(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw std::runtime_error("atlas file is empty");
  int max_period = 0;
  std::optional<std::size_t> declared;
  std::vector<HyperbolicComponent> components;
  try {
    const auto header = ordered_json::parse(line);
    if (!header.is_object() || header.value("format", "") != "lamina-atlas") {
      throw std::runtime_error("not an atlas file");
    }
    if (header.at("version").get<int>() != kAtlasFormatVersion) {
      throw std::runtime_error("unsupported atlas version " + header.at("version").dump());
    }
    max_period = header.at("max_period").get<int>();
    if (header.contains("components")) declared = header["components"].get<std::size_t>();
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      components.push_back(component_from_json(ordered_json::parse(line)));
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error("atlas line " + std::to_string(line_no) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("atlas line " + std::to_string(line_no) + ": " + e.what());
  }
  if (declared && *declared != components.size()) throw std::runtime_error("atlas file is truncated");
  try {
    return Atlas(max_period, std::move(components));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("inconsistent atlas: ") + e.what());
  }
}

void atlas_save(const Atlas& atlas, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  atlas_write(atlas, out);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Atlas atlas_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return atlas_read(in);
}

}  // namespace lamina
