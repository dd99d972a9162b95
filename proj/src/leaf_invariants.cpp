#include "lamina/leaf_invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lamina {

namespace {

std::string profile_string(const std::vector<LeafCycleRecord>& profile) {
  std::string out = "[";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(profile[i].leaf_count) + " leaves, " + std::to_string(profile[i].unbounded_count) + ")";
  }
  return out + "]";
}

PortraitKind portrait_kind_of(const OrbitPortrait& portrait) {
  auto kind = portrait.kind();
  if (!kind) throw std::logic_error("portrait " + to_string(portrait) + " has no consistent kind");
  return *kind;
}

}  // namespace

std::string to_string(ProfileSource source) {
  return source == ProfileSource::address_rule ? "address_rule" : "portrait_rule";
}

int unbounded_count(const OrbitPortrait& portrait, bool is_dynamic_root, PortraitKind kind) {
  const int v = portrait.valence();
  if (!is_dynamic_root) return v;
  switch (kind) {
    case PortraitKind::satellite: return 2 * v;
    case PortraitKind::primitive: return 3;
    case PortraitKind::trivial: return v;
  }
  return v;
}

std::vector<LeafCycleRecord> lu_profile_from_address(const std::vector<int>& periods) {
  if (periods.empty() || periods.front() != 1) throw std::invalid_argument("internal address must start at 1");
  std::vector<LeafCycleRecord> out;
  const std::size_t k = periods.size() - 1;
  for (std::size_t j = 1; j <= k; ++j) {
    const int prev = periods[j - 1];
    const int here = periods[j];
    if (here <= prev) throw std::invalid_argument("internal address must be strictly increasing");
    const bool divides = here % prev == 0;
    const bool last = j == k;
    int unbounded = 0;
    if (divides) {
      unbounded = last ? 2 * here / prev : here / prev;
    } else {
      unbounded = last ? 3 : 2;
    }
    out.push_back({here, here, unbounded, ProfileSource::address_rule});
  }
  return out;
}

std::vector<LeafCycleRecord> lu_profile_from_address(const LabelledAddress& address) {
  return lu_profile_from_address(periods_of(address));
}

std::vector<LeafCycleRecord> lu_profile_from_portraits(const HyperbolicComponent& component, const Atlas& atlas) {
  const auto arc = atlas.combinatorial_arc(component);
  std::vector<LeafCycleRecord> out;
  for (std::size_t j = 1; j < arc.size(); ++j) {
    const OrbitPortrait& p = atlas.root_portrait(*arc[j]);
    const int unbounded = unbounded_count(p, j + 1 == arc.size(), portrait_kind_of(p));
    out.push_back({p.point_period(), p.point_period(), unbounded, ProfileSource::portrait_rule});
  }
  return out;
}

DiscrepancyReport lu_discrepancy(const HyperbolicComponent& component, const Atlas& atlas) {
  DiscrepancyReport report;
  report.component = component.name();
  const auto arc = atlas.combinatorial_arc(component);
  std::vector<int> periods;
  for (const auto* c : arc) periods.push_back(c->period);
  report.by_address = lu_profile_from_address(periods);
  report.by_portraits = lu_profile_from_portraits(component, atlas);
  if (report.by_address.size() != report.by_portraits.size()) {
    report.discrepancies.push_back({0, "length", static_cast<int>(report.by_address.size()),
                                    static_cast<int>(report.by_portraits.size()), component.kind, 0, 0});
    return report;
  }
  for (std::size_t i = 0; i < report.by_address.size(); ++i) {
    const auto& a = report.by_address[i];
    const auto& p = report.by_portraits[i];
    const ProfileDiscrepancy base{i + 1, "", 0, 0, arc[i + 1]->kind, periods[i], periods[i + 1]};
    if (a.leaf_count != p.leaf_count) {
      auto d = base;
      d.field = "leaf_count";
      d.address_value = a.leaf_count;
      d.portrait_value = p.leaf_count;
      report.discrepancies.push_back(d);
    }
    if (a.unbounded_count != p.unbounded_count) {
      auto d = base;
      d.field = "unbounded_count";
      d.address_value = a.unbounded_count;
      d.portrait_value = p.unbounded_count;
      report.discrepancies.push_back(d);
    }
  }
  return report;
}

BoundReport nonperiodic_bound_check(const Atlas& atlas, const HyperbolicComponent& component, int max_period) {
  if (max_period > atlas.max_period()) {
    throw std::invalid_argument("max period " + std::to_string(max_period) + " exceeds the atlas");
  }
  BoundReport report;
  report.components_checked = 1;

  std::unordered_set<Angle, AngleHash> chain;
  for (const auto* step : atlas.combinatorial_arc(component)) {
    for (const auto& a : atlas.root_portrait(*step).all_angles()) chain.insert(a);
  }

  // Valence of each angle in the dynamical plane of this component's center.
  std::unordered_map<Angle, int, AngleHash> valence;
  for (const auto& c : atlas.components()) {
    if (c.is_main_cardioid() || c.period > max_period) continue;
    if (!(c == component) && !visible(c, component)) continue;
    const auto& p = atlas.root_portrait(c);
    for (const auto& cls : p.classes()) {
      for (const auto& a : cls) {
        auto& v = valence[a];
        v = std::max(v, static_cast<int>(cls.size()));
      }
    }
  }

  for (int n = 1; n <= max_period; ++n) {
    for (const auto& a : enumerate_periodic_angles(n)) {
      if (chain.contains(a)) continue;
      ++report.angles_checked;
      auto it = valence.find(a);
      const int v = it == valence.end() ? 1 : it->second;
      if (v > 2) report.violations.push_back({component.name(), a, v});
    }
  }
  return report;
}

BoundReport nonperiodic_bound_check(const Atlas& atlas, int max_period) {
  BoundReport total;
  for (const auto& c : atlas.components()) {
    if (c.period > max_period) continue;
    auto one = nonperiodic_bound_check(atlas, c, max_period);
    total.components_checked += one.components_checked;
    total.angles_checked += one.angles_checked;
    total.violations.insert(total.violations.end(), one.violations.begin(), one.violations.end());
  }
  return total;
}

InvariantBundle invariant_bundle(const HyperbolicComponent& component, const Atlas& atlas) {
  InvariantBundle b;
  b.period = component.period;
  b.root_portrait = atlas.root_portrait(component);
  b.kind = component.kind;
  b.labelled_address = component.address.empty() ? labelled_internal_address(component, atlas) : component.address;
  b.lu_profile = lu_profile_from_address(b.labelled_address);
  b.irregular_points = component.period + 1;
  return b;
}

InvariantBundle mirror(const InvariantBundle& bundle) {
  InvariantBundle m = bundle;
  std::vector<std::vector<Angle>> classes;
  for (const auto& cls : bundle.root_portrait.classes()) {
    std::vector<Angle> neg;
    for (const auto& a : cls) neg.push_back(a.negated());
    classes.push_back(std::move(neg));
  }
  m.root_portrait = canonical_form(OrbitPortrait(std::move(classes)));
  for (auto& e : m.labelled_address) {
    if (e.label) e.label = Rational(1) - *e.label;
  }
  return m;
}

Distinction distinguish(const InvariantBundle& a, const InvariantBundle& b) {
  if (a.period != b.period) return {"period", std::to_string(a.period), std::to_string(b.period)};
  if (a.kind != b.kind) return {"kind", to_string(a.kind), to_string(b.kind)};
  if (a.lu_profile != b.lu_profile) return {"lu_profile", profile_string(a.lu_profile), profile_string(b.lu_profile)};
  if (a.labelled_address != b.labelled_address) {
    return {"labelled_address", to_string(a.labelled_address), to_string(b.labelled_address)};
  }
  if (!(a.root_portrait == b.root_portrait)) {
    return {"root_portrait", to_string(a.root_portrait), to_string(b.root_portrait)};
  }
  if (a.irregular_points != b.irregular_points) {
    return {"irregular_points", std::to_string(a.irregular_points), std::to_string(b.irregular_points)};
  }
  return {};
}

InjectivityReport injectivity_sweep(const Atlas& atlas) {
  InjectivityReport report;
  const auto& comps = atlas.components();
  report.components = comps.size();
  std::vector<InvariantBundle> bundles;
  bundles.reserve(comps.size());
  for (const auto& c : comps) bundles.push_back(invariant_bundle(c, atlas));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      ++report.pairs;
      if (distinguish(bundles[i], bundles[j]).equal()) {
        report.bundle_collisions.emplace_back(comps[i].name(), comps[j].name());
      }
      if (bundles[i].labelled_address == bundles[j].labelled_address) {
        report.address_collisions.emplace_back(comps[i].name(), comps[j].name());
      }
    }
  }
  return report;
}

}  // namespace lamina
