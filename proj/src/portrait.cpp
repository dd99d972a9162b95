#include "lamina/portrait.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lamina {

namespace {

using AngleSet = std::unordered_set<Angle, AngleHash>;

std::vector<Angle> sorted_unique(std::vector<Angle> angles) {
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return angles;
}

std::vector<Angle> doubled_all(const std::vector<Angle>& angles) {
  std::vector<Angle> out;
  out.reserve(angles.size());
  for (const auto& a : angles) out.push_back(a.doubled());
  return out;
}

// Index of the complementary arc of `sorted` (arc i runs from sorted[i] to
// sorted[i+1]) whose interior holds theta. theta must not be in `sorted`.
std::size_t gap_index(const std::vector<Angle>& sorted, const Angle& theta) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), theta);
  if (it == sorted.begin()) return sorted.size() - 1;
  return static_cast<std::size_t>(it - sorted.begin()) - 1;
}

bool unlinked(const std::vector<Angle>& a, const std::vector<Angle>& b) {
  if (a.size() < 2 || b.size() < 2) return true;
  const std::size_t gap = gap_index(a, b.front());
  return std::all_of(b.begin() + 1, b.end(),
                     [&](const Angle& x) { return gap_index(a, x) == gap; });
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Angle iterate_doubling(Angle theta, int times) {
  for (int i = 0; i < times; ++i) theta = theta.doubled();
  return theta;
}

std::vector<std::vector<Angle>> sorted_classes(const OrbitPortrait& p) {
  auto classes = p.classes();
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

std::string to_string(PortraitKind kind) {
  switch (kind) {
    case PortraitKind::trivial: return "trivial";
    case PortraitKind::satellite: return "satellite";
    case PortraitKind::primitive: return "primitive";
  }
  return "unknown";
}

OrbitPortrait::OrbitPortrait(std::vector<std::vector<Angle>> classes) : classes_(std::move(classes)) {
  for (auto& c : classes_) std::sort(c.begin(), c.end());
}

int OrbitPortrait::valence() const {
  return classes_.empty() ? 0 : static_cast<int>(classes_.front().size());
}

int OrbitPortrait::ray_period() const {
  if (classes_.empty() || classes_.front().empty()) return 0;
  return exact_period(classes_.front().front());
}

std::optional<PortraitKind> OrbitPortrait::kind() const {
  const int p = point_period();
  const int v = valence();
  const int n = ray_period();
  if (p == 0 || v == 0) return std::nullopt;
  if (v == 1) return n == p ? std::optional(PortraitKind::trivial) : std::nullopt;
  if (n == p * v) return PortraitKind::satellite;
  if (v == 2 && n == p) return PortraitKind::primitive;
  return std::nullopt;
}

std::vector<Angle> OrbitPortrait::all_angles() const {
  std::vector<Angle> out;
  for (const auto& c : classes_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool OrbitPortrait::contains(const Angle& theta) const { return class_of(theta) >= 0; }

int OrbitPortrait::class_of(const Angle& theta) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (std::binary_search(classes_[i].begin(), classes_[i].end(), theta)) return static_cast<int>(i);
  }
  return -1;
}

bool operator==(const OrbitPortrait& a, const OrbitPortrait& b) {
  if (a.classes_.size() != b.classes_.size()) return false;
  return sorted_classes(a) == sorted_classes(b);
}

std::string to_string(const OrbitPortrait& portrait) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < portrait.classes().size(); ++i) {
    if (i) out << ", ";
    out << '{';
    const auto& c = portrait.classes()[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ", ";
      out << c[j].str();
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::empty: return "empty";
    case ViolationKind::period_mismatch: return "period_mismatch";
    case ViolationKind::cardinality: return "cardinality";
    case ViolationKind::not_bijective: return "not_bijective";
    case ViolationKind::order_reversed: return "order_reversed";
    case ViolationKind::linked: return "linked";
  }
  return "unknown";
}

std::vector<Violation> validate_portrait(const OrbitPortrait& candidate) {
  std::vector<Violation> out;
  const auto& classes = candidate.classes();
  if (classes.empty() || std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.empty(); })) {
    out.push_back({ViolationKind::empty, "portrait has an empty class or no classes"});
    return out;
  }

  // Common exact period.
  std::optional<int> period;
  for (const auto& c : classes) {
    for (const auto& a : c) {
      if (!is_periodic(a)) {
        out.push_back({ViolationKind::period_mismatch, a.str() + " is not periodic"});
        continue;
      }
      const int n = exact_period(a);
      if (!period) {
        period = n;
      } else if (n != *period) {
        out.push_back({ViolationKind::period_mismatch,
                       a.str() + " has period " + std::to_string(n) + ", expected " + std::to_string(*period)});
      }
    }
  }

  // Equal cardinality, no repeated angles.
  const std::size_t v = classes.front().size();
  AngleSet seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() != v) {
      out.push_back({ViolationKind::cardinality, "class " + std::to_string(i + 1) + " has " +
                                                     std::to_string(classes[i].size()) + " angles, expected " +
                                                     std::to_string(v)});
    }
    for (const auto& a : classes[i]) {
      if (!seen.insert(a).second) {
        out.push_back({ViolationKind::cardinality, a.str() + " appears more than once"});
      }
    }
  }

  // Doubling carries A_i onto A_{i+1}, preserving circular order.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& from = classes[i];
    const auto& to = classes[(i + 1) % classes.size()];
    const auto image = doubled_all(from);
    if (sorted_unique(image) != to) {
      out.push_back({ViolationKind::not_bijective,
                     "doubling does not map class " + std::to_string(i + 1) + " onto class " +
                         std::to_string((i + 1) % classes.size() + 1)});
      continue;
    }
    const auto start = static_cast<std::size_t>(std::find(to.begin(), to.end(), image.front()) - to.begin());
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (image[j] != to[(start + j) % to.size()]) {
        out.push_back({ViolationKind::order_reversed,
                       "doubling breaks circular order on class " + std::to_string(i + 1)});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (!unlinked(classes[i], classes[j])) {
        out.push_back({ViolationKind::linked,
                       "classes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are linked"});
      }
    }
  }
  return out;
}

std::vector<DirectedArc> complementary_arcs(const std::vector<Angle>& angles) {
  std::vector<DirectedArc> arcs;
  if (angles.size() < 2) return arcs;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    arcs.push_back({angles[i], angles[(i + 1) % angles.size()]});
  }
  return arcs;
}

DirectedArc characteristic_arc(const OrbitPortrait& portrait) {
  if (portrait.valence() < 2) {
    throw std::invalid_argument("characteristic arc needs valence >= 2: " + to_string(portrait));
  }
  std::optional<DirectedArc> best;
  Rational best_length;
  bool tie = false;
  for (const auto& c : portrait.classes()) {
    for (const auto& arc : complementary_arcs(c)) {
      const Rational len = arc.length();
      if (!best || len < best_length) {
        best = arc;
        best_length = len;
        tie = false;
      } else if (len == best_length) {
        tie = true;
      }
    }
  }
  if (tie) throw std::logic_error("shortest complementary arc is not unique: " + to_string(portrait));
  return *best;
}

DirectedArc critical_arc(const OrbitPortrait& portrait) {
  const DirectedArc characteristic = characteristic_arc(portrait);
  std::optional<DirectedArc> found;
  const Rational half(1, 2);
  for (const auto& c : portrait.classes()) {
    for (const auto& arc : complementary_arcs(c)) {
      if (arc.length() <= half || arc.start.doubled() != characteristic.start ||
          arc.end.doubled() != characteristic.end) {
        continue;
      }
      if (found) throw std::logic_error("characteristic arc has two long preimages: " + to_string(portrait));
      found = arc;
    }
  }
  if (!found) throw std::logic_error("no long preimage of the characteristic arc: " + to_string(portrait));
  return *found;
}

std::optional<OrbitPortrait> realize_portrait(const Angle& theta1, const Angle& theta2) {
  if (!is_periodic(theta1) || !is_periodic(theta2)) {
    throw std::invalid_argument("root angles must be periodic");
  }
  const int n = exact_period(theta1);
  if (exact_period(theta2) != n) throw std::invalid_argument("root angles have different periods");
  if (theta1 == theta2) throw std::invalid_argument("root angles coincide");
  const DirectedArc arc{theta1, theta2};
  if (arc.length() >= Rational(1, 2)) {
    throw std::invalid_argument("arc " + to_string(arc) + " is not shorter than its complement");
  }

  // A valid portrait with characteristic arc (theta1 -> theta2) has A_1
  // invariant under the p-th iterate of doubling, and A_1 is the union of the
  // orbits of theta1 and theta2 under that iterate. Try each point period.
  for (int p : divisors(n)) {
    std::vector<Angle> first;
    for (const Angle& seed : {theta1, theta2}) {
      Angle a = seed;
      do {
        first.push_back(a);
        a = iterate_doubling(a, p);
      } while (a != seed);
    }
    first = sorted_unique(std::move(first));
    std::vector<std::vector<Angle>> classes{first};
    for (int i = 1; i < p; ++i) classes.push_back(sorted_unique(doubled_all(classes.back())));
    OrbitPortrait candidate(std::move(classes));
    if (!validate_portrait(candidate).empty()) continue;
    if (candidate.valence() < 2) continue;
    try {
      if (characteristic_arc(candidate) == arc) return candidate;
    } catch (const std::logic_error&) {
    }
  }
  return std::nullopt;
}

OrbitPortrait canonical_form(const OrbitPortrait& portrait) {
  const auto& classes = portrait.classes();
  if (classes.empty()) return portrait;
  std::size_t first = 0;
  if (portrait.valence() >= 2) {
    const int idx = portrait.class_of(characteristic_arc(portrait).start);
    first = static_cast<std::size_t>(idx);
  } else {
    for (std::size_t i = 1; i < classes.size(); ++i) {
      if (classes[i].front() < classes[first].front()) first = i;
    }
  }
  std::vector<std::vector<Angle>> out;
  std::size_t at = first;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.push_back(classes[at]);
    const int next = portrait.class_of(classes[at].front().doubled());
    if (next < 0) throw std::logic_error("doubling leaves the portrait: " + to_string(portrait));
    at = static_cast<std::size_t>(next);
  }
  return OrbitPortrait(std::move(out));
}

Rational rotation_number(const OrbitPortrait& portrait) {
  if (portrait.kind() != PortraitKind::satellite) {
    throw std::invalid_argument("rotation number is defined for satellite portraits only: " + to_string(portrait));
  }
  const auto& a1 = portrait.classes().front();
  const int v = static_cast<int>(a1.size());
  auto advance = [&](std::size_t j) {
    const Angle image = iterate_doubling(a1[j], portrait.point_period());
    const auto k = static_cast<int>(std::find(a1.begin(), a1.end(), image) - a1.begin());
    if (k == v) throw std::logic_error("first return map leaves A_1: " + to_string(portrait));
    return ((k - static_cast<int>(j)) % v + v) % v;
  };
  const int shift = advance(0);
  for (std::size_t j = 1; j < a1.size(); ++j) {
    if (advance(j) != shift) throw std::logic_error("first return map is not a rotation: " + to_string(portrait));
  }
  return Rational(shift, v);
}

OrbitPortrait rotate_portrait(const OrbitPortrait& portrait, const Angle& theta) {
  std::vector<std::vector<Angle>> classes;
  for (const auto& c : portrait.classes()) {
    std::vector<Angle> moved;
    for (const auto& a : c) moved.push_back(a + theta);
    classes.push_back(std::move(moved));
  }
  return OrbitPortrait(std::move(classes));
}

std::vector<OrbitPortrait> enumerate_portraits(int max_ray_period) {
  std::vector<OrbitPortrait> out;
  const Rational half(1, 2);
  for (int n = 2; n <= max_ray_period; ++n) {
    const auto angles = enumerate_periodic_angles(n);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      for (std::size_t j = i + 1; j < angles.size(); ++j) {
        DirectedArc arc{angles[i], angles[j]};
        if (arc.length() > half) arc = {angles[j], angles[i]};
        if (auto p = realize_portrait(arc.start, arc.end)) out.push_back(canonical_form(*p));
      }
    }
  }
  return out;
}

RigidityReport rigidity_sweep(int max_ray_period) {
  if (max_ray_period < 2) throw std::invalid_argument("rigidity sweep needs max ray period >= 2");
  return rigidity_sweep(enumerate_portraits(max_ray_period), max_ray_period);
}

RigidityReport rigidity_sweep(const std::vector<OrbitPortrait>& portraits, int max_ray_period) {
  RigidityReport report;
  report.max_ray_period = max_ray_period;
  report.portraits = portraits.size();

  std::vector<AngleSet> members;
  members.reserve(portraits.size());
  for (const auto& p : portraits) {
    const auto all = p.all_angles();
    members.emplace_back(all.begin(), all.end());
  }

  for (std::size_t i = 0; i < portraits.size(); ++i) {
    const auto& from = portraits[i];
    const auto from_angles = from.all_angles();
    for (std::size_t j = 0; j < portraits.size(); ++j) {
      ++report.pairs_checked;
      const auto& to = portraits[j];
      // Rotations preserve the number and size of classes.
      if (from.point_period() != to.point_period() || from.valence() != to.valence()) continue;
      // A rotation carrying `from` onto `to` must send from_angles[0] to some
      // angle of `to`, so these candidates are exhaustive.
      for (const auto& target : to.all_angles()) {
        ++report.rotations_tested;
        const Angle theta = target - from_angles.front();
        const bool lands = std::all_of(from_angles.begin(), from_angles.end(),
                                       [&](const Angle& a) { return members[j].contains(a + theta); });
        if (!lands) continue;
        if (rotate_portrait(from, theta) != to) continue;
        if (i != j || !theta.is_zero()) report.counterexamples.push_back({from, to, theta});
      }
    }
  }
  return report;
}

}  // namespace lamina
