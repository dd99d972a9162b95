#include "lamina/solenoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamina/atlas.hpp"

namespace lamina {

namespace {

const Angle& one_half() {
  static const Angle half(1, 2);
  return half;
}

// b_k = 1 exactly when t_k lies in [1/2, 1).
std::uint8_t bit_of(const Angle& t) { return t >= one_half() ? 1 : 0; }

}  // namespace

SolenoidPoint::SolenoidPoint(Angle base, std::vector<std::uint8_t> tail)
    : base_(std::move(base)), tail_(std::move(tail)) {
  for (auto b : tail_) {
    if (b > 1) throw std::invalid_argument("solenoid tail bits must be 0 or 1");
  }
}

SolenoidPoint SolenoidPoint::unit(std::size_t depth) {
  return SolenoidPoint(Angle(), std::vector<std::uint8_t>(depth, 0));
}

SolenoidPoint SolenoidPoint::from_coordinates(const std::vector<Angle>& coords) {
  if (coords.empty()) throw std::invalid_argument("solenoid point needs at least the base coordinate");
  std::vector<std::uint8_t> tail;
  tail.reserve(coords.size() - 1);
  for (std::size_t k = 1; k < coords.size(); ++k) {
    if (coords[k].doubled() != coords[k - 1]) {
      throw std::invalid_argument("coordinate " + std::to_string(k) + " does not double to its predecessor");
    }
    tail.push_back(bit_of(coords[k]));
  }
  return SolenoidPoint(coords.front(), std::move(tail));
}

std::string SolenoidPoint::tail_string() const {
  std::string out;
  for (auto b : tail_) out += b ? '1' : '0';
  return out;
}

SolenoidPoint SolenoidPoint::truncated(std::size_t depth) const {
  if (depth >= tail_.size()) return *this;
  return SolenoidPoint(base_, std::vector<std::uint8_t>(tail_.begin(), tail_.begin() + static_cast<std::ptrdiff_t>(depth)));
}

std::string to_string(const SolenoidPoint& p) {
  return "{base " + p.base().str() + ", tail " + p.tail_string() + "}";
}

std::vector<Angle> coordinates(const SolenoidPoint& p) {
  std::vector<Angle> out{p.base()};
  out.reserve(p.depth() + 1);
  for (auto b : p.tail()) {
    const auto [lo, hi] = out.back().halves();
    out.push_back(b ? hi : lo);
  }
  return out;
}

SolenoidPoint group_mul(const SolenoidPoint& x, const SolenoidPoint& y) {
  if (x.depth() != y.depth()) {
    throw std::invalid_argument("solenoid depth mismatch: " + std::to_string(x.depth()) + " vs " +
                                std::to_string(y.depth()));
  }
  const auto cx = coordinates(x);
  const auto cy = coordinates(y);
  std::vector<Angle> sum;
  sum.reserve(cx.size());
  for (std::size_t k = 0; k < cx.size(); ++k) sum.push_back(cx[k] + cy[k]);
  return SolenoidPoint::from_coordinates(sum);
}

SolenoidPoint inversion(const SolenoidPoint& x) {
  auto c = coordinates(x);
  for (auto& a : c) a = a.negated();
  return SolenoidPoint::from_coordinates(c);
}

SolenoidPoint group_inverse(const SolenoidPoint& x) { return inversion(x); }

SolenoidPoint rho(const Rational& t, std::size_t depth) {
  std::vector<Angle> c;
  c.reserve(depth + 1);
  Rational scale(1);
  for (std::size_t k = 0; k <= depth; ++k) {
    c.push_back(Angle::from_rational(t * scale));
    scale /= 2;
  }
  return SolenoidPoint::from_coordinates(c);
}

SolenoidPoint adding_machine(const SolenoidPoint& x) {
  auto tail = x.tail();
  for (auto& b : tail) {
    b ^= 1;
    if (b == 1) break;
  }
  return SolenoidPoint(x.base(), std::move(tail));
}

SolenoidPoint shift(const SolenoidPoint& x) {
  std::vector<std::uint8_t> tail;
  if (x.depth() > 0) {
    tail.reserve(x.depth());
    tail.push_back(bit_of(x.base()));
    tail.insert(tail.end(), x.tail().begin(), x.tail().end() - 1);
  }
  return SolenoidPoint(x.base().doubled(), std::move(tail));
}

SolenoidPoint unshift(const SolenoidPoint& x) {
  if (x.depth() == 0) throw std::invalid_argument("cannot unshift a depth-0 solenoid point");
  const auto [lo, hi] = x.base().halves();
  return SolenoidPoint(x.tail().front() ? hi : lo, std::vector<std::uint8_t>(x.tail().begin() + 1, x.tail().end()));
}

SolenoidPoint periodic_point(const Angle& theta, std::size_t depth) {
  if (!is_periodic(theta)) throw std::invalid_argument("periodic lift needs an odd denominator, got " + theta.str());
  const auto cycle = orbit(theta).cycle;
  const std::size_t n = cycle.size();
  std::vector<Angle> c;
  c.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) c.push_back(cycle[(n - k % n) % n]);
  return SolenoidPoint::from_coordinates(c);
}

AffineSolenoidMap AffineSolenoidMap::identity(std::size_t depth) { return {SolenoidPoint::unit(depth), 0, false}; }

std::string to_string(const AffineSolenoidMap& m) {
  return "{tau " + to_string(m.translation) + ", n " + std::to_string(m.shift_power) +
         (m.invert ? ", inverted}" : "}");
}

SolenoidPoint apply_affine(const AffineSolenoidMap& m, const SolenoidPoint& x) {
  SolenoidPoint y = m.invert ? inversion(x) : x;
  if (m.shift_power >= 0) {
    for (int i = 0; i < m.shift_power; ++i) y = shift(y);
  } else {
    if (y.depth() < static_cast<std::size_t>(-m.shift_power)) {
      throw std::invalid_argument("depth " + std::to_string(y.depth()) + " too shallow for shift power " +
                                  std::to_string(m.shift_power));
    }
    for (int i = 0; i < -m.shift_power; ++i) y = unshift(y);
  }
  const std::size_t depth = std::min(y.depth(), m.translation.depth());
  return group_mul(m.translation.truncated(depth), y.truncated(depth));
}

AffineSolenoidMap compose_affine(const AffineSolenoidMap& first, const AffineSolenoidMap& second) {
  const std::size_t depth = std::max(first.translation.depth(), second.translation.depth());
  const SolenoidPoint tau = apply_affine(first, apply_affine(second, SolenoidPoint::unit(depth)));
  return {tau, first.shift_power + second.shift_power, first.invert != second.invert};
}

std::vector<SolenoidPoint> affine_probe_set(std::size_t depth) {
  std::vector<SolenoidPoint> out;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_periodic_angles(n)) out.push_back(periodic_point(a, depth));
  }
  out.push_back(rho(Rational(1, 3), depth));
  out.push_back(rho(Rational(1, 5), depth));
  return out;
}

bool affine_equal(const AffineSolenoidMap& a, const AffineSolenoidMap& b, std::size_t depth) {
  for (const auto& x : affine_probe_set(depth)) {
    const auto ya = apply_affine(a, x);
    const auto yb = apply_affine(b, x);
    const std::size_t common = std::min(ya.depth(), yb.depth());
    if (ya.truncated(common) != yb.truncated(common)) return false;
  }
  return true;
}

AffineRelations observe_affine_relations(std::size_t depth) {
  const AffineSolenoidMap id = AffineSolenoidMap::identity(depth);
  const AffineSolenoidMap r{SolenoidPoint::unit(depth), 0, true};
  AffineRelations rel;
  rel.depth = depth;
  auto compose_probe = [&](auto&& f, auto&& g) {
    // Functional composition evaluated pointwise, independent of the normal form.
    return [f, g](const SolenoidPoint& x) { return apply_affine(f, apply_affine(g, x)); };
  };
  auto agree = [&](auto&& lhs, auto&& rhs) {
    for (const auto& x : affine_probe_set(depth)) {
      const auto a = lhs(x);
      const auto b = rhs(x);
      const std::size_t common = std::min(a.depth(), b.depth());
      if (a.truncated(common) != b.truncated(common)) return false;
    }
    return true;
  };
  const AffineSolenoidMap f{SolenoidPoint::unit(depth), 1, false};
  const AffineSolenoidMap f_inv{SolenoidPoint::unit(depth), -1, false};
  rel.inversion_is_involution = agree(compose_probe(r, r), [&](const SolenoidPoint& x) { return apply_affine(id, x); });
  rel.shift_commutes_with_inversion = agree(compose_probe(f, r), compose_probe(r, f));
  rel.dihedral_relation_holds = agree(compose_probe(f, r), compose_probe(r, f_inv));
  return rel;
}

bool same_leaf_periodic(const Angle& theta1, const Angle& theta2, const Atlas& atlas) {
  const int n = exact_period(theta1);
  if (exact_period(theta2) != n) return false;
  if (n > atlas.max_period()) {
    throw std::invalid_argument("period " + std::to_string(n) + " exceeds atlas max period " +
                                std::to_string(atlas.max_period()));
  }
  if (theta1 == theta2) return true;
  for (const auto& c : atlas.components()) {
    if (c.period != n || c.is_main_cardioid()) continue;
    const auto& p = atlas.root_portrait(c);
    const int i = p.class_of(theta1);
    if (i >= 0 && i == p.class_of(theta2)) return true;
  }
  return false;
}

}  // namespace lamina
