#ifndef LAMINA_ANGLE_HPP_
#define LAMINA_ANGLE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamina {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A rational point of the circle R/Z, always stored as a reduced fraction
/// num/den with 0 <= num < den. Structural equality is value equality.
class Angle {
 public:
  Angle() = default;

  /// Reduces num/den modulo 1. Negative numerators wrap around the circle.
  /// Throws std::invalid_argument when den is not positive.
  Angle(BigInt num, BigInt den);

  /// Accepts "num/den" or a bare integer ("0" is 0/1).
  static Angle parse(std::string_view text);
  static Angle from_rational(const Rational& value);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  Rational value() const { return Rational(num_, den_); }
  std::string str() const;

  bool is_zero() const { return num_ == 0; }

  /// Doubling map t -> 2t mod 1.
  Angle doubled() const;
  /// The two preimages under doubling: t/2 and t/2 + 1/2.
  std::pair<Angle, Angle> halves() const;
  Angle negated() const;

  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Orders by position in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  struct Reduced {};
  Angle(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_{0};
  BigInt den_{1};
};

struct AngleHash {
  std::size_t operator()(const Angle& a) const;
};

/// Doubling-map helpers.
Angle double_angle(const Angle& theta);

/// True iff the angle is periodic under doubling (odd denominator).
bool is_periodic(const Angle& theta);

/// Forward orbit of a rational angle, split into its preperiodic prefix and
/// the cycle it falls into.
struct Orbit {
  std::vector<Angle> prefix;
  std::vector<Angle> cycle;

  std::size_t preperiod() const { return prefix.size(); }
  std::size_t period() const { return cycle.size(); }
};

Orbit orbit(const Angle& theta);

/// Exact period of a periodic angle. Throws std::invalid_argument for even
/// denominators.
int exact_period(const Angle& theta);

/// Counterclockwise arc from start to end.
struct DirectedArc {
  Angle start;
  Angle end;

  /// (end - start) mod 1. Throws std::invalid_argument when start == end.
  Rational length() const;
  /// Strict interior of the arc.
  bool contains_open(const Angle& theta) const;
  /// Interior plus both endpoints.
  bool contains_closed(const Angle& theta) const;

  friend bool operator==(const DirectedArc&, const DirectedArc&) = default;
};

std::string to_string(const DirectedArc& arc);

using Chord = std::pair<Angle, Angle>;

/// True iff the chords cross inside the disk, i.e. their endpoints
/// interleave in circular order. Throws std::invalid_argument when the
/// chords share an endpoint or a chord is degenerate.
bool chords_cross(const Chord& first, const Chord& second);

enum class KneadingSymbol { zero, one, star };

char to_char(KneadingSymbol symbol);

/// Itinerary of an angle relative to the partition of the circle by its two
/// preimages. symbols holds preperiod + period entries; the tail repeats.
struct KneadingSequence {
  std::vector<KneadingSymbol> symbols;
  std::size_t preperiod = 0;
  std::size_t period = 1;

  /// 1-indexed symbol of the infinite sequence.
  KneadingSymbol at(std::size_t k) const;
  /// e.g. "11(0)" for a preperiodic sequence, "(10*)" for a periodic one.
  std::string str() const;
};

/// Throws std::invalid_argument for theta == 0.
KneadingSequence kneading_sequence(const Angle& theta);

/// Number of angles of exact period n, sum over d | n of mu(n/d) (2^d - 1).
BigInt count_periodic_angles(int n);

/// All angles of exact period n under doubling, sorted increasingly.
std::vector<Angle> enumerate_periodic_angles(int n);

}  // namespace lamina

#endif  // LAMINA_ANGLE_HPP_
