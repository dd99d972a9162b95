#include "lamina/angle.hpp"

#include <stdexcept>

#include <boost/functional/hash.hpp>

namespace lamina {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed integer: " + std::string(text));
    }
  }
  return BigInt(std::string(text));
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Angle::Angle(BigInt num, BigInt den) {
  if (den <= 0) throw std::invalid_argument("angle denominator must be positive");
  num = floor_mod(num, den);
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Angle Angle::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parse_integer(text), 1);
  return Angle(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Angle Angle::from_rational(const Rational& value) {
  return Angle(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value));
}

std::string Angle::str() const {
  return num_.str() + "/" + den_.str();
}

Angle Angle::doubled() const {
  if ((den_ & 1) == 0) {
    BigInt half = den_ >> 1;
    return Angle(num_ % half, half, Reduced{});
  }
  BigInt n = num_ << 1;
  if (n >= den_) n -= den_;
  return Angle(std::move(n), den_, Reduced{});
}

std::pair<Angle, Angle> Angle::halves() const {
  return {Angle(num_, den_ * 2), Angle(num_ + den_, den_ * 2)};
}

Angle Angle::negated() const {
  if (num_ == 0) return *this;
  return Angle(den_ - num_, den_, Reduced{});
}

Angle Angle::operator+(const Angle& other) const {
  if (den_ == other.den_) return Angle(num_ + other.num_, den_);
  return Angle(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Angle Angle::operator-(const Angle& other) const {
  return *this + other.negated();
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::size_t AngleHash::operator()(const Angle& a) const {
  std::size_t seed = boost::multiprecision::hash_value(a.num());
  boost::hash_combine(seed, boost::multiprecision::hash_value(a.den()));
  return seed;
}

Angle double_angle(const Angle& theta) { return theta.doubled(); }

bool is_periodic(const Angle& theta) { return (theta.den() & 1) == 1; }

Orbit orbit(const Angle& theta) {
  // The preperiodic part of k/(2^j m), m odd, has length exactly j; the
  // cycle then closes as soon as an angle repeats.
  Orbit result;
  Angle current = theta;
  while (!is_periodic(current)) {
    result.prefix.push_back(current);
    current = current.doubled();
  }
  const Angle start = current;
  do {
    result.cycle.push_back(current);
    current = current.doubled();
  } while (current != start);
  return result;
}

int exact_period(const Angle& theta) {
  if (!is_periodic(theta)) {
    throw std::invalid_argument("angle " + theta.str() + " is not periodic under doubling");
  }
  int n = 0;
  Angle current = theta;
  do {
    current = current.doubled();
    ++n;
  } while (current != theta);
  return n;
}

Rational DirectedArc::length() const {
  if (start == end) throw std::invalid_argument("degenerate arc " + start.str() + " -> " + end.str());
  return (end - start).value();
}

bool DirectedArc::contains_open(const Angle& theta) const {
  if (theta == start || theta == end) return false;
  if (start < end) return start < theta && theta < end;
  return theta > start || theta < end;
}

bool DirectedArc::contains_closed(const Angle& theta) const {
  return theta == start || theta == end || contains_open(theta);
}

std::string to_string(const DirectedArc& arc) {
  return arc.start.str() + " -> " + arc.end.str();
}

bool chords_cross(const Chord& first, const Chord& second) {
  const auto& [a, b] = first;
  const auto& [c, d] = second;
  if (a == b || c == d) throw std::invalid_argument("degenerate chord");
  if (a == c || a == d || b == c || b == d) {
    throw std::invalid_argument("chords share an endpoint");
  }
  DirectedArc arc{a, b};
  return arc.contains_open(c) != arc.contains_open(d);
}

char to_char(KneadingSymbol symbol) {
  switch (symbol) {
    case KneadingSymbol::zero: return '0';
    case KneadingSymbol::one: return '1';
    case KneadingSymbol::star: return '*';
  }
  return '?';
}

KneadingSymbol KneadingSequence::at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("kneading positions are 1-indexed");
  std::size_t i = k - 1;
  if (i >= preperiod) i = preperiod + (i - preperiod) % period;
  return symbols[i];
}

std::string KneadingSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i == preperiod) out += '(';
    out += to_char(symbols[i]);
  }
  out += ')';
  return out;
}

KneadingSequence kneading_sequence(const Angle& theta) {
  if (theta.is_zero()) throw std::invalid_argument("kneading sequence of angle 0 is undefined");
  const auto [lo, hi] = theta.halves();
  const DirectedArc one_side{lo, hi};
  auto symbol_of = [&](const Angle& x) {
    if (x == lo || x == hi) return KneadingSymbol::star;
    return one_side.contains_open(x) ? KneadingSymbol::one : KneadingSymbol::zero;
  };
  const Orbit orb = orbit(theta);
  KneadingSequence seq;
  seq.preperiod = orb.preperiod();
  seq.period = orb.period();
  for (const auto& x : orb.prefix) seq.symbols.push_back(symbol_of(x));
  for (const auto& x : orb.cycle) seq.symbols.push_back(symbol_of(x));
  return seq;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> primes;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int moebius(int n) {
  int mu = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
  }
  return n > 1 ? -mu : mu;
}

BigInt mersenne(int n) { return (BigInt(1) << n) - 1; }

}  // namespace

BigInt count_periodic_angles(int n) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  BigInt total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) total += moebius(n / d) * mersenne(d);
  }
  return total;
}

std::vector<Angle> enumerate_periodic_angles(int n) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  // k/(2^n - 1) has a period dividing n/q exactly when (2^n - 1)/(2^(n/q) - 1)
  // divides k.
  const BigInt m = mersenne(n);
  std::vector<BigInt> sub_period_steps;
  for (int q : prime_factors(n)) sub_period_steps.push_back(m / mersenne(n / q));
  std::vector<Angle> out;
  for (BigInt k = 0; k < m; ++k) {
    bool exact = true;
    for (const auto& step : sub_period_steps) {
      if (k % step == 0) {
        exact = false;
        break;
      }
    }
    if (exact) out.emplace_back(k, m);
  }
  return out;
}

}  // namespace lamina
