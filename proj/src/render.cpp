#include "lamina/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace lamina {

namespace {

constexpr double kSize = 420.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 180.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Point {
  double x;
  double y;
};

Point on_circle(const Angle& a, double radius = kRadius) {
  const double t = 2 * std::numbers::pi * a.value().convert_to<double>();
  return {kCenter + radius * std::cos(t), kCenter - radius * std::sin(t)};
}

void header(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize)
      << "\" viewBox=\"0 0 " << fmt(kSize) << ' ' << fmt(kSize) << "\">\n";
  out << "  <circle class=\"unit-circle\" cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\""
      << fmt(kRadius) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
}

void chord(std::ostringstream& out, const Angle& a, const Angle& b, const std::string& css_class,
           const char* color) {
  const Point p = on_circle(a);
  const Point q = on_circle(b);
  out << "  <line class=\"chord " << css_class << "\" x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\""
      << fmt(q.x) << "\" y2=\"" << fmt(q.y) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
}

// Counterclockwise on the circle is a negative sweep in SVG's flipped y axis.
void arc(std::ostringstream& out, const DirectedArc& a, const std::string& css_class, const std::string& style) {
  const double r = kRadius + 8;
  const Point p = on_circle(a.start, r);
  const Point q = on_circle(a.end, r);
  const bool large = a.length() > Rational(1, 2);
  out << "  <path class=\"" << css_class << "\" d=\"M " << fmt(p.x) << ' ' << fmt(p.y) << " A " << fmt(r) << ' '
      << fmt(r) << " 0 " << (large ? 1 : 0) << " 0 " << fmt(q.x) << ' ' << fmt(q.y) << "\" fill=\"none\" "
      << style << "/>\n";
}

void label(std::ostringstream& out, const Angle& a) {
  const Point p = on_circle(a, kRadius + 22);
  out << "  <text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\" font-size=\"10\" text-anchor=\"middle\">"
      << a.str() << "</text>\n";
}

}  // namespace

std::string render_portrait_svg(const OrbitPortrait& portrait) {
  std::ostringstream out;
  header(out);
  const auto& classes = portrait.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    const char* color = kPalette[i % kPalette.size()];
    const std::string css = "class-" + std::to_string(i + 1);
    if (cls.size() == 2) {
      chord(out, cls[0], cls[1], css, color);
    } else if (cls.size() > 2) {
      for (std::size_t k = 0; k < cls.size(); ++k) chord(out, cls[k], cls[(k + 1) % cls.size()], css, color);
    }
    for (const auto& a : cls) label(out, a);
  }
  if (portrait.valence() >= 2) {
    arc(out, characteristic_arc(portrait), "characteristic-arc", "stroke=\"#000\" stroke-width=\"4\"");
    arc(out, critical_arc(portrait), "critical-arc", "stroke=\"#666\" stroke-width=\"2\" stroke-dasharray=\"6 4\"");
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_wakes_svg(const Atlas& atlas, int max_period) {
  std::ostringstream out;
  header(out);
  for (const auto& c : atlas.components()) {
    if (c.is_main_cardioid() || c.period > max_period) continue;
    chord(out, c.root_lo, c.root_hi, "period-" + std::to_string(c.period),
          kPalette[static_cast<std::size_t>(c.period) % kPalette.size()]);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lamina
