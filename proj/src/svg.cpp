#include "eisen/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace eisen {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string emit_svg(const Embedding& e, double scale) {
  const double radius = std::sqrt(e.radius_sq.convert_to<double>()) * scale;
  const double margin = 40.0;
  const double size = 2 * (radius + margin);
  const double cx = size / 2, cy = size / 2;
  auto sx = [&](const QSqrt3& x) { return cx + to_double(x) * scale; };
  auto sy = [&](const QSqrt3& y) { return cy - to_double(y) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size)
     << "\" height=\"" << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size)
     << "\">\n";
  os << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
     << "\" r=\"2\" fill=\"black\"/>\n";

  os << "  <g class=\"chords\" stroke=\"steelblue\" stroke-width=\"1\">\n";
  for (const auto& [labels, d] : e.expected) {
    const Point& p = e.at(labels.first);
    const Point& q = e.at(labels.second);
    os << "    <line x1=\"" << fmt(sx(p.x)) << "\" y1=\"" << fmt(sy(p.y)) << "\" x2=\""
       << fmt(sx(q.x)) << "\" y2=\"" << fmt(sy(q.y)) << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g class=\"lengths\" font-family=\"sans-serif\" font-size=\"10\" fill=\"dimgray\">\n";
  for (const auto& [labels, d] : e.expected) {
    const Point& p = e.at(labels.first);
    const Point& q = e.at(labels.second);
    os << "    <text x=\"" << fmt((sx(p.x) + sx(q.x)) / 2) << "\" y=\""
       << fmt((sy(p.y) + sy(q.y)) / 2) << "\">" << d << "</text>\n";
  }
  os << "  </g>\n";

  os << "  <g class=\"points\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& [name, p] : e.points) {
    const double x = sx(p.x), y = sy(p.y);
    // Push labels radially outward.
    const double dx = x - cx, dy = y - cy;
    const double len = std::hypot(dx, dy);
    const double lx = len > 0 ? x + 16 * dx / len : x;
    const double ly = len > 0 ? y + 16 * dy / len : y;
    os << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"black\"/>\n"
       << "    <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << name << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace eisen
