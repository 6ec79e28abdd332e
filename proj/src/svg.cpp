#include "sqtile/svg.hpp"

#include <iomanip>
#include <sstream>

namespace sqtile {

namespace {

double px(const Rational& r, int scale) { return static_cast<double>(r) * scale; }

}  // namespace

std::string svg_render(const Tiling& t, int px_per_unit) {
  std::ostringstream os;
  os << std::setprecision(10);
  double w = px(t.width, px_per_unit), h = px(t.height, px_per_unit);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
     << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
     << "\" fill=\"#f4f4f4\" stroke=\"#000\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < t.squares.size(); ++i) {
    const auto& s = t.squares[i];
    double side = px(s.side, px_per_unit);
    double x = px(s.x, px_per_unit);
    double y = h - px(s.y, px_per_unit) - side;  // flip so y grows upward
    int hue = static_cast<int>((i * 47) % 360);
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << side << "\" height=\"" << side
       << "\" fill=\"hsl(" << hue << ",65%,62%)\" stroke=\"#222\" stroke-width=\"0.8\"/>\n";
  }
  if (t.residual) {
    const auto& r = *t.residual;
    double rw = px(r.w, px_per_unit), rh = px(r.h, px_per_unit);
    double x = px(r.x, px_per_unit);
    double y = h - px(r.y, px_per_unit) - rh;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << rw << "\" height=\"" << rh
       << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"1\" stroke-dasharray=\"4 2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sqtile
