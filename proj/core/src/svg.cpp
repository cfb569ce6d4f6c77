#include <algorithm>
#include <cmath>
#include <sstream>

#include "sails/geometry.hpp"

namespace sails {

namespace {

constexpr double kUnit = 40.0;  // pixels per lattice step
constexpr double kMargin = 20.0;

// Drawing only: slopes are approximated once the exact work is done.
double approx(const QuadraticSurd& x) {
  return (x.a().convert_to<double>() + x.b().convert_to<double>() * std::sqrt(x.d().convert_to<double>())) /
         x.c().convert_to<double>();
}

class Canvas {
 public:
  explicit Canvas(const Viewport& vp) : vp_(vp) {}

  double px(double x) const { return kMargin + (x - static_cast<double>(vp_.x_min)) * kUnit; }
  double py(double y) const { return kMargin + (static_cast<double>(vp_.y_max) - y) * kUnit; }
  double px(const BigInt& x) const { return px(x.convert_to<double>()); }
  double py(const BigInt& y) const { return py(y.convert_to<double>()); }

  double width() const { return 2 * kMargin + static_cast<double>(vp_.x_max - vp_.x_min) * kUnit; }
  double height() const { return 2 * kMargin + static_cast<double>(vp_.y_max - vp_.y_min) * kUnit; }

  // Segment of the line y = slope * x through the origin clipped to the viewport.
  bool clip_line(double slope, double& x0, double& y0, double& x1, double& y1) const {
    const double xl = static_cast<double>(vp_.x_min), xr = static_cast<double>(vp_.x_max);
    const double yb = static_cast<double>(vp_.y_min), yt = static_cast<double>(vp_.y_max);
    double lo = -1e300, hi = 1e300;
    auto narrow = [&](double a, double b) {  // a <= t <= b
      lo = std::max(lo, std::min(a, b));
      hi = std::min(hi, std::max(a, b));
    };
    narrow(xl, xr);  // parametrize by x
    if (slope != 0.0) narrow(yb / slope, yt / slope);
    if (lo > hi) return false;
    x0 = lo;
    y0 = slope * lo;
    x1 = hi;
    y1 = slope * hi;
    return true;
  }

 private:
  Viewport vp_;
};

}  // namespace

std::string emit_svg(std::span<const Sail> sails, const Viewport& viewport) {
  if (viewport.x_min > viewport.x_max || viewport.y_min > viewport.y_max) {
    throw Error(ErrorKind::InvalidArgument, "empty viewport");
  }
  const Canvas canvas(viewport);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width()
      << "\" height=\"" << canvas.height() << "\">\n"
      << "<style>.lattice{fill:#999}.cone{stroke:#000;stroke-width:1}"
         ".sail{fill:none;stroke:#1f4fd0;stroke-width:2}.sprout{stroke:#1f4fd0;stroke-width:3}"
         ".vertex{fill:#1f4fd0}.label{font:12px sans-serif;fill:#333}</style>\n";

  out << "<g id=\"grid\">\n";
  for (std::int64_t x = viewport.x_min; x <= viewport.x_max; ++x) {
    for (std::int64_t y = viewport.y_min; y <= viewport.y_max; ++y) {
      out << "<circle class=\"lattice\" cx=\"" << canvas.px(static_cast<double>(x)) << "\" cy=\""
          << canvas.py(static_cast<double>(y)) << "\" r=\"1.5\"/>\n";
    }
  }
  out << "</g>\n";

  for (std::size_t i = 0; i < sails.size(); ++i) {
    const Sail& sail = sails[i];
    out << "<g id=\"sail" << i << "\">\n";
    if (sail.cone) {
      for (const QuadraticSurd* slope : {&sail.cone->first, &sail.cone->second}) {
        double x0, y0, x1, y1;
        if (canvas.clip_line(approx(*slope), x0, y0, x1, y1)) {
          out << "<line class=\"cone\" x1=\"" << canvas.px(x0) << "\" y1=\"" << canvas.py(y0)
              << "\" x2=\"" << canvas.px(x1) << "\" y2=\"" << canvas.py(y1) << "\"/>\n";
        }
      }
    }
    if (!sail.vertices.empty()) {
      out << "<polyline class=\"sail\" points=\"";
      for (const auto& v : sail.vertices) out << canvas.px(v.point.x) << "," << canvas.py(v.point.y) << " ";
      out << "\"/>\n";
    }
    // sprouts at interior vertices, labels on edges
    for (const auto& [k, v] : sail.vertices) {
      const LatticePoint* prev = sail.vertex(k - 2);
      const LatticePoint* next = sail.vertex(k + 2);
      if (prev != nullptr && next != nullptr) {
        const BigInt ln = integer_length(v, *next);
        const BigInt lp = integer_length(v, *prev);
        const LatticePoint u{v.x + (next->x - v.x) / ln, v.y + (next->y - v.y) / ln};
        const LatticePoint w{v.x + (prev->x - v.x) / lp, v.y + (prev->y - v.y) / lp};
        const LatticePoint top = u + w - v;
        out << "<line class=\"sprout\" x1=\"" << canvas.px(v.x) << "\" y1=\"" << canvas.py(v.y)
            << "\" x2=\"" << canvas.px(top.x) << "\" y2=\"" << canvas.py(top.y) << "\"/>\n";
      }
      if (prev != nullptr) {
        if (const BigInt* a = sail.label(k)) {
          const double mx = (prev->x + v.x).convert_to<double>() / 2;
          const double my = (prev->y + v.y).convert_to<double>() / 2;
          out << "<text class=\"label\" x=\"" << canvas.px(mx) + 4 << "\" y=\"" << canvas.py(my) - 4
              << "\">a" << k << "=" << a->str() << "</text>\n";
        }
      }
    }
    for (const auto& v : sail.vertices) {
      out << "<circle class=\"vertex\" cx=\"" << canvas.px(v.point.x) << "\" cy=\""
          << canvas.py(v.point.y) << "\" r=\"4\" data-k=\"" << v.k << "\" data-x=\"" << v.point.x.str() << "\" data-y=\""
          << v.point.y.str() << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sails
