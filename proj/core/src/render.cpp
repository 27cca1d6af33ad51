#include "trigpatch/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "trigpatch/error.hpp"
#include "trigpatch/lattice.hpp"
#include "trigpatch/patchwork.hpp"

namespace trigpatch {

namespace {

struct Term {
  int i;
  int j;
  double a;
};

std::vector<Term> terms_of(const BivarPoly& c) {
  std::vector<Term> t;
  for (const auto& [i, j] : c.support()) t.push_back({i, j, c.coefficient(i, j).to_double()});
  return t;
}

// Value at (s1 e^u, s2 e^v), divided by the largest monomial to stay finite.
double value(const std::vector<Term>& t, int s1, int s2, double u, double v) {
  double top = -INFINITY;
  for (const auto& m : t) top = std::max(top, m.i * u + m.j * v);
  double sum = 0;
  for (const auto& m : t) {
    const double sign = ((m.i % 2) && s1 < 0 ? -1 : 1) * ((m.j % 2) && s2 < 0 ? -1 : 1);
    sum += sign * m.a * std::exp(m.i * u + m.j * v - top);
  }
  return sum;
}

class Svg {
 public:
  explicit Svg(int size) : size_(size) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
         << size << ' ' << size << "\">\n";
  }
  Svg& raw(const std::string& s) {
    out_ << s << '\n';
    return *this;
  }
  std::ostringstream& stream() { return out_; }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }
  int size() const { return size_; }

 private:
  int size_;
  std::ostringstream out_;
};

const char* interval_color(Interval i) {
  switch (i) {
    case Interval::InfZero: return "#c0392b";
    case Interval::ZeroOne: return "#27ae60";
    case Interval::OneInf: return "#2e86c1";
  }
  return "black";
}

}  // namespace

std::string render_chart(const BivarPoly& c, const RenderSpec& spec) {
  const LatticePolygon poly = newton_polygon(c);
  if (poly.doubled_area() == 0) throw validation_error("DegenerateNewtonPolygon", "chart needs a two-dimensional Newton polygon");
  const auto t = terms_of(c);
  double extent = 1;
  for (const auto& v : poly.vertices()) extent = std::max({extent, std::abs(static_cast<double>(v.x)), std::abs(static_cast<double>(v.y))});
  Svg svg(spec.size);
  const double half = spec.size / 2.0, scale = (half - 10) / extent;
  auto px = [&](double x) { return half + x * scale; };
  auto py = [&](double y) { return half - y * scale; };
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      std::ostringstream pts;
      for (const auto& v : poly.vertices()) pts << px(s1 * static_cast<double>(v.x)) << ',' << py(s2 * static_cast<double>(v.y)) << ' ';
      svg.raw("<polygon points=\"" + pts.str() + "\" fill=\"none\" stroke=\"#999\"/>");
    }
  const double range = 8;
  const int steps = spec.resolution;
  auto at = [&](int k) { return -range + 2 * range * k / steps; };
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      auto dot = [&](double u, double v) {
        const MomentPoint m = moment_map(poly, std::exp(u), std::exp(v));
        svg.stream() << "<circle cx=\"" << px(s1 * m.x) << "\" cy=\"" << py(s2 * m.y) << "\" r=\"1\" fill=\"black\"/>\n";
      };
      for (int a = 0; a <= steps; ++a)
        for (int b = 0; b < steps; ++b) {
          if (value(t, s1, s2, at(a), at(b)) * value(t, s1, s2, at(a), at(b + 1)) < 0) dot(at(a), (at(b) + at(b + 1)) / 2);
          if (value(t, s1, s2, at(b), at(a)) * value(t, s1, s2, at(b + 1), at(a)) < 0) dot((at(b) + at(b + 1)) / 2, at(a));
        }
    }
  return svg.finish();
}

std::string render_lscheme(const LScheme& l, const RenderSpec& spec) {
  Svg svg(spec.size);
  const double w = static_cast<double>(spec.size) / static_cast<double>(l.branches.size());
  const double mid = spec.size / 2.0, gap = spec.size / 8.0;
  for (std::size_t k = 0; k < l.branches.size(); ++k) {
    const double x0 = static_cast<double>(k) * w, x1 = x0 + w;
    std::vector<double> levels = l.branches[k] == 3 ? std::vector<double>{mid - gap, mid, mid + gap} : std::vector<double>{mid};
    for (double y : levels)
      svg.stream() << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
    if (k < l.tangencies.size()) {
      const double y = l.tangencies[k] > 0 ? mid - gap / 2 : mid + gap / 2;
      svg.stream() << "<circle cx=\"" << x1 << "\" cy=\"" << y << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    }
  }
  return svg.finish();
}

std::string render_skeleton(const GraphSkeleton& g, const RenderSpec& spec) {
  Svg svg(spec.size);
  const double c = spec.size / 2.0, r = spec.size * 0.4;
  const std::size_t m = g.events.size();
  if (m == 0) return svg.finish();
  auto angle = [&](double k) { return std::numbers::pi / 2 - 2 * std::numbers::pi * k / static_cast<double>(m); };
  for (std::size_t k = 0; k < m; ++k) {
    const double a0 = angle(static_cast<double>(k)), a1 = angle(static_cast<double>(k + 1));
    svg.stream() << "<path d=\"M " << c + r * std::cos(a0) << ' ' << c - r * std::sin(a0) << " A " << r << ' ' << r
                 << " 0 0 1 " << c + r * std::cos(a1) << ' ' << c - r * std::sin(a1) << "\" fill=\"none\" stroke=\""
                 << interval_color(g.arcs[k].interval) << "\" stroke-width=\"4\"/>\n";
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = g.events[k];
    const double a = angle(static_cast<double>(k));
    const double x = c + r * std::cos(a), y = c - r * std::sin(a);
    const char* fill = e.kind == EventKind::ZeroPre ? "white" : e.kind == EventKind::PolePre ? "black" : e.kind == EventKind::OnePre ? "#f1c40f" : "#888";
    svg.stream() << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    std::string label = e.is_mark() ? (e.kind == EventKind::Mark0 ? "0" : "inf") : std::to_string(e.order);
    svg.stream() << "<text x=\"" << c + (r + 18) * std::cos(a) << "\" y=\"" << c - (r + 18) * std::sin(a)
                 << "\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  return svg.finish();
}

}  // namespace trigpatch
