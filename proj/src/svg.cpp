#include <algorithm>
#include <cmath>
#include <sstream>

#include "discarr/conegeom.hpp"
#include "discarr/errors.hpp"

namespace discarr {

namespace {

struct Pt {
  double x, y;
};

// Segment of a x + b y = c inside [x0,x1] x [y0,y1], if any.
std::optional<std::pair<Pt, Pt>> clip_line(double a, double b, double c, double x0, double x1, double y0,
                                           double y1) {
  std::vector<Pt> hits;
  auto keep = [&](double x, double y) {
    const double eps = 1e-9 * (1 + std::abs(x1 - x0) + std::abs(y1 - y0));
    if (x >= x0 - eps && x <= x1 + eps && y >= y0 - eps && y <= y1 + eps) hits.push_back({x, y});
  };
  if (b != 0) {
    keep(x0, (c - a * x0) / b);
    keep(x1, (c - a * x1) / b);
  }
  if (a != 0) {
    keep((c - b * y0) / a, y0);
    keep((c - b * y1) / a, y1);
  }
  if (hits.size() < 2) return std::nullopt;
  auto key = [&](const Pt& p) { return -b * p.x + a * p.y; };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                      [&](const Pt& p, const Pt& q) { return key(p) < key(q); });
  return std::pair{*lo, *hi};
}

}  // namespace

std::string render_svg(const Arrangement& h, const std::vector<SimplexCell>& cells) {
  if (h.m() != 2) throw PreconditionError("SVG output needs a line arrangement (m = 2)");
  const std::size_t n = h.n();

  std::vector<Pt> vertices;
  for (const auto& pair : k_subsets(n, 2)) {
    if (auto p = intersection_point(h, pair)) vertices.push_back({(*p)[0].to_double(), (*p)[1].to_double()});
  }
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  if (!vertices.empty()) {
    x0 = x1 = vertices[0].x;
    y0 = y1 = vertices[0].y;
    for (const auto& p : vertices) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const double w = std::max(x1 - x0, 1.0), hgt = std::max(y1 - y0, 1.0);
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  x0 = cx - w * 0.7;
  x1 = cx + w * 0.7;
  y0 = cy - hgt * 0.7;
  y1 = cy + hgt * 0.7;

  const double size = 600;
  const double scale = size / std::max(x1 - x0, y1 - y0);
  const double width = (x1 - x0) * scale, height = (y1 - y0) * scale;
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return (y1 - y) * scale; };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& cell : cells) {
    out << "<polygon fill=\"#f4c542\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
      if (i) out << ' ';
      out << sx(cell.vertices[i][0].to_double()) << ',' << sy(cell.vertices[i][1].to_double());
    }
    out << "\"><title>" << format_subset(cell.hyperplanes) << "</title></polygon>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double a = h.coeffs()(i, 0).to_double(), b = h.coeffs()(i, 1).to_double();
    const double c = h.constants()[i].to_double();
    const auto seg = clip_line(a, b, c, x0, x1, y0, y1);
    if (!seg) continue;
    out << "<line x1=\"" << sx(seg->first.x) << "\" y1=\"" << sy(seg->first.y) << "\" x2=\"" << sx(seg->second.x)
        << "\" y2=\"" << sy(seg->second.y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << sx(seg->second.x) << "\" y=\"" << sy(seg->second.y)
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#1f4e9a\">L" << i + 1 << "</text>\n";
  }
  for (const auto& p : vertices)
    out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"2.5\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace discarr
