#include "randlp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "randlp/errors.hpp"
#include "randlp/geometry.hpp"
#include "randlp/instance_io.hpp"

namespace randlp {

namespace {

void require_planar(const LPInstance& inst) {
  if (inst.n != 2) {
    throw UnsupportedDimension("SVG rendering requires n = 2, got n = " + std::to_string(inst.n));
  }
}

// Keeps the part of `poly` with <a, x> <= b.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Inequality& q) {
  std::vector<Point2> out;
  if (poly.empty()) return out;
  auto value = [&](const Point2& p) { return q.a[0] * p[0] + q.a[1] * p[1] - q.b; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % poly.size()];
    const double vc = value(cur);
    const double vn = value(nxt);
    if (vc <= 0.0) out.push_back(cur);
    if ((vc < 0.0 && vn > 0.0) || (vc > 0.0 && vn < 0.0)) {
      const double t = vc / (vc - vn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

std::vector<Point2> dedupe(std::vector<Point2> poly, double tol) {
  std::vector<Point2> out;
  for (const auto& p : poly) {
    if (!out.empty() && std::abs(out.back()[0] - p[0]) <= tol &&
        std::abs(out.back()[1] - p[1]) <= tol) {
      continue;
    }
    out.push_back(p);
  }
  while (out.size() > 1 && std::abs(out.back()[0] - out.front()[0]) <= tol &&
         std::abs(out.back()[1] - out.front()[1]) <= tol) {
    out.pop_back();
  }
  return out;
}

struct Box {
  double lo;
  double hi;
};

// Portion of the line <a, x> = b inside box x box, or nullopt if it misses.
std::optional<std::pair<Point2, Point2>> line_segment(const Inequality& q, const Box& box) {
  const double nrm = std::hypot(q.a[0], q.a[1]);
  if (!(nrm > 0.0)) return std::nullopt;
  const double mid = (box.lo + box.hi) / 2.0;
  const double t0 = (q.a[0] * mid + q.a[1] * mid - q.b) / (nrm * nrm);
  const Point2 base{mid - t0 * q.a[0], mid - t0 * q.a[1]};
  const Point2 dir{-q.a[1] / nrm, q.a[0] / nrm};

  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 2; ++k) {
    if (dir[k] == 0.0) {
      if (base[k] < box.lo || base[k] > box.hi) return std::nullopt;
      continue;
    }
    double ta = (box.lo - base[k]) / dir[k];
    double tb = (box.hi - base[k]) / dir[k];
    if (ta > tb) std::swap(ta, tb);
    tmin = std::max(tmin, ta);
    tmax = std::min(tmax, tb);
  }
  if (!(tmin < tmax)) return std::nullopt;
  return std::pair{Point2{base[0] + tmin * dir[0], base[1] + tmin * dir[1]},
                   Point2{base[0] + tmax * dir[0], base[1] + tmax * dir[1]}};
}

void emit_line(std::ostream& os, const char* cls, const Point2& p, const Point2& q) {
  os << "    <line class=\"" << cls << "\" x1=\"" << format_real(p[0]) << "\" y1=\""
     << format_real(p[1]) << "\" x2=\"" << format_real(q[0]) << "\" y2=\"" << format_real(q[1])
     << "\"/>\n";
}

}  // namespace

std::vector<Point2> feasible_polygon(const LPInstance& inst) {
  require_planar(inst);
  const double alpha = inst.params.alpha;
  std::vector<Point2> poly{{-alpha, -alpha}, {2 * alpha, -alpha}, {2 * alpha, 2 * alpha},
                           {-alpha, 2 * alpha}};
  for (std::size_t i = 0; i < inst.m(); ++i) poly = clip(poly, inst.row(i));
  return dedupe(std::move(poly), 1e-9 * alpha);
}

std::string render_svg(const LPInstance& inst) {
  require_planar(inst);
  const GeneratorParams& p = inst.params;
  const double alpha = p.alpha;
  const Box box{-0.25 * alpha, 1.25 * alpha};
  const double span = box.hi - box.lo;
  const double pixels = 600.0;
  const double scale = pixels / span;
  const double stroke = 1.5 / scale;
  const CenterPoint h(2, alpha);
  const double hx = h.coords()[0];
  const double hy = h.coords()[1];

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels
     << "\" height=\"" << pixels << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     // y axis points up; everything inside the group is in problem coordinates
     << "  <g id=\"plot\" transform=\"matrix(" << format_real(scale) << " 0 0 "
     << format_real(-scale) << ' ' << format_real(-box.lo * scale) << ' '
     << format_real(box.hi * scale) << ")\" stroke-width=\"" << format_real(stroke)
     << "\" fill=\"none\">\n";

  const auto region = feasible_polygon(inst);
  os << "    <polygon class=\"feasible\" fill=\"red\" fill-opacity=\"0.25\" stroke=\"none\" "
        "points=\"";
  for (std::size_t i = 0; i < region.size(); ++i) {
    if (i) os << ' ';
    os << format_real(region[i][0]) << ',' << format_real(region[i][1]);
  }
  os << "\"/>\n";

  for (double radius : {p.rho, p.theta}) {
    os << "    <circle class=\"annulus\" cx=\"" << format_real(hx) << "\" cy=\"" << format_real(hy)
       << "\" r=\"" << format_real(radius) << "\" stroke=\"green\" stroke-dasharray=\""
       << format_real(6 * stroke) << ' ' << format_real(4 * stroke) << "\"/>\n";
  }

  os << "    <g stroke=\"black\">\n";
  for (const auto& q : inst.support) {
    if (auto seg = line_segment(q, box)) emit_line(os, "support", seg->first, seg->second);
  }
  os << "    </g>\n    <g stroke=\"red\">\n";
  for (const auto& q : inst.random) {
    if (auto seg = line_segment(q, box)) emit_line(os, "random", seg->first, seg->second);
  }
  os << "    </g>\n    <g stroke=\"purple\">\n";
  const double cn = std::hypot(inst.c[0], inst.c[1]);
  emit_line(os, "objective", {hx, hy},
            {hx + p.theta * inst.c[0] / cn, hy + p.theta * inst.c[1] / cn});
  os << "    </g>\n  </g>\n</svg>\n";
  return os.str();
}

}  // namespace randlp
