#include "mombin/geometry.hpp"

#include <algorithm>

namespace mombin {

Rational orient(const ParamPoint& a, const ParamPoint& b, const ParamPoint& c) {
  return (b.t0 - a.t0) * (c.h - a.h) - (b.h - a.h) * (c.t0 - a.t0);
}

int orient_sign(const ParamPoint& a, const ParamPoint& b, const SurdPoint& c) {
  const Surd v = Surd(b.t0 - a.t0) * (c.h - Surd(a.h)) - Surd(b.h - a.h) * (c.t0 - Surd(a.t0));
  return v.sign();
}

std::vector<ParamPoint> convex_hull(std::vector<ParamPoint> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  // Andrew's monotone chain; pops on non-left turns to drop collinear points.
  std::vector<ParamPoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], points[i]).sign() <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational polygon_area(std::span<const ParamPoint> polygon) {
  Rational twice;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % polygon.size()];
    twice += p.t0 * q.h - q.t0 * p.h;
  }
  return twice / Rational(2);
}

bool is_strictly_convex(std::span<const ParamPoint> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]).sign() <= 0) return false;
  }
  return true;
}

Location locate(std::span<const ParamPoint> polygon, const SurdPoint& p) {
  bool on_edge = false;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const int s = orient_sign(polygon[i], polygon[(i + 1) % polygon.size()], p);
    if (s < 0) return Location::Outside;
    if (s == 0) on_edge = true;
  }
  return on_edge ? Location::Boundary : Location::Inside;
}

std::vector<ParamPoint> clip(std::span<const ParamPoint> polygon, const Rational& a,
                             const Rational& b, const Rational& c) {
  auto eval = [&](const ParamPoint& p) { return a * p.t0 + b * p.h + c; };
  std::vector<ParamPoint> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % polygon.size()];
    const Rational fp = eval(p);
    const Rational fq = eval(q);
    if (fp.sign() >= 0) out.push_back(p);
    if (fp.sign() * fq.sign() < 0) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.t0 + t * (q.t0 - p.t0), p.h + t * (q.h - p.h)});
    }
  }
  return convex_hull(std::move(out));
}

}  // namespace mombin
