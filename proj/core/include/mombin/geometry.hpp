#pragma once

// Exact planar primitives over the (t0, h) bin-parameter plane.

#include <span>
#include <vector>

#include "mombin/exactnum.hpp"

namespace mombin {

template <class Scalar>
struct BasicPoint {
  Scalar t0;  // bin anchor
  Scalar h;   // bin width

  friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

using ParamPoint = BasicPoint<Rational>;
using SurdPoint = BasicPoint<Surd>;

inline SurdPoint to_surd(const ParamPoint& p) { return {Surd(p.t0), Surd(p.h)}; }

/// Lexicographic (t0, h) order, used to canonicalise vertex lists.
inline bool lex_less(const ParamPoint& a, const ParamPoint& b) {
  if (a.t0 != b.t0) return a.t0 < b.t0;
  return a.h < b.h;
}

/// Twice the signed area of triangle (a, b, c); > 0 for counter-clockwise.
Rational orient(const ParamPoint& a, const ParamPoint& b, const ParamPoint& c);

/// Orientation of c relative to the directed edge a -> b, for surd c.
int orient_sign(const ParamPoint& a, const ParamPoint& b, const SurdPoint& c);

/// Counter-clockwise convex hull without collinear points, starting at the
/// lexicographically smallest vertex.
std::vector<ParamPoint> convex_hull(std::vector<ParamPoint> points);

/// Signed area (positive for counter-clockwise polygons).
Rational polygon_area(std::span<const ParamPoint> polygon);

/// True when every consecutive triple turns strictly left.
bool is_strictly_convex(std::span<const ParamPoint> polygon);

enum class Location { Outside, Boundary, Inside };

/// Locates p against a counter-clockwise convex polygon.
Location locate(std::span<const ParamPoint> polygon, const SurdPoint& p);
inline Location locate(std::span<const ParamPoint> polygon, const ParamPoint& p) {
  return locate(polygon, to_surd(p));
}

/// Keeps the closed half-plane a*t0 + b*h + c >= 0.
std::vector<ParamPoint> clip(std::span<const ParamPoint> polygon, const Rational& a,
                             const Rational& b, const Rational& c);

}  // namespace mombin
