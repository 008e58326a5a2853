#pragma once

/**
 * @file levelsets.hpp
 * @brief Shape level sets in the (t0, h) plane.
 *
 * For a fixed sample and at most K bins, the admissible bin parameters form
 * the bounded region D0:
 *
 *     t0 <= x_min < t0 + h          (the first bin holds x_min)
 *     x_max < t0 + K h              (x_max lies in a bin indexed <= K)
 *     0 < h <= (x_max - x_min) + delta
 *
 * Lines t0 + k h = x (bin edge k on data value x) cut D0 into open convex
 * cells. Every point of one cell bins the data identically, and distinct
 * cells give distinct shapes, so the cells are the shape level sets.
 *
 * Enumeration sweeps horizontal strips between consecutive line-crossing
 * heights. Inside a strip no two lines cross, so the strip splits into
 * trapezoids ordered by t0; each trapezoid is tagged with its shape and the
 * closure of a level set is the convex hull of the corners of its
 * trapezoids.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <stdexcept>
#include <vector>

#include "mombin/dataset.hpp"
#include "mombin/geometry.hpp"
#include "mombin/shape.hpp"

namespace mombin {

/// Internal consistency failure during enumeration; never silently ignored.
class GeometryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// a*t0 + b*h + c >= 0, or > 0 when strict.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
  bool strict = false;

  int sign_at(const SurdPoint& p) const;
  bool admits(const SurdPoint& p) const;
};

struct RegionOptions {
  int max_bins = 0;
  std::optional<Rational> delta;  // defaults to default_delta()
  bool exact_k = false;
};

/// delta = 2 n (x_max - x_min). Past this height the clipped one- and
/// two-bin cells already show every mean/variance line crossing of their
/// unbounded level sets.
Rational default_delta(const Dataset& d);

struct Region {
  int max_bins = 0;
  Rational delta;
  bool exact_k = false;
  Rational bound;                     // (x_max - x_min) + delta
  std::vector<ParamPoint> vertices;   // closure, counter-clockwise
  std::vector<HalfPlane> constraints; // exact (half-open) membership

  bool contains(const SurdPoint& p) const;
  bool contains(const ParamPoint& p) const { return contains(to_surd(p)); }
  /// Inside every constraint with strict inequality.
  bool contains_strictly(const ParamPoint& p) const;
  Rational area() const { return polygon_area(vertices); }
};

/// Throws std::invalid_argument for K < 1 or delta <= 0.
Region build_region(const Dataset& d, int max_bins, const Rational& delta, bool exact_k = false);
Region build_region(const Dataset& d, const RegionOptions& options);

/// Bin-edge line t0 + k h = value.
struct EdgeLine {
  int k = 0;
  Rational value;

  Rational t0_at(const Rational& h) const { return value - Rational(k) * h; }
  /// Sign of t0 + k h - value at p.
  int side(const ParamPoint& p) const { return (p.t0 + Rational(k) * p.h - value).sign(); }
  friend bool operator==(const EdgeLine&, const EdgeLine&) = default;
};

/// One line per (k, distinct value), k = 1..K.
std::vector<EdgeLine> edge_lines(const Dataset& d, int max_bins);

struct LevelSet {
  Shape shape;
  std::vector<ParamPoint> vertices;  // closure, counter-clockwise
  ParamPoint interior;               // strictly inside, on no edge line

  std::size_t vertex_count() const { return vertices.size(); }
  Rational area() const { return polygon_area(vertices); }
};

/// Bins the sample with half-open bins [t0 + (k-1)h, t0 + kh). Throws
/// std::domain_error when the point violates t0 <= x_min < t0 + h,
/// x_max < t0 + K h or h > 0.
Shape bin_counts(const ParamPoint& p, const Dataset& d, int max_bins);
Shape bin_counts(const SurdPoint& p, const Dataset& d, int max_bins);

/// Mean of all vertices.
ParamPoint interior_point(std::span<const ParamPoint> vertices);

/// A point strictly inside the cell, off every edge line and strictly inside
/// the region. Tries the vertex mean, then the mean of the first three
/// vertices, then centroids of other vertex triples. Throws GeometryError for
/// a degenerate cell.
ParamPoint certified_interior_point(std::span<const ParamPoint> vertices,
                                    std::span<const EdgeLine> lines, const Region& region);

/// Returns the cells in canonical order (fewer bins first, then counts).
std::vector<LevelSet> enumerate_level_sets(const Region& region, std::span<const EdgeLine> lines,
                                           const Dataset& d);

/// One row of the canonical inventory: K_s, v_1..v_Ks, then vertex pairs.
struct InventoryRow {
  Shape shape;
  std::vector<ParamPoint> vertices;

  std::size_t width() const { return 1 + shape.counts.size() + 2 * vertices.size(); }
};

std::vector<InventoryRow> canonical_inventory(std::span<const LevelSet> cells);

struct Inventory {
  Region region;
  std::vector<EdgeLine> lines;
  std::vector<LevelSet> cells;

  /// Index of the cell whose interior contains p, if any.
  std::optional<std::size_t> locate_cell(const ParamPoint& p) const;
  std::optional<std::size_t> find(const Shape& s) const;
};

Inventory build_inventory(const Dataset& d, const RegionOptions& options);

/// Sampling oracle: exact rational points drawn uniformly from the bounding
/// box of D0 (mt19937_64, 32-bit grid), keeping those strictly inside D0 and
/// off every edge line. Each kept point is binned directly and must lie
/// inside the cell of the resulting shape.
struct SamplingReport {
  std::size_t samples = 0;
  std::size_t draws = 0;
  std::size_t mismatches = 0;
  std::vector<Shape> hit;              // distinct shapes, canonical order
  std::vector<std::string> first_failures;

  std::size_t coverage() const { return hit.size(); }
};

SamplingReport sample_inventory(const Inventory& inventory, const Dataset& d, std::size_t samples,
                                std::uint64_t seed);

}  // namespace mombin
