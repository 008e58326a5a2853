#pragma once

/**
 * @file mom.hpp
 * @brief Method-of-moments classification of shape level sets.
 *
 * Each cell falls into one of five situations:
 *
 *   A  neither the mean nor the variance can be matched
 *   B  mean only
 *   C  variance only
 *   D  mean and variance individually, never at the same (t0, h)
 *   E  a single (t0, h) in the cell matches both
 *
 * The mean objective m is affine in (t0, h) and the variance objective v
 * depends on h only, so on a convex cell a zero exists iff the vertex values
 * change sign. The joint solution is unique: h* from the variance, then t0*
 * from the mean.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mombin/levelsets.hpp"
#include "mombin/moments.hpp"

namespace mombin {

enum class MomClass { A, B, C, D, E };

char to_char(MomClass c);

/// How an objective value of exactly zero at a cell vertex is counted.
enum class ZeroAtVertex {
  Strict,       // needs a vertex > 0 and a vertex < 0
  NonPositive,  // a zero counts with the negative vertices
  Touching,     // a zero counts on either side (closed cell)
};

struct MomOptions {
  ZeroAtVertex zero_rule = ZeroAtVertex::NonPositive;
};

using Segment = std::pair<SurdPoint, SurdPoint>;

struct MomClassification {
  Shape shape;
  MomClass cls = MomClass::A;
  bool m_change = false;
  bool v_change = false;
  std::optional<SurdPoint> e_point;  // class E only
  std::optional<Segment> m_segment;  // filled by attach_segments()
  std::optional<Segment> v_segment;

  bool m_zero_at_vertex = false;
  bool v_zero_at_vertex = false;
  bool joint_on_boundary = false;  // joint point lies on the cell boundary

  bool mean_consistent() const { return cls == MomClass::B || cls == MomClass::D || cls == MomClass::E; }
  bool variance_consistent() const { return cls == MomClass::C || cls == MomClass::D || cls == MomClass::E; }
  bool joint() const { return cls == MomClass::E; }
  /// Human-readable list of the boundary flags, empty when none is set.
  std::string boundary_notes() const;
};

/// Unique (t0*, h*) matching the data mean and variance, if the shape has
/// more than one occupied bin.
std::optional<SurdPoint> joint_point(const Shape& s, const Dataset& d);

MomClassification classify(const LevelSet& cell, const Dataset& d, const MomOptions& options = {});

std::vector<MomClassification> classify_all(std::span<const LevelSet> cells, const Dataset& d,
                                            const MomOptions& options = {});

struct SolutionSegments {
  std::optional<Segment> m;
  std::optional<Segment> v;
};

/// Zero sets of m and v inside the closed cell, as endpoint pairs ordered by
/// (t0, h). A segment may degenerate to a single vertex. Throws
/// std::invalid_argument for classes A and E.
SolutionSegments solution_segments(const LevelSet& cell, const Dataset& d, const MomClassification& cls);

/// Computes segments for every B, C and D entry in place.
void attach_segments(std::span<const LevelSet> cells, const Dataset& d,
                     std::span<MomClassification> classes);

struct VennReport {
  std::size_t shapes = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t e = 0;

  std::size_t joint() const { return e; }
  std::size_t both_not_joint() const { return d; }
  std::size_t variance_only() const { return c; }
  std::size_t mean_only() const { return b; }
  std::size_t neither() const { return a; }
  std::size_t mean_or_variance() const { return shapes - a; }

  /// "S = E + D + C + B + A"
  std::string line() const;
};

VennReport venn_report(std::span<const MomClassification> classes);

struct SkewRankEntry {
  Shape shape;
  MomClass cls = MomClass::A;
  std::optional<RootTerm> gamma;     // empty for single-bin shapes
  std::optional<SkewDeviation> sk;   // g_g - g_x
  bool ranked = false;
  /// Outward position from g_x: -1, -2, ... below and +1, +2, ... at or
  /// above. Tied shapes share the position of the first of the group.
  int position = 0;
  bool in_t = false;
  bool in_f = false;
  bool in_jg_and_t = false;
};

struct BandSizes {
  std::size_t t = 0;  // per side
  std::size_t f = 0;
};

/// ceil(fraction * S) per side, S counting every shape.
BandSizes band_sizes(std::size_t shapes, const Rational& band_t, const Rational& band_f);

/// Entries are returned in canonical shape order. Bands are given as
/// fractions (1/10 for 10%).
std::vector<SkewRankEntry> skewness_ranking(std::span<const MomClassification> classes, const Dataset& d,
                                            const Rational& band_t = Rational(mpz_class(1), mpz_class(10)),
                                            const Rational& band_f = Rational(mpz_class(1), mpz_class(20)));

struct SkewOptimal {
  std::vector<Shape> overall;  // minimal |g_g - g_x|
  std::vector<Shape> joint;    // minimal |g_g - g_x| among class E
};

SkewOptimal skewness_optimal(std::span<const SkewRankEntry> ranking);

}  // namespace mombin
