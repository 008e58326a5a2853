#pragma once

/**
 * @file moments.hpp
 * @brief Grouped-data and density-histogram moments of a histogram shape.
 *
 * Grouped moments replace every value by its bin midpoint t0 + (k - 1/2)h.
 * With kbar = sum(k v_k)/n and SSR = sum v_k (k - kbar)^2:
 *
 *     mean      = t0 + h (kbar - 1/2)
 *     variance  = h^2 SSR / (n - 1)
 *     density variance = variance + h^2/12
 *
 * Skewness depends on the counts only, never on (t0, h), so it is a
 * property of the shape and constant over its level set.
 */

#include <array>
#include <optional>

#include "mombin/dataset.hpp"
#include "mombin/geometry.hpp"
#include "mombin/shape.hpp"

namespace mombin {

/// sum(k v_k) / n with bins numbered from 1.
Rational mean_bin_index(const Shape& s);
/// sum v_k (k - kbar)^2.
Rational bin_index_ssr(const Shape& s);
/// sum v_k (k - kbar)^3.
Rational bin_index_third(const Shape& s);

/// Gamma skewness of the shape. Throws std::domain_error for single-bin shapes.
RootTerm shape_gamma(const Shape& s);
/// Fisher-Pearson coefficient of the shape (n >= 3).
RootTerm shape_fisher_pearson(const Shape& s);
/// Skewness of the step-function density: m3 / (m2 + 1/12)^{3/2}.
RootTerm shape_density_gamma(const Shape& s);

struct GroupedStats {
  Rational kbar;
  ExactScalar mean;
  ExactScalar variance;          // divisor n - 1
  Rational ssr;
  std::optional<RootTerm> gamma;  // empty when ssr == 0
  std::optional<RootTerm> fisher_pearson;
  ExactScalar density_variance;  // variance + h^2/12
  std::optional<RootTerm> density_gamma;
};

/// Throws std::invalid_argument when the shape's total differs from n.
GroupedStats grouped_stats(const Shape& s, const SurdPoint& p, const Dataset& d);
GroupedStats grouped_stats(const Shape& s, const ParamPoint& p, const Dataset& d);

/// Points where the grouped mean equals the data mean:
/// h = intercept + slope * t0 with slope = -1/(kbar - 1/2).
struct MeanLine {
  Rational slope;
  Rational intercept;

  Rational h_at(const Rational& t0) const { return intercept + slope * t0; }
  ExactScalar t0_at(const ExactScalar& h) const { return (h - Surd(intercept)) / slope; }
};

MeanLine mean_line(const Shape& s, const Dataset& d);

/// Squared bin width at which the grouped variance equals s_x^2; the
/// variance line is horizontal at h = sqrt(h_squared).
struct VarianceHeight {
  Rational h_squared;

  ExactScalar height() const { return Surd::sqrt(h_squared); }
};

/// Throws std::domain_error for shapes with SSR == 0.
VarianceHeight variance_height(const Shape& s, const Dataset& d);

/// g_g - g_x, exact-backed.
struct SkewDeviation {
  RootTerm shape;
  RootTerm data;

  int sign() const;
  double value() const { return shape.to_double() - data.to_double(); }
};

struct Objectives {
  ExactScalar m;                   // grouped mean - data mean
  ExactScalar v;                   // grouped variance - data variance
  std::optional<SkewDeviation> sk;  // empty for single-bin shapes
};

Objectives objectives(const Shape& s, const SurdPoint& p, const Dataset& d);
Objectives objectives(const Shape& s, const ParamPoint& p, const Dataset& d);

/// m(t0, h) = t0 + h (kbar - 1/2) - xbar.
ExactScalar mean_objective(const Shape& s, const SurdPoint& p, const Dataset& d);
/// v(t0, h) = h^2 SSR/(n - 1) - s_x^2.
ExactScalar variance_objective(const Shape& s, const SurdPoint& p, const Dataset& d);

/// Grouped moment of order 1..4 about 0 (Raw) or the grouped mean
/// (Central), divisor n, with every value replaced by its bin midpoint.
Rational grouped_moment(const Shape& s, const ParamPoint& p, int order, Centering centering);

/// Grouped moments against sample moments on the agreement bins for z.
struct AgreementCheck {
  int z = 0;
  AgreementBins bins;
  Shape shape;
  std::array<bool, 4> raw{};
  std::array<bool, 4> central{};

  bool all_match() const;
};

AgreementCheck agreement_check(const Dataset& d, int z);

struct EstimatorScores {
  double ucv;             // unbiased cross-validation MISE estimate
  double log_likelihood;  // sum v_k log(v_k/(n h)), 0 log 0 = 0
};

EstimatorScores estimator_scores(const Shape& s, const ExactScalar& h, const Dataset& d);

/// [2 - (n+1)/n^2 sum v_k^2] / ((n - 1) h), exact for rational h.
Rational ucv_score(const Shape& s, const Rational& h);
/// prod (v_k/(n h))^{v_k} with 0^0 = 1. Intended for small n.
Rational likelihood(const Shape& s, const Rational& h);
double log_likelihood(const Shape& s, double h);

}  // namespace mombin
