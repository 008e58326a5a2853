#include "mombin/moments.hpp"

#include "mombin/levelsets.hpp"

#include <cmath>

namespace mombin {

namespace {

Rational n_of(const Shape& s) { return Rational(static_cast<long>(s.total())); }

Rational central_sum(const Shape& s, unsigned order) {
  const Rational kbar = mean_bin_index(s);
  Rational acc;
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    if (s.counts[i] == 0) continue;
    acc += Rational(s.counts[i]) * pow(Rational(static_cast<long>(i + 1)) - kbar, order);
  }
  return acc;
}

void require_matching(const Shape& s, const Dataset& d) {
  if (static_cast<std::size_t>(s.total()) != d.size()) {
    throw std::invalid_argument("shape " + s.str() + " does not hold n = " + std::to_string(d.size()) + " values");
  }
}

const Rational kHalf(mpz_class(1), mpz_class(2));
const Rational kTwelfth(mpz_class(1), mpz_class(12));

}  // namespace

Rational mean_bin_index(const Shape& s) {
  Rational acc;
  for (std::size_t i = 0; i < s.counts.size(); ++i) acc += Rational(static_cast<long>(i + 1) * s.counts[i]);
  return acc / n_of(s);
}

Rational bin_index_ssr(const Shape& s) { return central_sum(s, 2); }
Rational bin_index_third(const Shape& s) { return central_sum(s, 3); }

RootTerm shape_gamma(const Shape& s) {
  const Rational n = n_of(s);
  const Rational m2 = bin_index_ssr(s) / n;
  if (m2.is_zero()) throw std::domain_error("skewness undefined for single-bin shape " + s.str());
  return standardized_third_moment(bin_index_third(s) / n, m2);
}

RootTerm shape_fisher_pearson(const Shape& s) {
  const RootTerm g = shape_gamma(s);
  const RootTerm c = fisher_pearson_factor(static_cast<std::size_t>(s.total()));
  return {c.coefficient * g.coefficient, c.radicand * g.radicand};
}

RootTerm shape_density_gamma(const Shape& s) {
  const Rational n = n_of(s);
  const Rational m2 = bin_index_ssr(s) / n;
  if (m2.is_zero()) throw std::domain_error("skewness undefined for single-bin shape " + s.str());
  return standardized_third_moment(bin_index_third(s) / n, m2 + kTwelfth);
}

GroupedStats grouped_stats(const Shape& s, const SurdPoint& p, const Dataset& d) {
  require_matching(s, d);
  GroupedStats g;
  const Rational n = n_of(s);
  g.kbar = mean_bin_index(s);
  g.ssr = bin_index_ssr(s);
  g.mean = p.t0 + p.h * Surd(g.kbar - kHalf);
  const Surd h2 = p.h * p.h;
  g.variance = h2 * Surd(g.ssr / (n - Rational(1)));
  g.density_variance = g.variance + h2 * Surd(kTwelfth);
  if (!g.ssr.is_zero()) {
    g.gamma = shape_gamma(s);
    g.density_gamma = shape_density_gamma(s);
    if (s.total() >= 3) g.fisher_pearson = shape_fisher_pearson(s);
  }
  return g;
}

GroupedStats grouped_stats(const Shape& s, const ParamPoint& p, const Dataset& d) {
  return grouped_stats(s, to_surd(p), d);
}

MeanLine mean_line(const Shape& s, const Dataset& d) {
  require_matching(s, d);
  const Rational c = mean_bin_index(s) - kHalf;
  return {-Rational(1) / c, d.mean() / c};
}

VarianceHeight variance_height(const Shape& s, const Dataset& d) {
  require_matching(s, d);
  const Rational ssr = bin_index_ssr(s);
  if (ssr.is_zero()) throw std::domain_error("single-bin shape " + s.str() + " cannot match a positive variance");
  return {d.sum_sq_dev() / ssr};
}

int SkewDeviation::sign() const {
  const RootTerm terms[] = {shape, -data};
  return sign_of_sum(terms);
}

ExactScalar mean_objective(const Shape& s, const SurdPoint& p, const Dataset& d) {
  return p.t0 + p.h * Surd(mean_bin_index(s) - kHalf) - Surd(d.mean());
}

ExactScalar variance_objective(const Shape& s, const SurdPoint& p, const Dataset& d) {
  const Rational n = n_of(s);
  return p.h * p.h * Surd(bin_index_ssr(s) / (n - Rational(1))) - Surd(d.variance());
}

Objectives objectives(const Shape& s, const SurdPoint& p, const Dataset& d) {
  require_matching(s, d);
  Objectives o{mean_objective(s, p, d), variance_objective(s, p, d), std::nullopt};
  if (!bin_index_ssr(s).is_zero()) o.sk = SkewDeviation{shape_gamma(s), d.gamma()};
  return o;
}

Objectives objectives(const Shape& s, const ParamPoint& p, const Dataset& d) {
  return objectives(s, to_surd(p), d);
}

Rational grouped_moment(const Shape& s, const ParamPoint& p, int order, Centering centering) {
  if (order < 1 || order > 4) throw std::invalid_argument("moment order must be 1..4");
  const Rational n = n_of(s);
  Rational centre;
  if (centering == Centering::Central) centre = p.t0 + p.h * (mean_bin_index(s) - kHalf);
  Rational acc;
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    if (s.counts[i] == 0) continue;
    const Rational mid = p.t0 + p.h * (Rational(static_cast<long>(i + 1)) - kHalf);
    acc += Rational(s.counts[i]) * pow(mid - centre, static_cast<unsigned>(order));
  }
  return acc / n;
}

bool AgreementCheck::all_match() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!raw[i] || !central[i]) return false;
  }
  return true;
}

AgreementCheck agreement_check(const Dataset& d, int z) {
  AgreementCheck out;
  out.z = z;
  out.bins = agreement_bins(d, z);
  const ParamPoint p{out.bins.anchor, out.bins.width};
  const mpz_class last = floor((d.max() - p.t0) / p.h) + 1;
  out.shape = bin_counts(p, d, static_cast<int>(last.get_si()));
  for (int r = 1; r <= 4; ++r) {
    out.raw[r - 1] = grouped_moment(out.shape, p, r, Centering::Raw) == sample_moment(d, r, Centering::Raw);
    out.central[r - 1] =
        grouped_moment(out.shape, p, r, Centering::Central) == sample_moment(d, r, Centering::Central);
  }
  return out;
}

namespace {

Rational ucv_numerator(const Shape& s) {
  const Rational n = n_of(s);
  Rational sum_sq;
  for (int v : s.counts) sum_sq += Rational(static_cast<long>(v) * v);
  return Rational(2) - (n + Rational(1)) / (n * n) * sum_sq;
}

}  // namespace

Rational ucv_score(const Shape& s, const Rational& h) {
  if (h.sign() <= 0) throw std::domain_error("bin width must be positive");
  return ucv_numerator(s) / ((n_of(s) - Rational(1)) * h);
}

Rational likelihood(const Shape& s, const Rational& h) {
  if (h.sign() <= 0) throw std::domain_error("bin width must be positive");
  const Rational nh = n_of(s) * h;
  Rational out(1);
  for (int v : s.counts) {
    if (v > 0) out *= pow(Rational(v) / nh, static_cast<unsigned>(v));
  }
  return out;
}

double log_likelihood(const Shape& s, double h) {
  const double nh = static_cast<double>(s.total()) * h;
  double acc = 0.0;
  for (int v : s.counts) {
    if (v > 0) acc += v * std::log(v / nh);
  }
  return acc;
}

EstimatorScores estimator_scores(const Shape& s, const ExactScalar& h, const Dataset& d) {
  require_matching(s, d);
  if (h.sign() <= 0) throw std::domain_error("bin width must be positive");
  const double hd = h.to_double();
  const double ucv = h.is_rational() ? ucv_score(s, h.as_rational()).to_double()
                                     : ucv_numerator(s).to_double() / ((s.total() - 1) * hd);
  return {ucv, log_likelihood(s, hd)};
}

}  // namespace mombin
