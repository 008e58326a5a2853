#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mombin/exactnum.hpp"

namespace mombin {

/// Raised for data that cannot support the analysis (too few values, zero
/// variance, unreadable input).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Centering { Raw, Central };

/// Sorted exact sample with cached statistics. Immutable after construction.
class Dataset {
 public:
  /// Throws DataError when fewer than two values are given or all are equal.
  static Dataset from_values(std::vector<Rational> values);
  static Dataset from_strings(std::span<const std::string> records);

  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& distinct_values() const { return distinct_; }
  /// Multiplicity of distinct_values()[i].
  const std::vector<int>& multiplicities() const { return multiplicity_; }

  std::size_t size() const { return values_.size(); }
  const Rational& min() const { return values_.front(); }
  const Rational& max() const { return values_.back(); }
  Rational range() const { return max() - min(); }

  const Rational& mean() const { return mean_; }
  /// s_x^2 with divisor n - 1.
  const Rational& variance() const { return variance_; }
  /// Sum of squared deviations from the mean, (n - 1) s_x^2.
  const Rational& sum_sq_dev() const { return sum_sq_dev_; }

  /// Gamma skewness m3 / m2^{3/2} with divisor n in both central moments.
  const RootTerm& gamma() const { return gamma_; }
  /// Fisher-Pearson coefficient n^{3/2}(n-1)^{1/2}/((n-1)(n-2)) * g_x.
  /// Throws DataError for n < 3.
  RootTerm fisher_pearson() const;

  /// Least common multiple of the reduced denominators.
  const mpz_class& lcm_denominator() const { return lcm_; }

 private:
  Dataset() = default;

  std::vector<Rational> values_;
  std::vector<Rational> distinct_;
  std::vector<int> multiplicity_;
  Rational mean_;
  Rational variance_;
  Rational sum_sq_dev_;
  RootTerm gamma_;
  mpz_class lcm_{1};
};

/// Reads one value per line; blank lines and lines starting with '#' are
/// skipped. Parse failures are reported with their line number.
Dataset load_dataset(const std::filesystem::path& path);
Dataset load_dataset(std::span<const std::string> records);

/// Exact sample moment of the given order (1..4). Divisor n throughout.
Rational sample_moment(const Dataset& d, int order, Centering centering);

/// n^{3/2}(n-1)^{1/2} / ((n-1)(n-2)) as a root term; requires n >= 3.
RootTerm fisher_pearson_factor(std::size_t n);

/// gamma = m3 / m2^{3/2} written as (m3/m2^2) * sqrt(m2). m2 must be > 0.
RootTerm standardized_third_moment(const Rational& m3, const Rational& m2);

struct AgreementBins {
  Rational anchor;  // t0 = x_min - h/2
  Rational width;   // h = 1/(zQ)
};

/// Bins of width 1/(zQ) whose midpoints fall on the data grid, so every
/// occupied midpoint is a data value and grouped moments equal sample moments.
AgreementBins agreement_bins(const Dataset& d, int z);

}  // namespace mombin
