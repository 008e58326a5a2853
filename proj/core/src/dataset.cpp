#include "mombin/dataset.hpp"

#include <algorithm>
#include <fstream>

namespace mombin {

Dataset Dataset::from_values(std::vector<Rational> values) {
  if (values.size() < 2) throw DataError("dataset needs at least two values");
  std::sort(values.begin(), values.end());
  if (values.front() == values.back()) throw DataError("all data values are equal; variance is zero");

  Dataset d;
  d.values_ = std::move(values);
  for (const auto& v : d.values_) {
    if (d.distinct_.empty() || d.distinct_.back() != v) {
      d.distinct_.push_back(v);
      d.multiplicity_.push_back(1);
    } else {
      ++d.multiplicity_.back();
    }
    mpz_lcm(d.lcm_.get_mpz_t(), d.lcm_.get_mpz_t(), v.raw().get_den_mpz_t());
  }

  const Rational n(static_cast<long>(d.values_.size()));
  Rational sum;
  for (const auto& v : d.values_) sum += v;
  d.mean_ = sum / n;

  Rational s2;
  Rational s3;
  for (const auto& v : d.values_) {
    const Rational dev = v - d.mean_;
    s2 += dev * dev;
    s3 += dev * dev * dev;
  }
  d.sum_sq_dev_ = s2;
  d.variance_ = s2 / (n - Rational(1));
  d.gamma_ = standardized_third_moment(s3 / n, s2 / n);
  return d;
}

Dataset Dataset::from_strings(std::span<const std::string> records) {
  std::vector<Rational> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(parse_exact(r));
  return from_values(std::move(values));
}

RootTerm Dataset::fisher_pearson() const {
  if (size() < 3) throw DataError("Fisher-Pearson skewness requires n >= 3");
  const RootTerm c = fisher_pearson_factor(size());
  return {c.coefficient * gamma_.coefficient, c.radicand * gamma_.radicand};
}

Dataset load_dataset(std::span<const std::string> records) {
  std::vector<Rational> values;
  std::size_t line_no = 0;
  for (const auto& raw : records) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    try {
      values.push_back(parse_exact(raw));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return Dataset::from_values(std::move(values));
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return load_dataset(lines);
}

Rational sample_moment(const Dataset& d, int order, Centering centering) {
  if (order < 1 || order > 4) throw std::invalid_argument("sample_moment: order must be 1..4");
  const Rational shift = centering == Centering::Central ? d.mean() : Rational(0);
  Rational acc;
  for (const auto& v : d.values()) acc += pow(v - shift, static_cast<unsigned>(order));
  return acc / Rational(static_cast<long>(d.size()));
}

RootTerm fisher_pearson_factor(std::size_t n) {
  if (n < 3) throw DataError("Fisher-Pearson factor requires n >= 3");
  // n^{3/2} (n-1)^{1/2} / ((n-1)(n-2)) = n / ((n-1)(n-2)) * sqrt(n (n-1))
  const Rational nn(static_cast<long>(n));
  return {nn / ((nn - Rational(1)) * (nn - Rational(2))), nn * (nn - Rational(1))};
}

RootTerm standardized_third_moment(const Rational& m3, const Rational& m2) {
  if (m2.sign() <= 0) throw std::domain_error("skewness undefined for zero second moment");
  return {m3 / (m2 * m2), m2};
}

AgreementBins agreement_bins(const Dataset& d, int z) {
  if (z < 1) throw std::invalid_argument("agreement_bins: z must be >= 1");
  const Rational h(mpz_class(1), d.lcm_denominator() * z);
  return {d.min() - h / Rational(2), h};
}

}  // namespace mombin
