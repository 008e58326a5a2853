#pragma once

// Test-only reference implementations, deliberately built from first
// principles rather than from the library's sweep or closed forms.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mombin/levelsets.hpp"
#include "mombin/moments.hpp"

namespace mombin::oracle {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(MOMBIN_TEST_DATA) / name;
}

inline Dataset reference() { return load_dataset(std::filesystem::path(MOMBIN_REFERENCE_DATA)); }

/// Closure of a shape's level set: D0's closure intersected with the bin
/// constraints t0 + (k-1)h <= x <= t0 + kh of every sorted value.
inline std::vector<ParamPoint> half_plane_cell(const Shape& s, const Dataset& d, const Region& region) {
  std::vector<ParamPoint> poly = region.vertices;
  std::size_t next = 0;
  for (int k = 1; k <= s.bins() && !poly.empty(); ++k) {
    for (int c = 0; c < s[static_cast<std::size_t>(k - 1)]; ++c) {
      const Rational& x = d.values()[next++];
      // x - t0 - (k-1)h >= 0
      poly = clip(poly, Rational(-1), Rational(-(k - 1)), x);
      if (poly.empty()) return poly;
      // t0 + k h - x >= 0
      poly = clip(poly, Rational(1), Rational(k), -x);
      if (poly.empty()) return poly;
    }
  }
  if (poly.size() < 3) return {};
  return poly;
}

/// Grouped moments by expanding every observation into its bin midpoint.
struct BruteMoments {
  Rational mean;
  Rational variance;  // divisor n - 1
  Rational m2;        // divisor n
  Rational m3;
};

inline BruteMoments brute_grouped(const Shape& s, const ParamPoint& p) {
  std::vector<Rational> mids;
  for (int k = 1; k <= s.bins(); ++k) {
    const Rational mid = p.t0 + p.h * (Rational(k) - Rational(mpz_class(1), mpz_class(2)));
    for (int c = 0; c < s[static_cast<std::size_t>(k - 1)]; ++c) mids.push_back(mid);
  }
  const Rational n(static_cast<long>(mids.size()));
  BruteMoments b;
  for (const auto& m : mids) b.mean += m;
  b.mean = b.mean / n;
  Rational s2, s3;
  for (const auto& m : mids) {
    s2 += (m - b.mean) * (m - b.mean);
    s3 += (m - b.mean) * (m - b.mean) * (m - b.mean);
  }
  b.variance = s2 / (n - Rational(1));
  b.m2 = s2 / n;
  b.m3 = s3 / n;
  return b;
}

/// Random rational with the given denominator in [lo, hi].
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  return Rational(mpz_class(dist(rng)), mpz_class(den));
}

/// Random point strictly inside a cell: a positive convex combination of
/// its vertices.
inline ParamPoint random_interior(std::mt19937_64& rng, const std::vector<ParamPoint>& poly) {
  std::uniform_int_distribution<long> w(1, 1000);
  Rational total, t0, h;
  for (const auto& v : poly) {
    const Rational wi(w(rng));
    total += wi;
    t0 += wi * v.t0;
    h += wi * v.h;
  }
  return {t0 / total, h / total};
}

}  // namespace mombin::oracle
