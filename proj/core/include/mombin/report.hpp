#pragma once

// CSV and JSON renderings of the analysis results. Exact values are written
// as "p/q" or "a + b*sqrt(r)" strings; floats use 6 significant digits and
// are presentation only. Rows always follow the canonical shape order.

#include <string>
#include <vector>

#include "mombin/levelsets.hpp"
#include "mombin/mom.hpp"
#include "mombin/moments.hpp"

namespace mombin {

enum class Format { Csv, Json };

std::string format_double(double x);
std::string exact_str(const RootTerm& t);

/// Right-ragged inventory: K_s, v_1..v_Ks, t0_1, h_1, t0_2, h_2, ...
std::string inventory_report(const Inventory& inventory, Format format);

std::string mom_report(std::span<const MomClassification> classes, std::span<const SkewRankEntry> ranking,
                       const VennReport& venn, const Dataset& d, Format format);

std::string rank_report(std::span<const SkewRankEntry> ranking, const BandSizes& bands,
                        const SkewOptimal& optimal, const Dataset& d, Format format);

struct EstimatorRow {
  Shape shape;
  ParamPoint interior;
  Rational h_min;  // closure infimum of h over the cell
  Rational h_max;  // closure supremum
  EstimatorScores at_interior;
  EstimatorScores at_h_min;
  EstimatorScores at_h_max;
};

std::vector<EstimatorRow> estimator_rows(const Inventory& inventory, const Dataset& d);
std::string estimator_report(std::span<const EstimatorRow> rows, Format format);

std::string agreement_report(std::span<const AgreementCheck> checks, const Dataset& d, Format format);

std::string sampling_report(const SamplingReport& report, std::size_t shapes, std::uint64_t seed,
                            Format format);

}  // namespace mombin
