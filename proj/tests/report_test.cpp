#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "mombin/report.hpp"
#include "oracles.hpp"

using namespace mombin;
using nlohmann::json;

namespace {

Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

struct Fixture {
  Dataset data = oracle::reference();
  Inventory inventory = build_inventory(data, RegionOptions{6, std::nullopt, false});
  std::vector<MomClassification> classes;
  std::vector<SkewRankEntry> ranking;

  Fixture() {
    classes = classify_all(inventory.cells, data);
    attach_segments(inventory.cells, data, classes);
    ranking = skewness_ranking(classes, data);
  }
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST(Report, Formatting) {
  EXPECT_EQ(format_double(-0.0288293400748), "-0.0288293");
  EXPECT_EQ(format_double(123.0), "123");
  EXPECT_EQ(exact_str(RootTerm{q(-3, 4), Rational(2)}), "-3/4*sqrt(2)");
  EXPECT_EQ(exact_str(RootTerm{q(1, 2), Rational(9)}), "3/2");
  EXPECT_EQ(exact_str(RootTerm{Rational(0), Rational(7)}), "0");
}

TEST(Report, InventoryCsvIsRightRagged) {
  const auto lines = data_lines(inventory_report(fx().inventory, Format::Csv));
  ASSERT_EQ(lines.size(), 123u);
  EXPECT_EQ(lines.front().rfind("1,12,", 0), 0u);
  const auto rows = canonical_inventory(fx().inventory.cells);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto commas = static_cast<std::size_t>(std::count(lines[i].begin(), lines[i].end(), ','));
    ASSERT_EQ(commas + 1, rows[i].width());
  }
}

TEST(Report, InventoryJsonRoundTripsExactCoordinates) {
  const json j = json::parse(inventory_report(fx().inventory, Format::Json));
  EXPECT_EQ(j["shapes"], 123);
  EXPECT_EQ(j["max_bins"], 6);
  ASSERT_EQ(j["cells"].size(), 123u);
  Rational total;
  for (std::size_t i = 0; i < j["cells"].size(); ++i) {
    const auto& c = j["cells"][i];
    const auto& cell = fx().inventory.cells[i];
    ASSERT_EQ(c["shape"].get<std::vector<int>>(), cell.shape.counts);
    for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
      ASSERT_EQ(parse_exact(c["vertices"][v]["t0"].get<std::string>()), cell.vertices[v].t0);
      ASSERT_EQ(parse_exact(c["vertices"][v]["h"].get<std::string>()), cell.vertices[v].h);
    }
    total += parse_exact(c["area"].get<std::string>());
  }
  EXPECT_EQ(total, parse_exact(j["region_area"].get<std::string>()));
}

TEST(Report, MomCsvAndJsonAgree) {
  const auto& f = fx();
  const VennReport v = venn_report(f.classes);
  const std::string csv = mom_report(f.classes, f.ranking, v, f.data, Format::Csv);
  EXPECT_NE(csv.find("# 123 = 19 + 32 + 12 + 17 + 43"), std::string::npos);
  const auto lines = data_lines(csv);
  ASSERT_EQ(lines.size(), 124u);  // header + rows
  EXPECT_EQ(lines[0].rfind("shape,bins,class,M_g,V_g,MV_g,J_g", 0), 0u);
  EXPECT_EQ(lines[1].rfind("12,1,B,1,0,0,0", 0), 0u);

  const json j = json::parse(mom_report(f.classes, f.ranking, v, f.data, Format::Json));
  EXPECT_EQ(j["venn"]["line"], v.line());
  EXPECT_EQ(j["venn"]["mean_or_variance"], 80);
  ASSERT_EQ(j["shapes"].size(), 123u);
  int e = 0;
  for (const auto& row : j["shapes"]) {
    if (row["J_g"].get<bool>()) {
      ++e;
      EXPECT_FALSE(row["e_point"].is_null());
    }
  }
  EXPECT_EQ(e, 19);
  EXPECT_THROW(mom_report(f.classes, std::span<const SkewRankEntry>(f.ranking).first(3), v, f.data, Format::Csv),
               std::invalid_argument);
}

TEST(Report, RankReportOrderedBySkewness) {
  const auto& f = fx();
  const BandSizes b = band_sizes(f.ranking.size(), q(1, 10), q(1, 20));
  const json j = json::parse(rank_report(f.ranking, b, skewness_optimal(f.ranking), f.data, Format::Json));
  EXPECT_EQ(j["band_t_per_side"], 13);
  EXPECT_EQ(j["band_f_per_side"], 7);
  EXPECT_EQ(j["skewness_optimal"][0], "2,2,2,3,2,1");
  double prev = -1e9;
  for (const auto& row : j["ranking"]) {
    if (row["gamma"].is_null()) continue;
    EXPECT_GE(row["gamma"].get<double>(), prev);
    prev = row["gamma"].get<double>();
  }
  const std::string csv = rank_report(f.ranking, b, skewness_optimal(f.ranking), f.data, Format::Csv);
  EXPECT_NE(csv.find("# skewness_optimal_in_J_g: (1,2,3,1,2,3)"), std::string::npos);
}

TEST(Report, EstimatorRowsUseClosureHeights) {
  const auto& f = fx();
  const auto rows = estimator_rows(f.inventory, f.data);
  ASSERT_EQ(rows.size(), 123u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ASSERT_LE(r.h_min, r.interior.h);
    ASSERT_GE(r.h_max, r.interior.h);
    // UCV of a fixed shape scales like 1/h
    ASSERT_NEAR(r.at_h_min.ucv * r.h_min.to_double(), r.at_h_max.ucv * r.h_max.to_double(), 1e-9);
  }
  const auto lines = data_lines(estimator_report(rows, Format::Csv));
  EXPECT_EQ(lines.size(), 124u);
  const json j = json::parse(estimator_report(rows, Format::Json));
  EXPECT_EQ(j["estimators"].size(), 123u);
}

TEST(Report, AgreementAndSampling) {
  const auto& f = fx();
  const std::vector<AgreementCheck> checks{agreement_check(f.data, 1), agreement_check(f.data, 2)};
  const std::string csv = agreement_report(checks, f.data, Format::Csv);
  EXPECT_NE(csv.find("moments 1-4 match exactly"), std::string::npos);
  EXPECT_NE(csv.find("# Q: 100"), std::string::npos);
  const json j = json::parse(agreement_report(checks, f.data, Format::Json));
  EXPECT_TRUE(j["checks"][1]["all_match"].get<bool>());

  const SamplingReport rep = sample_inventory(f.inventory, f.data, 200, 9);
  const json s = json::parse(sampling_report(rep, 123, 9, Format::Json));
  EXPECT_EQ(s["mismatches"], 0);
  EXPECT_EQ(s["samples"], 200);
  EXPECT_EQ(data_lines(sampling_report(rep, 123, 9, Format::Csv)).size(), 2u);
}

TEST(Report, CsvQuotesShapes) {
  const auto& f = fx();
  const std::string csv = mom_report(f.classes, f.ranking, venn_report(f.classes), f.data, Format::Csv);
  EXPECT_NE(csv.find("\n\"6,6\",2,E,1,1,1,1,"), std::string::npos);
}
