#include "mombin/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mombin {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string exact_str(const RootTerm& t) {
  if (t.coefficient.is_zero()) return "0";
  if (auto r = t.radicand.exact_sqrt()) return (t.coefficient * *r).str();
  return t.coefficient.str() + "*sqrt(" + t.radicand.str() + ")";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

std::string point_str(const SurdPoint& p) { return "(" + p.t0.str() + "; " + p.h.str() + ")"; }

std::string segment_str(const std::optional<Segment>& s) {
  if (!s) return "";
  return point_str(s->first) + " - " + point_str(s->second);
}

json point_json(const SurdPoint& p) {
  return {{"t0", p.t0.str()}, {"h", p.h.str()}, {"t0_float", p.t0.to_double()}, {"h_float", p.h.to_double()}};
}

json segment_json(const std::optional<Segment>& s) {
  if (!s) return nullptr;
  return json::array({point_json(s->first), point_json(s->second)});
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// nlohmann prints doubles with full round-trip precision; rounding first
// keeps JSON floats at the same 6 significant digits as CSV.
double rounded(double x) { return std::stod(format_double(x)); }

const char* flag(bool b) { return b ? "1" : "0"; }

void require_aligned(std::span<const MomClassification> classes, std::span<const SkewRankEntry> ranking) {
  if (classes.size() != ranking.size()) throw std::invalid_argument("report: class and rank lists differ in size");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].shape != ranking[i].shape) throw std::invalid_argument("report: lists not in canonical order");
  }
}

}  // namespace

std::string inventory_report(const Inventory& inventory, Format format) {
  const auto rows = canonical_inventory(inventory.cells);
  if (format == Format::Csv) {
    std::string out;
    for (const auto& r : rows) {
      std::vector<std::string> f;
      f.reserve(r.width());
      f.push_back(std::to_string(r.shape.bins()));
      for (int v : r.shape.counts) f.push_back(std::to_string(v));
      for (const auto& p : r.vertices) {
        f.push_back(p.t0.str());
        f.push_back(p.h.str());
      }
      out += join_csv(f);
    }
    return out;
  }
  json cells = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    json verts = json::array();
    for (const auto& p : rows[i].vertices) {
      verts.push_back({{"t0", p.t0.str()}, {"h", p.h.str()},
                       {"t0_float", rounded(p.t0.to_double())}, {"h_float", rounded(p.h.to_double())}});
    }
    const auto& cell = inventory.cells[i];
    cells.push_back({{"bins", rows[i].shape.bins()},
                     {"shape", rows[i].shape.counts},
                     {"vertices", verts},
                     {"area", cell.area().str()},
                     {"interior", {{"t0", cell.interior.t0.str()}, {"h", cell.interior.h.str()}}}});
  }
  json j = {{"max_bins", inventory.region.max_bins},
            {"exact_k", inventory.region.exact_k},
            {"delta", inventory.region.delta.str()},
            {"h_bound", inventory.region.bound.str()},
            {"region_area", inventory.region.area().str()},
            {"shapes", rows.size()},
            {"cells", cells}};
  return dump(j);
}

std::string mom_report(std::span<const MomClassification> classes, std::span<const SkewRankEntry> ranking,
                       const VennReport& venn, const Dataset& d, Format format) {
  require_aligned(classes, ranking);
  if (format == Format::Csv) {
    std::string out = "# " + venn.line() + "\n";
    out += "# mean_or_variance_consistent: " + std::to_string(venn.mean_or_variance()) + "\n";
    out += "# data_gamma: " + format_double(d.gamma().to_double()) + "\n";
    out += join_csv({"shape", "bins", "class", "M_g", "V_g", "MV_g", "J_g", "gamma", "gamma_exact", "sk",
                     "position", "T_gamma", "F_gamma", "Jg_and_T", "e_t0", "e_h", "m_segment", "v_segment",
                     "notes"});
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      const auto& r = ranking[i];
      out += join_csv({c.shape.str(), std::to_string(c.shape.bins()), std::string(1, to_char(c.cls)),
                       flag(c.mean_consistent()), flag(c.variance_consistent()),
                       flag(c.mean_consistent() && c.variance_consistent()), flag(c.joint()),
                       r.gamma ? format_double(r.gamma->to_double()) : "", r.gamma ? exact_str(*r.gamma) : "",
                       r.sk ? format_double(r.sk->value()) : "", r.ranked ? std::to_string(r.position) : "",
                       flag(r.in_t), flag(r.in_f), flag(r.in_jg_and_t), c.e_point ? c.e_point->t0.str() : "",
                       c.e_point ? c.e_point->h.str() : "", segment_str(c.m_segment), segment_str(c.v_segment),
                       c.boundary_notes()});
    }
    return out;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const auto& r = ranking[i];
    json row = {{"shape", c.shape.counts},
                {"class", std::string(1, to_char(c.cls))},
                {"M_g", c.mean_consistent()},
                {"V_g", c.variance_consistent()},
                {"MV_g", c.mean_consistent() && c.variance_consistent()},
                {"J_g", c.joint()},
                {"gamma", r.gamma ? json(rounded(r.gamma->to_double())) : json(nullptr)},
                {"gamma_exact", r.gamma ? json(exact_str(*r.gamma)) : json(nullptr)},
                {"sk", r.sk ? json(rounded(r.sk->value())) : json(nullptr)},
                {"position", r.ranked ? json(r.position) : json(nullptr)},
                {"T_gamma", r.in_t},
                {"F_gamma", r.in_f},
                {"Jg_and_T", r.in_jg_and_t},
                {"e_point", c.e_point ? point_json(*c.e_point) : json(nullptr)},
                {"m_segment", segment_json(c.m_segment)},
                {"v_segment", segment_json(c.v_segment)},
                {"notes", c.boundary_notes()}};
    rows.push_back(row);
  }
  json j = {{"venn",
             {{"line", venn.line()},
              {"shapes", venn.shapes},
              {"E", venn.e},
              {"D", venn.d},
              {"C", venn.c},
              {"B", venn.b},
              {"A", venn.a},
              {"mean_or_variance", venn.mean_or_variance()}}},
            {"data_gamma", rounded(d.gamma().to_double())},
            {"shapes", rows}};
  return dump(j);
}

std::string rank_report(std::span<const SkewRankEntry> ranking, const BandSizes& bands,
                        const SkewOptimal& optimal, const Dataset& d, Format format) {
  std::vector<const SkewRankEntry*> order;
  for (const auto& e : ranking) order.push_back(&e);
  // Presentation order: by g_g, canonical shape order within ties;
  // unranked single-bin shapes last.
  std::stable_sort(order.begin(), order.end(), [](const SkewRankEntry* a, const SkewRankEntry* b) {
    if (a->ranked != b->ranked) return a->ranked;
    if (!a->ranked) return false;
    return compare(*a->gamma, *b->gamma) < 0;
  });
  auto names = [](const std::vector<Shape>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.str());
    return out;
  };
  if (format == Format::Csv) {
    std::string out = "# data_gamma: " + format_double(d.gamma().to_double()) + "\n";
    out += "# band_t_per_side: " + std::to_string(bands.t) + "\n";
    out += "# band_f_per_side: " + std::to_string(bands.f) + "\n";
    auto joined = [&](const std::vector<Shape>& v) {
      std::string s;
      for (const auto& n : names(v)) s += (s.empty() ? "" : " ") + std::string("(") + n + ")";
      return s;
    };
    out += "# skewness_optimal: " + joined(optimal.overall) + "\n";
    out += "# skewness_optimal_in_J_g: " + joined(optimal.joint) + "\n";
    out += join_csv({"shape", "class", "gamma", "gamma_exact", "sk", "position", "T_gamma", "F_gamma", "Jg_and_T"});
    for (const auto* e : order) {
      out += join_csv({e->shape.str(), std::string(1, to_char(e->cls)),
                       e->ranked ? format_double(e->gamma->to_double()) : "", e->ranked ? exact_str(*e->gamma) : "",
                       e->ranked ? format_double(e->sk->value()) : "", e->ranked ? std::to_string(e->position) : "",
                       flag(e->in_t), flag(e->in_f), flag(e->in_jg_and_t)});
    }
    return out;
  }
  json rows = json::array();
  for (const auto* e : order) {
    rows.push_back({{"shape", e->shape.counts},
                    {"class", std::string(1, to_char(e->cls))},
                    {"gamma", e->ranked ? json(rounded(e->gamma->to_double())) : json(nullptr)},
                    {"gamma_exact", e->ranked ? json(exact_str(*e->gamma)) : json(nullptr)},
                    {"sk", e->ranked ? json(rounded(e->sk->value())) : json(nullptr)},
                    {"position", e->ranked ? json(e->position) : json(nullptr)},
                    {"T_gamma", e->in_t},
                    {"F_gamma", e->in_f},
                    {"Jg_and_T", e->in_jg_and_t}});
  }
  json j = {{"data_gamma", rounded(d.gamma().to_double())},
            {"data_gamma_exact", exact_str(d.gamma())},
            {"band_t_per_side", bands.t},
            {"band_f_per_side", bands.f},
            {"skewness_optimal", names(optimal.overall)},
            {"skewness_optimal_in_J_g", names(optimal.joint)},
            {"ranking", rows}};
  return dump(j);
}

std::vector<EstimatorRow> estimator_rows(const Inventory& inventory, const Dataset& d) {
  std::vector<EstimatorRow> rows;
  rows.reserve(inventory.cells.size());
  for (const auto& cell : inventory.cells) {
    EstimatorRow r;
    r.shape = cell.shape;
    r.interior = cell.interior;
    r.h_min = cell.vertices.front().h;
    r.h_max = r.h_min;
    for (const auto& v : cell.vertices) {
      r.h_min = std::min(r.h_min, v.h);
      r.h_max = std::max(r.h_max, v.h);
    }
    r.at_interior = estimator_scores(cell.shape, Surd(cell.interior.h), d);
    r.at_h_min = estimator_scores(cell.shape, Surd(r.h_min), d);
    r.at_h_max = estimator_scores(cell.shape, Surd(r.h_max), d);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string estimator_report(std::span<const EstimatorRow> rows, Format format) {
  if (format == Format::Csv) {
    std::string out = join_csv({"shape", "interior_t0", "interior_h", "ucv", "log_ml", "closure_h_min",
                                "closure_ucv_at_h_min", "closure_log_ml_at_h_min", "closure_h_max",
                                "closure_ucv_at_h_max", "closure_log_ml_at_h_max"});
    for (const auto& r : rows) {
      out += join_csv({r.shape.str(), r.interior.t0.str(), r.interior.h.str(), format_double(r.at_interior.ucv),
                       format_double(r.at_interior.log_likelihood), r.h_min.str(), format_double(r.at_h_min.ucv),
                       format_double(r.at_h_min.log_likelihood), r.h_max.str(), format_double(r.at_h_max.ucv),
                       format_double(r.at_h_max.log_likelihood)});
    }
    return out;
  }
  auto scores = [](const Rational& h, const EstimatorScores& s) {
    return json{{"h", h.str()}, {"ucv", rounded(s.ucv)}, {"log_ml", rounded(s.log_likelihood)}};
  };
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"shape", r.shape.counts},
                   {"interior", {{"t0", r.interior.t0.str()}, {"h", r.interior.h.str()},
                                 {"ucv", rounded(r.at_interior.ucv)},
                                 {"log_ml", rounded(r.at_interior.log_likelihood)}}},
                   {"closure_h_min", scores(r.h_min, r.at_h_min)},
                   {"closure_h_max", scores(r.h_max, r.at_h_max)}});
  }
  return dump(json{{"estimators", arr}});
}

std::string agreement_report(std::span<const AgreementCheck> checks, const Dataset& d, Format format) {
  if (format == Format::Csv) {
    std::string out = "# Q: " + d.lcm_denominator().get_str() + "\n";
    out += join_csv({"z", "t0", "h", "bins", "raw_1", "raw_2", "raw_3", "raw_4", "central_1", "central_2",
                     "central_3", "central_4", "verdict"});
    for (const auto& c : checks) {
      std::vector<std::string> f{std::to_string(c.z), c.bins.anchor.str(), c.bins.width.str(),
                                 std::to_string(c.shape.bins())};
      for (bool b : c.raw) f.emplace_back(flag(b));
      for (bool b : c.central) f.emplace_back(flag(b));
      f.emplace_back(c.all_match() ? "moments 1-4 match exactly" : "mismatch");
      out += join_csv(f);
    }
    return out;
  }
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"z", c.z},
                   {"t0", c.bins.anchor.str()},
                   {"h", c.bins.width.str()},
                   {"bins", c.shape.bins()},
                   {"raw", c.raw},
                   {"central", c.central},
                   {"all_match", c.all_match()}});
  }
  return dump(json{{"Q", d.lcm_denominator().get_str()}, {"checks", arr}});
}

std::string sampling_report(const SamplingReport& report, std::size_t shapes, std::uint64_t seed, Format format) {
  if (format == Format::Csv) {
    std::string out = join_csv({"seed", "samples", "draws", "mismatches", "coverage", "shapes"});
    out += join_csv({std::to_string(seed), std::to_string(report.samples), std::to_string(report.draws),
                     std::to_string(report.mismatches), std::to_string(report.coverage()), std::to_string(shapes)});
    for (const auto& f : report.first_failures) out += "# " + f + "\n";
    return out;
  }
  return dump(json{{"seed", seed},
                   {"samples", report.samples},
                   {"draws", report.draws},
                   {"mismatches", report.mismatches},
                   {"coverage", report.coverage()},
                   {"shapes", shapes},
                   {"failures", report.first_failures}});
}

}  // namespace mombin
