#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace mombin::cli {

namespace {

struct Loaded {
  Dataset data;
  Inventory inventory;
};

Loaded load(const RunConfig& config) {
  config.validate();
  Loaded l{load_dataset(config.input), {}};
  l.inventory = build_inventory(l.data, config.region());
  return l;
}

std::string shape_summary(const Loaded& l) {
  std::ostringstream os;
  os << "n = " << l.data.size() << ", K = " << l.inventory.region.max_bins
     << ", S = " << l.inventory.cells.size() << " shapes";
  return os.str();
}

Rational percent(const Rational& pct) { return pct / Rational(100); }

std::vector<MomClassification> classified(const Loaded& l, const RunConfig& config) {
  auto classes = classify_all(l.inventory.cells, l.data, MomOptions{config.zero_rule});
  attach_segments(l.inventory.cells, l.data, classes);
  return classes;
}

}  // namespace

void RunConfig::validate() const {
  if (max_bins < 1) throw std::invalid_argument("--max-bins must be >= 1");
  if (delta && delta->sign() <= 0) throw std::invalid_argument("--delta must be > 0");
  for (const auto* b : {&band_t_pct, &band_f_pct}) {
    if (b->sign() < 0 || *b > Rational(100)) throw std::invalid_argument("band percentages must lie in [0, 100]");
  }
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (z < 1) throw std::invalid_argument("--z must be >= 1");
}

CommandResult cmd_shapes(const RunConfig& config) {
  const Loaded l = load(config);
  return {kOk, inventory_report(l.inventory, config.format), shape_summary(l)};
}

CommandResult cmd_mom(const RunConfig& config) {
  const Loaded l = load(config);
  const auto classes = classified(l, config);
  const auto ranking =
      skewness_ranking(classes, l.data, percent(config.band_t_pct), percent(config.band_f_pct));
  const VennReport venn = venn_report(classes);
  return {kOk, mom_report(classes, ranking, venn, l.data, config.format),
          shape_summary(l) + "\n" + venn.line() + " (mean or variance consistent: " +
              std::to_string(venn.mean_or_variance()) + ")"};
}

CommandResult cmd_rank(const RunConfig& config) {
  const Loaded l = load(config);
  const auto classes = classified(l, config);
  const Rational bt = percent(config.band_t_pct);
  const Rational bf = percent(config.band_f_pct);
  const auto ranking = skewness_ranking(classes, l.data, bt, bf);
  const BandSizes bands = band_sizes(ranking.size(), bt, bf);
  return {kOk, rank_report(ranking, bands, skewness_optimal(ranking), l.data, config.format),
          shape_summary(l) + "\nbands per side: T = " + std::to_string(bands.t) + ", F = " + std::to_string(bands.f)};
}

CommandResult cmd_estimators(const RunConfig& config) {
  const Loaded l = load(config);
  const auto rows = estimator_rows(l.inventory, l.data);
  return {kOk, estimator_report(rows, config.format), shape_summary(l)};
}

CommandResult cmd_agree(const RunConfig& config) {
  config.validate();
  const Dataset d = load_dataset(config.input);
  const std::vector<AgreementCheck> checks{agreement_check(d, config.z)};
  const bool ok = checks.front().all_match();
  return {ok ? kOk : kVerifyFailed, agreement_report(checks, d, config.format),
          "z = " + std::to_string(config.z) + ": " + (ok ? "moments 1-4 match exactly" : "moment mismatch")};
}

CommandResult cmd_verify(const RunConfig& config) {
  const Loaded l = load(config);
  const SamplingReport rep = sample_inventory(l.inventory, l.data, config.samples, config.seed);
  std::ostringstream s;
  s << shape_summary(l) << "\n"
    << rep.samples << " samples, " << rep.mismatches << " mismatches, " << rep.coverage() << " shapes hit";
  return {rep.mismatches == 0 ? kOk : kVerifyFailed,
          sampling_report(rep, l.inventory.cells.size(), config.seed, config.format), s.str()};
}

namespace {

struct RawOptions {
  std::string input;
  int max_bins = 0;
  std::string delta = "auto";
  bool exact_k = false;
  std::string format = "csv";
  std::string band_t = "10";
  std::string band_f = "5";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  int z = 1;
  std::string vertex_zero = "nonpositive";
  std::string output;
};

void add_common(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--input", o.input, "Data file, one value per line")->required()->check(CLI::ExistingFile);
  cmd->add_option("--max-bins", o.max_bins, "Largest number of bins K")->required();
  cmd->add_option("--delta", o.delta, "Height margin above the data range: P/Q, decimal or 'auto'");
  cmd->add_flag("--exact-k", o.exact_k, "Keep only shapes with exactly K bins");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--band-t", o.band_t, "T band, percent of shapes per side");
  cmd->add_option("--band-f", o.band_f, "F band, percent of shapes per side");
  cmd->add_option("--vertex-zero", o.vertex_zero, "Counting of a zero objective at a cell vertex")
      ->check(CLI::IsMember({"nonpositive", "strict", "touching"}));
  cmd->add_option("--output", o.output, "Write the report here instead of stdout");
}

RunConfig to_config(const RawOptions& o) {
  RunConfig c;
  c.input = o.input;
  c.max_bins = o.max_bins;
  if (o.delta != "auto") c.delta = parse_exact(o.delta);
  c.exact_k = o.exact_k;
  c.format = o.format == "json" ? Format::Json : Format::Csv;
  c.band_t_pct = parse_exact(o.band_t);
  c.band_f_pct = parse_exact(o.band_f);
  c.samples = o.samples;
  c.seed = o.seed;
  c.z = o.z;
  if (o.vertex_zero == "strict") c.zero_rule = ZeroAtVertex::Strict;
  else if (o.vertex_zero == "touching") c.zero_rule = ZeroAtVertex::Touching;
  else c.zero_rule = ZeroAtVertex::NonPositive;
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform bin width histogram shapes and method-of-moments analysis", "mombin"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mombin 0.1.0");

  RawOptions o;
  using Command = CommandResult (*)(const RunConfig&);
  const std::vector<std::tuple<const char*, const char*, Command>> commands{
      {"shapes", "Write the shape level set inventory", cmd_shapes},
      {"mom", "Classify shapes by mean and variance consistency", cmd_mom},
      {"rank", "Rank shapes by skewness deviation from the data", cmd_rank},
      {"estimators", "UCV and log-likelihood scores per shape", cmd_estimators},
      {"agree", "Check the moment-agreement bins", cmd_agree},
      {"verify", "Sampling check of the inventory", cmd_verify},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    if (std::string(name) == "verify") {
      sub->add_option("--samples", o.samples, "Number of accepted sample points");
      sub->add_option("--seed", o.seed, "Random seed");
    }
    if (std::string(name) == "agree") sub->add_option("--z", o.z, "Bin refinement factor");
    subs.emplace_back(sub, fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Command fn = nullptr;
  for (const auto& [sub, f] : subs) {
    if (sub->parsed()) fn = f;
  }

  RunConfig config;
  try {
    config = to_config(o);
    config.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CommandResult result;
  try {
    result = fn(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kData;
  }

  if (o.output.empty()) {
    out << result.report;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << result.report)) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsage;
    }
  }
  err << result.summary << "\n";
  return result.exit_code;
}

}  // namespace mombin::cli
