#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "mombin/mom.hpp"
#include "mombin/report.hpp"

namespace mombin::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kVerifyFailed = 3 };

struct RunConfig {
  std::filesystem::path input;
  int max_bins = 0;
  std::optional<Rational> delta;  // empty: default_delta()
  bool exact_k = false;
  Format format = Format::Csv;
  Rational band_t_pct{10};
  Rational band_f_pct{5};
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  int z = 1;
  ZeroAtVertex zero_rule = ZeroAtVertex::NonPositive;

  /// Throws std::invalid_argument on K < 1, delta <= 0, bands outside
  /// [0, 100], samples < 1 or z < 1.
  void validate() const;
  RegionOptions region() const { return {max_bins, delta, exact_k}; }
};

struct CommandResult {
  int exit_code = kOk;
  std::string report;   // main output (file or stdout)
  std::string summary;  // one or two human lines for stderr
};

CommandResult cmd_shapes(const RunConfig& config);
CommandResult cmd_mom(const RunConfig& config);
CommandResult cmd_rank(const RunConfig& config);
CommandResult cmd_estimators(const RunConfig& config);
CommandResult cmd_agree(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mombin::cli
