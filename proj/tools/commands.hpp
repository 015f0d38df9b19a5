#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace rtmbe::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFileOrFormat = 2,
  kLengthMismatch = 3,
  kNumerical = 4,
};

struct SimulateOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<double> Ts;
  std::optional<int> substeps;
  double noise_scale = 1.0;
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> params;
};

struct FilterOptions {
  std::filesystem::path u_path = "data_u.bin";
  std::filesystem::path y_path = "data_y.bin";
  std::optional<double> Ts;
  std::optional<int> substeps;
  std::optional<std::filesystem::path> params;
};

/// Writes data_u.bin, data_y.bin and data_x.bin (true states) to out_dir.
int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);

/// Filters the trajectory pair and prints `Data length <N>` and
/// `loglik = <value>`.
int cmd_filter(const FilterOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtmbe::cli
