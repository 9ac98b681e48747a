#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gsh::cli {

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  std::string command;
  std::string input;
  int order = 32;
  int theta_samples = 512;
  double max_radius = 0.995;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  Format format = Format::Json;
  std::string output;

  // command-specific
  std::optional<int> scan_order;
  std::string witness;
  std::optional<double> A, B;
  std::string curve = "sinh";
  int resolution = 512;
  double radius = 0.5;

  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs one subcommand, writing the artifact to config.output or `out`.
/// Errors are reported on `err` and mapped to the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, char** argv);

}  // namespace gsh::cli
