#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace nlse {

enum class Command { rank, sweep, threshold, states, compare };
enum class OutputFormat { csv, json };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);

/// Everything one CLI invocation needs.
struct RunConfig {
  Command command = Command::rank;
  std::filesystem::path input_path;  // rank, sweep, threshold, states
  double q = 1.0;                    // rank only
  std::string grid_spec = "default";
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> output_path;  // stdout when empty
  bool refine = false;
  std::optional<double> relaxed_tau;
  unsigned threads = 0;

  // compare
  std::filesystem::path compare_a;
  std::filesystem::path compare_b;
  std::optional<std::string> row_a;
  std::optional<std::string> row_b;
};

/// Throws std::invalid_argument on q < 0, a malformed or non-increasing
/// grid, or relaxed_tau outside (0, 0.05].
void validate(const RunConfig& cfg);

}  // namespace nlse
