#include "nlse/run_config.hpp"

#include <cmath>
#include <stdexcept>

#include "nlse/grid.hpp"
#include "nlse/ranking.hpp"

namespace nlse {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::rank: return "rank";
    case Command::sweep: return "sweep";
    case Command::threshold: return "threshold";
    case Command::states: return "states";
    case Command::compare: return "compare";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

void validate(const RunConfig& cfg) {
  if (!std::isfinite(cfg.q) || cfg.q < 0.0) {
    throw std::invalid_argument("q must be finite and >= 0");
  }
  if (cfg.relaxed_tau && (!(*cfg.relaxed_tau > 0.0) || *cfg.relaxed_tau > kMaxTauTolerance)) {
    throw std::invalid_argument("relaxed tau must lie in (0, 0.05]");
  }
  if (cfg.command != Command::rank && cfg.command != Command::compare) {
    (void)parse_grid(cfg.grid_spec);
  }
}

}  // namespace nlse
