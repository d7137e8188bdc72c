#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlse/graph.hpp"
#include "nlse/ranking.hpp"
#include "nlse/run_config.hpp"

namespace nlse {

// Writers emit either CSV (header row, LF endings, entropies with 6
// decimals) or one JSON object holding the same columns plus an echo of
// the run configuration. JSON keeps full double precision.

void write_rank(std::ostream& out, const RunConfig& cfg, const Graph& g, const ScoreTable& table,
                const Ranking& ranking);

/// Long form: one row per (q, node), q ascending then rank ascending.
void write_sweep(std::ostream& out, const RunConfig& cfg, const Graph& g, const SweepResult& s);

void write_threshold(std::ostream& out, const RunConfig& cfg, const Graph& g,
                     const ThresholdReport& report, std::optional<double> refined);

void write_states(std::ostream& out, const RunConfig& cfg, const Graph& g,
                  const ThreeStates& states);

void write_comparison(std::ostream& out, const RunConfig& cfg, const RankingComparison& cmp);

inline constexpr std::string_view kStateRows[] = {"Order_q0", "Order_q1", "Order_stable"};

/// Reads a ranking back from CSV produced by write_rank (ordered by its rank
/// column) or write_states (the row named `row`). Returns labels, most
/// influential first. Throws std::runtime_error on malformed input.
std::vector<std::string> read_ranking_csv(std::istream& in,
                                          const std::optional<std::string>& row = std::nullopt);

/// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv_record(std::string_view line);

}  // namespace nlse
