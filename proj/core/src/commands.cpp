#include "nlse/commands.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "nlse/graph.hpp"
#include "nlse/grid.hpp"
#include "nlse/ranking.hpp"
#include "nlse/report.hpp"

namespace nlse {
namespace {

Graph load(const RunConfig& cfg, std::ostream& diag) {
  LoadResult loaded = load_edge_list_file(cfg.input_path);
  if (loaded.self_loops_dropped > 0) {
    diag << "warning: dropped " << loaded.self_loops_dropped << " self-loop(s) from "
         << cfg.input_path.string() << '\n';
  }
  return std::move(loaded.graph);
}

StabilityCriterion criterion_of(const RunConfig& cfg) {
  return cfg.relaxed_tau ? StabilityCriterion::relaxed(*cfg.relaxed_tau)
                         : StabilityCriterion::exact();
}

std::vector<std::string> read_ranking_file(const std::filesystem::path& path,
                                           const std::optional<std::string>& row) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_ranking_csv(in, row);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace

void run_rank(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Graph g = load(cfg, diag);
  const ScoreTable table = score_all(g, EntropicIndex(cfg.q), Parallelism{cfg.threads});
  write_rank(out, cfg, g, table, rank(g, table));
}

void run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Graph g = load(cfg, diag);
  const auto grid = parse_grid(cfg.grid_spec);
  write_sweep(out, cfg, g, sweep(g, grid, Parallelism{cfg.threads}));
}

void run_threshold(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Graph g = load(cfg, diag);
  const auto grid = parse_grid(cfg.grid_spec);
  if (grid.size() < 2) throw std::invalid_argument("threshold needs a grid of at least 2 points");
  const StabilityCriterion criterion = criterion_of(cfg);
  const SweepResult s = sweep(g, grid, Parallelism{cfg.threads});
  const ThresholdReport report = detect_threshold(s, criterion);
  std::optional<double> refined;
  if (cfg.refine) refined = refine_threshold(g, s, report, criterion);
  write_threshold(out, cfg, g, report, refined);
}

void run_states(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const Graph g = load(cfg, diag);
  const auto grid = parse_grid(cfg.grid_spec);
  write_states(out, cfg, g, three_states(g, grid, criterion_of(cfg), Parallelism{cfg.threads}));
}

void run_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto a = read_ranking_file(cfg.compare_a, cfg.row_a);
  const auto b = read_ranking_file(cfg.compare_b, cfg.row_b);
  write_comparison(out, cfg, compare_rankings(a, b));
}

void run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  validate(cfg);
  switch (cfg.command) {
    case Command::rank: return run_rank(cfg, out, diag);
    case Command::sweep: return run_sweep(cfg, out, diag);
    case Command::threshold: return run_threshold(cfg, out, diag);
    case Command::states: return run_states(cfg, out, diag);
    case Command::compare: return run_compare(cfg, out, diag);
  }
}

}  // namespace nlse
