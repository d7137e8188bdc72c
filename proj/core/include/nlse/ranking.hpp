#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlse/entropy.hpp"
#include "nlse/graph.hpp"

namespace nlse {

/// Worker count for node- and grid-parallel loops. 0 means hardware
/// concurrency. Results never depend on this value.
struct Parallelism {
  unsigned threads = 0;
};

struct ScoreTable {
  EntropicIndex q{0.0};
  std::vector<double> scores;  // indexed by node id
};

/// Nodes ordered most influential first.
class Ranking {
 public:
  Ranking() = default;
  /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
  explicit Ranking(std::vector<NodeId> order);

  std::span<const NodeId> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  NodeId operator[](std::size_t pos) const { return order_.at(pos); }

  /// Labels of the first `k` nodes (all when k exceeds the size).
  std::vector<std::string> top_labels(const Graph& g, std::size_t k) const;
  std::vector<std::string> labels(const Graph& g) const;

  bool operator==(const Ranking&) const = default;

 private:
  std::vector<NodeId> order_;
};

/// Strict weak order on labels: numeric when both parse as integers,
/// lexicographic otherwise (and between numerically equal spellings such as
/// "1" and "01").
bool label_less(std::string_view a, std::string_view b);

ScoreTable score_all(const Graph& g, EntropicIndex q, Parallelism par = {});

/// Descending score; equal scores ordered by label_less.
Ranking rank(const Graph& g, const ScoreTable& table);

struct SweepResult {
  std::vector<double> grid;
  std::vector<Ranking> rankings;
  std::vector<ScoreTable> score_tables;
};

/// Throws std::domain_error if the grid is empty, unsorted or has q < 0.
SweepResult sweep(const Graph& g, std::span<const double> grid, Parallelism par = {});

/// Exact mode requires identical suffix rankings. Relaxed mode accepts a
/// suffix whose rankings pairwise reach Kendall tau >= 1 - tau_tolerance.
struct StabilityCriterion {
  std::optional<double> tau_tolerance;

  static StabilityCriterion exact() { return {}; }
  static StabilityCriterion relaxed(double tolerance);
  bool is_exact() const noexcept { return !tau_tolerance.has_value(); }
};

inline constexpr double kDefaultTauTolerance = 0.005;
inline constexpr double kMaxTauTolerance = 0.05;

struct ThresholdReport {
  std::optional<double> p_value;
  std::optional<Ranking> stable_ranking;
  std::size_t suffix_length = 0;
  std::size_t first_stable_index = 0;  // grid index of p_value when present
};

/// Smallest grid q from which every later ranking agrees with it and at
/// least two grid points take part. Requires at least 2 grid points.
ThresholdReport detect_threshold(const SweepResult& s,
                                 StabilityCriterion criterion = StabilityCriterion::exact());

/// Narrows p_value to the 0.1 lattice by bisecting between the last unstable
/// grid point and p_value. Returns p_value itself when nothing lies between
/// them, and nullopt when the report has no p_value.
std::optional<double> refine_threshold(const Graph& g, const SweepResult& s,
                                       const ThresholdReport& report,
                                       StabilityCriterion criterion = StabilityCriterion::exact(),
                                       double resolution = 0.1);

struct ThreeStates {
  Ranking order_q0;
  Ranking order_q1;
  std::optional<Ranking> order_stable;
  ThresholdReport threshold;
};

/// Throws std::domain_error if the sweep grid lacks q = 0 or q = 1.
ThreeStates three_states(const SweepResult& s,
                         StabilityCriterion criterion = StabilityCriterion::exact());
ThreeStates three_states(const Graph& g, std::span<const double> grid,
                         StabilityCriterion criterion = StabilityCriterion::exact(),
                         Parallelism par = {});

/// Raised by compare_rankings when the two rankings cover different items.
class ItemSetMismatch : public std::domain_error {
 public:
  ItemSetMismatch(std::vector<std::string> only_in_a, std::vector<std::string> only_in_b);
  const std::vector<std::string>& only_in_a() const noexcept { return only_in_a_; }
  const std::vector<std::string>& only_in_b() const noexcept { return only_in_b_; }

 private:
  std::vector<std::string> only_in_a_;
  std::vector<std::string> only_in_b_;
};

struct RankingComparison {
  double kendall_tau = 1.0;
  std::map<std::size_t, double> top_k_overlap;  // keys 5 and 10
};

inline constexpr std::size_t kOverlapDepths[] = {5, 10};

/// Kendall tau-b and top-k overlap between two orderings of the same items.
RankingComparison compare_rankings(std::span<const std::string> a, std::span<const std::string> b);
RankingComparison compare_rankings(const Ranking& a, const Ranking& b);

/// Kendall tau between two permutations of the same items, in O(n log n).
double kendall_tau(const Ranking& a, const Ranking& b);

}  // namespace nlse
