#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nlse/graph.hpp"

namespace nlse {

/// |q - 1| at or below this is evaluated with the Shannon (natural log) form.
inline constexpr double kShannonBand = 1e-9;

/// Tolerance on the sum of a probability vector.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Distributions longer than this are summed with compensated accumulation.
inline constexpr std::size_t kCompensatedSumThreshold = 1000;

/// Entropic index q. Finite and non-negative. The entropy constant k is 1
/// (information-theoretic convention) and is not configurable.
class EntropicIndex {
 public:
  explicit EntropicIndex(double q);

  double value() const noexcept { return q_; }
  bool is_shannon() const noexcept;

  auto operator<=>(const EntropicIndex&) const = default;

 private:
  double q_;
};

/// Normalized distribution with strictly positive entries.
class ProbabilityVector {
 public:
  /// Validates entries > 0 and sum == 1 (within kNormalizationTolerance).
  explicit ProbabilityVector(std::vector<double> probs);

  /// p_j = weights[j] / sum(weights); each ratio is formed once from the
  /// integer counts. All weights must be positive.
  static ProbabilityVector from_counts(std::span<const std::size_t> weights);

  std::span<const double> values() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  struct Unchecked {};
  ProbabilityVector(std::vector<double> probs, Unchecked) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// Deformed logarithm ln_q(x) = (x^(1-q) - 1) / (1 - q); natural log in the
/// Shannon band. Throws std::domain_error for x <= 0.
double q_log(double x, EntropicIndex q);

double shannon_entropy(const ProbabilityVector& p);

/// S_q(p) = (1 - sum p_i^q) / (q - 1), or the Shannon entropy in the band
/// around q = 1. Terms are summed in ascending order of p, so the result is
/// exactly invariant under permutations of p.
double tsallis_entropy(const ProbabilityVector& p, EntropicIndex q);

/// Degree shares of the ego network of `i`, in ascending member-id order.
/// Throws std::domain_error for an isolated node.
ProbabilityVector local_degree_distribution(const Graph& g, NodeId i);

/// Nonextensive local structure entropy of node `i`: the Tsallis entropy of
/// its local degree distribution. Isolated nodes score 0 at every q.
double local_structure_entropy(const Graph& g, NodeId i, EntropicIndex q);

}  // namespace nlse
