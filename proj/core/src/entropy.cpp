#include "nlse/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nlse {
namespace {

// Neumaier's variant of Kahan summation.
double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

double accumulate(std::span<const double> xs) {
  if (xs.size() > kCompensatedSumThreshold) return compensated_sum(xs);
  return std::accumulate(xs.begin(), xs.end(), 0.0);
}

std::vector<double> sorted_copy(std::span<const double> xs) {
  std::vector<double> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EntropicIndex::EntropicIndex(double q) : q_(q) {
  if (!std::isfinite(q) || q < 0.0) {
    throw std::domain_error("entropic index must be finite and >= 0, got " + std::to_string(q));
  }
}

bool EntropicIndex::is_shannon() const noexcept { return std::abs(q_ - 1.0) <= kShannonBand; }

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::domain_error("probability vector is empty");
  for (double p : probs_) {
    if (!(p > 0.0) || p > 1.0) {
      throw std::domain_error("probability entries must lie in (0, 1]");
    }
  }
  const double total = accumulate(probs_);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::domain_error("probabilities sum to " + std::to_string(total) + ", expected 1");
  }
}

ProbabilityVector ProbabilityVector::from_counts(std::span<const std::size_t> weights) {
  if (weights.empty()) throw std::domain_error("no weights");
  std::size_t total = 0;
  for (std::size_t w : weights) {
    if (w == 0) throw std::domain_error("zero weight in distribution");
    total += w;
  }
  std::vector<double> probs;
  probs.reserve(weights.size());
  const double denom = static_cast<double>(total);
  for (std::size_t w : weights) probs.push_back(static_cast<double>(w) / denom);
  return ProbabilityVector(std::move(probs), Unchecked{});
}

double q_log(double x, EntropicIndex q) {
  if (!(x > 0.0)) throw std::domain_error("q_log requires x > 0");
  if (q.is_shannon()) return std::log(x);
  const double one_minus_q = 1.0 - q.value();
  return (std::pow(x, one_minus_q) - 1.0) / one_minus_q;
}

double shannon_entropy(const ProbabilityVector& p) {
  std::vector<double> terms = sorted_copy(p.values());
  for (double& t : terms) t = -t * std::log(t);
  return accumulate(terms);
}

double tsallis_entropy(const ProbabilityVector& p, EntropicIndex q) {
  if (q.is_shannon()) return shannon_entropy(p);
  std::vector<double> terms = sorted_copy(p.values());
  const double exponent = q.value();
  for (double& t : terms) t = std::pow(t, exponent);
  const double power_sum = accumulate(terms);
  return (1.0 - power_sum) / (exponent - 1.0);
}

ProbabilityVector local_degree_distribution(const Graph& g, NodeId i) {
  if (g.degree(i) == 0) {
    throw std::domain_error("node '" + g.label(i) + "' is isolated");
  }
  const EgoNetwork ego = ego_network(g, i);
  return ProbabilityVector::from_counts(ego.member_degrees);
}

double local_structure_entropy(const Graph& g, NodeId i, EntropicIndex q) {
  if (g.degree(i) == 0) return 0.0;
  return tsallis_entropy(local_degree_distribution(g, i), q);
}

}  // namespace nlse
