#pragma once

// Test-only reference implementations. Nothing here calls into nlse_core:
// graphs are raw adjacency matrices and the entropies are straight
// transcriptions of the degree-share and Tsallis formulas.

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct RawGraph {
  std::vector<std::string> labels;  // first-appearance order
  std::vector<std::vector<bool>> adj;

  std::size_t size() const { return labels.size(); }
  std::size_t degree(std::size_t i) const;
};

RawGraph from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Reads "a b" lines, skipping '#' comments and blank lines.
RawGraph read_edge_file(const std::filesystem::path& path);

/// Degree shares over {i} and its neighbors, center first.
std::vector<double> degree_shares(const RawGraph& g, std::size_t i);

/// -sum p ln p.
double shannon(const std::vector<double>& p);

/// (1 - sum p^q) / (q - 1), Shannon at q == 1, naive left-to-right sums.
double tsallis(const std::vector<double>& p, double q);

/// Local structure entropy; 0 for isolated nodes.
double local_entropy(const RawGraph& g, std::size_t i, double q);

/// Kendall tau by enumerating every pair of items.
double kendall_tau_pairs(const std::vector<std::string>& a, const std::vector<std::string>& b);

std::filesystem::path data_dir();

}  // namespace oracle
