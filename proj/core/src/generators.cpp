#include "nlse/generators.hpp"

#include <random>
#include <string>
#include <vector>

namespace nlse::generators {
namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

}  // namespace

Graph path(std::size_t n) {
  EdgeList edges;
  for (NodeId i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_edges(numbered(n), edges);
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(numbered(n), edges);
}

Graph star(std::size_t leaves) {
  EdgeList edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(numbered(leaves + 1), edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  EdgeList edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(numbered(n), edges);
}

}  // namespace nlse::generators
