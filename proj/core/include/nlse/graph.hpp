#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlse {

using NodeId = std::uint32_t;

/// Raised for a malformed edge-list line. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an edge list yields no edges.
class EmptyInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Immutable undirected simple graph.
 *
 * Node ids are dense (0..node_count-1); every id maps back to the original
 * string label it was interned from. Adjacency lists are sorted and free of
 * self-loops and duplicates.
 */
class Graph {
 public:
  /// Builds a graph from labels and an id-pair edge list. Self-loops are
  /// dropped and duplicate (including reversed) edges collapsed; the counts of
  /// each are written to the optional out-parameters.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          std::size_t* self_loops_dropped = nullptr,
                          std::size_t* duplicates_collapsed = nullptr);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(NodeId i) const;
  std::span<const NodeId> neighbors(NodeId i) const;
  const std::string& label(NodeId i) const;
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }

  std::optional<NodeId> find(std::string_view label) const;
  std::size_t max_degree() const noexcept;

  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;
  void check(NodeId i) const;

  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;  // CSR: neighbors of i are targets_[offsets_[i], offsets_[i+1])
  std::vector<NodeId> targets_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
};

struct LoadResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Parses a whitespace-separated edge list. Lines that are blank or start
/// with '#' are skipped. Labels are interned in order of first appearance.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::filesystem::path& path);

/// Canonical edge list for `g`. For any graph produced by load_edge_list,
/// reloading the text reproduces `g` exactly, ids included. Isolated nodes
/// left by self-loop lines come out as self-loop lines.
std::string to_edge_list(const Graph& g);

/// A center node together with all of its direct neighbors.
struct EgoNetwork {
  NodeId center = 0;
  std::vector<NodeId> members;             // sorted ascending, includes center
  std::vector<std::size_t> member_degrees;  // degree in the full graph

  std::size_t size() const noexcept { return members.size(); }
  std::size_t total_degree() const noexcept;
};

EgoNetwork ego_network(const Graph& g, NodeId center);

}  // namespace nlse
