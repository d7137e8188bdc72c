#include "nlse/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace nlse {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        std::size_t* self_loops_dropped,
                        std::size_t* duplicates_collapsed) {
  const std::size_t n = labels.size();
  std::vector<std::pair<NodeId, NodeId>> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  const auto unique_end = std::unique(canon.begin(), canon.end());
  const std::size_t dups = static_cast<std::size_t>(canon.end() - unique_end);
  canon.erase(unique_end, canon.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.edge_count_ = canon.size();
  g.degrees_.assign(n, 0);
  for (auto [u, v] : canon) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(n + 1, 0);
  std::partial_sum(g.degrees_.begin(), g.degrees_.end(), g.offsets_.begin() + 1);
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (min, max), so each list receives its smaller neighbors first,
  // then its larger ones, both ascending.
  for (auto [u, v] : canon) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  if (self_loops_dropped) *self_loops_dropped = loops;
  if (duplicates_collapsed) *duplicates_collapsed = dups;
  return g;
}

void Graph::check(NodeId i) const {
  if (i >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(i) + " out of range [0, " +
                            std::to_string(node_count()) + ")");
  }
}

std::size_t Graph::degree(NodeId i) const {
  check(i);
  return degrees_[i];
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check(i);
  return std::span<const NodeId>(targets_).subspan(offsets_[i], degrees_[i]);
}

const std::string& Graph::label(NodeId i) const {
  check(i);
  return labels_[i];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::size_t Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

LoadResult load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](std::string label) {
    auto [it, inserted] = ids.try_emplace(std::move(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(std::move(tok));
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(fields.size()));
    }
    const NodeId u = intern(std::move(fields[0]));
    const NodeId v = intern(std::move(fields[1]));
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));

  std::size_t loops = 0;
  std::size_t dups = 0;
  LoadResult result{Graph::from_edges(std::move(labels), edges, &loops, &dups), loops, dups};
  if (result.graph.edge_count() == 0) {
    throw EmptyInputError("edge list contains no edges");
  }
  return result;
}

LoadResult load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  // Emit edges so that labels first appear in id order, then the rest sorted.
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<NodeId, NodeId>> order;
  for (NodeId v = 0; v < n; ++v) {
    if (seen[v]) continue;
    const auto nbrs = g.neighbors(v);
    const auto earlier = std::find_if(nbrs.begin(), nbrs.end(), [&](NodeId u) { return seen[u]; });
    if (earlier != nbrs.end()) {
      order.emplace_back(*earlier, v);
    } else if (std::binary_search(nbrs.begin(), nbrs.end(), v + 1)) {
      // A node with no earlier neighbor was introduced together with its successor.
      order.emplace_back(v, v + 1);
      seen[v + 1] = true;
    } else {
      // Only a self-loop line can have introduced it.
      order.emplace_back(v, v);
    }
    seen[v] = true;
  }

  auto key = [](std::pair<NodeId, NodeId> e) {
    return std::pair{std::min(e.first, e.second), std::max(e.first, e.second)};
  };
  std::vector<std::pair<NodeId, NodeId>> emitted;
  emitted.reserve(order.size());
  for (auto e : order) {
    if (e.first != e.second) emitted.push_back(key(e));
  }
  std::sort(emitted.begin(), emitted.end());

  std::ostringstream out;
  for (auto [u, v] : order) out << g.label(u) << ' ' << g.label(v) << '\n';
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      if (std::binary_search(emitted.begin(), emitted.end(), std::pair{u, v})) continue;
      out << g.label(u) << ' ' << g.label(v) << '\n';
    }
  }
  return out.str();
}

std::size_t EgoNetwork::total_degree() const noexcept {
  return std::accumulate(member_degrees.begin(), member_degrees.end(), std::size_t{0});
}

EgoNetwork ego_network(const Graph& g, NodeId center) {
  EgoNetwork ego;
  ego.center = center;
  const auto nbrs = g.neighbors(center);
  ego.members.reserve(nbrs.size() + 1);
  const auto split = std::lower_bound(nbrs.begin(), nbrs.end(), center);
  ego.members.insert(ego.members.end(), nbrs.begin(), split);
  ego.members.push_back(center);
  ego.members.insert(ego.members.end(), split, nbrs.end());
  ego.member_degrees.reserve(ego.members.size());
  for (NodeId m : ego.members) ego.member_degrees.push_back(g.degree(m));
  return ego;
}

}  // namespace nlse
