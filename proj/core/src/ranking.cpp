#include "nlse/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "parallel.hpp"

namespace nlse {
namespace {

std::optional<long long> parse_integer(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

// Counts inversions in `seq` by merge sort; `seq` is left sorted.
std::uint64_t count_inversions(std::vector<std::size_t>& seq) {
  std::vector<std::size_t> buffer(seq.size());
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < seq.size(); width *= 2) {
    for (std::size_t lo = 0; lo < seq.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, seq.size());
      const std::size_t hi = std::min(lo + 2 * width, seq.size());
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
          inversions += mid - i;
          buffer[out++] = seq[j++];
        } else {
          buffer[out++] = seq[i++];
        }
      }
      while (i < mid) buffer[out++] = seq[i++];
      while (j < hi) buffer[out++] = seq[j++];
    }
    seq.swap(buffer);
  }
  return inversions;
}

// seq[i] is the position in the second ordering of the i-th item of the first.
double tau_from_positions(std::vector<std::size_t> seq) {
  const std::size_t n = seq.size();
  if (n < 2) return 1.0;
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const auto discordant = static_cast<double>(count_inversions(seq));
  return (pairs - 2.0 * discordant) / pairs;
}

template <typename Item>
std::map<std::size_t, double> top_k_overlaps(std::span<const Item> a, std::span<const Item> b) {
  std::map<std::size_t, double> out;
  for (std::size_t k : kOverlapDepths) {
    const std::size_t depth = std::min(k, a.size());
    std::unordered_set<Item> head(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(depth));
    std::size_t shared = 0;
    for (std::size_t i = 0; i < depth; ++i) shared += head.count(a[i]);
    out[k] = depth == 0 ? 1.0 : static_cast<double>(shared) / static_cast<double>(depth);
  }
  return out;
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::domain_error("q grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0) {
      throw std::domain_error("q grid values must be finite and >= 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::domain_error("q grid must be strictly increasing");
    }
  }
}

bool agrees(const Ranking& candidate, const Ranking& reference, const StabilityCriterion& c) {
  if (c.is_exact()) return candidate == reference;
  return kendall_tau(candidate, reference) >= 1.0 - *c.tau_tolerance;
}

}  // namespace

Ranking::Ranking(std::vector<NodeId> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (NodeId id : order_) {
    if (id >= order_.size() || seen[id]) {
      throw std::invalid_argument("ranking order is not a permutation");
    }
    seen[id] = true;
  }
}

std::vector<std::string> Ranking::top_labels(const Graph& g, std::size_t k) const {
  std::vector<std::string> out;
  const std::size_t depth = std::min(k, order_.size());
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) out.push_back(g.label(order_[i]));
  return out;
}

std::vector<std::string> Ranking::labels(const Graph& g) const { return top_labels(g, size()); }

bool label_less(std::string_view a, std::string_view b) {
  const auto na = parse_integer(a);
  const auto nb = parse_integer(b);
  if (na && nb) {
    if (*na != *nb) return *na < *nb;
    return a < b;
  }
  // Integers sort ahead of non-integer labels.
  if (na.has_value() != nb.has_value()) return na.has_value();
  return a < b;
}

ScoreTable score_all(const Graph& g, EntropicIndex q, Parallelism par) {
  ScoreTable table{q, std::vector<double>(g.node_count(), 0.0)};
  detail::parallel_for(g.node_count(), par.threads, [&](std::size_t i) {
    table.scores[i] = local_structure_entropy(g, static_cast<NodeId>(i), q);
  });
  return table;
}

Ranking rank(const Graph& g, const ScoreTable& table) {
  const std::size_t n = g.node_count();
  if (table.scores.size() != n) {
    throw std::invalid_argument("score table size does not match graph");
  }
  std::vector<NodeId> by_label(n);
  std::iota(by_label.begin(), by_label.end(), NodeId{0});
  std::sort(by_label.begin(), by_label.end(),
            [&](NodeId x, NodeId y) { return label_less(g.label(x), g.label(y)); });
  std::vector<std::size_t> label_pos(n);
  for (std::size_t i = 0; i < n; ++i) label_pos[by_label[i]] = i;

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    if (table.scores[x] != table.scores[y]) return table.scores[x] > table.scores[y];
    return label_pos[x] < label_pos[y];
  });
  return Ranking(std::move(order));
}

SweepResult sweep(const Graph& g, std::span<const double> grid, Parallelism par) {
  validate_grid(grid);
  SweepResult result;
  result.grid.assign(grid.begin(), grid.end());
  result.score_tables.resize(grid.size());
  result.rankings.resize(grid.size());

  const unsigned workers = detail::resolve_threads(par.threads, grid.size());
  const bool across_grid = workers > 1 && grid.size() >= workers;
  const Parallelism inner{across_grid ? 1u : par.threads};
  detail::parallel_for(grid.size(), across_grid ? workers : 1u, [&](std::size_t k) {
    result.score_tables[k] = score_all(g, EntropicIndex(grid[k]), inner);
    result.rankings[k] = rank(g, result.score_tables[k]);
  });
  return result;
}

StabilityCriterion StabilityCriterion::relaxed(double tolerance) {
  if (!(tolerance > 0.0) || tolerance > kMaxTauTolerance) {
    throw std::domain_error("relaxed tau tolerance must lie in (0, 0.05]");
  }
  return StabilityCriterion{tolerance};
}

ThresholdReport detect_threshold(const SweepResult& s, StabilityCriterion criterion) {
  const std::size_t n = s.rankings.size();
  if (n < 2 || s.grid.size() != n) {
    throw std::domain_error("threshold detection needs at least 2 grid points");
  }
  std::size_t first = n - 1;
  while (first > 0) {
    const Ranking& candidate = s.rankings[first - 1];
    bool ok = true;
    if (criterion.is_exact()) {
      ok = candidate == s.rankings[n - 1];
    } else {
      for (std::size_t j = first; j < n && ok; ++j) ok = agrees(candidate, s.rankings[j], criterion);
    }
    if (!ok) break;
    --first;
  }

  ThresholdReport report;
  const std::size_t suffix = n - first;
  if (suffix < 2) return report;
  report.p_value = s.grid[first];
  report.stable_ranking = s.rankings[first];
  report.suffix_length = suffix;
  report.first_stable_index = first;
  return report;
}

std::optional<double> refine_threshold(const Graph& g, const SweepResult& s,
                                       const ThresholdReport& report, StabilityCriterion criterion,
                                       double resolution) {
  if (!report.p_value) return std::nullopt;
  if (!(resolution > 0.0)) throw std::domain_error("refine resolution must be positive");
  if (report.first_stable_index == 0) return report.p_value;

  const double steps_per_unit = std::round(1.0 / resolution);
  const double lo = s.grid[report.first_stable_index - 1];
  const double hi = *report.p_value;
  // Lattice indices strictly inside (lo, hi).
  constexpr double kSlack = 1e-9;
  const auto m_lo = static_cast<long long>(std::floor(lo * steps_per_unit + kSlack)) + 1;
  const auto m_hi = static_cast<long long>(std::ceil(hi * steps_per_unit - kSlack)) - 1;
  if (m_lo > m_hi) return hi;

  auto stable_at = [&](long long m) {
    const EntropicIndex q(static_cast<double>(m) / steps_per_unit);
    return agrees(rank(g, score_all(g, q)), *report.stable_ranking, criterion);
  };
  long long unstable = m_lo - 1;
  long long stable = m_hi + 1;
  while (stable - unstable > 1) {
    const long long mid = unstable + (stable - unstable) / 2;
    if (stable_at(mid)) {
      stable = mid;
    } else {
      unstable = mid;
    }
  }
  if (stable == m_hi + 1) return hi;
  return static_cast<double>(stable) / steps_per_unit;
}

ThreeStates three_states(const SweepResult& s, StabilityCriterion criterion) {
  const auto at = [&](double q) -> const Ranking& {
    const auto it = std::find(s.grid.begin(), s.grid.end(), q);
    if (it == s.grid.end()) {
      throw std::domain_error("grid must contain q = " + std::to_string(static_cast<int>(q)));
    }
    return s.rankings[static_cast<std::size_t>(it - s.grid.begin())];
  };
  ThreeStates states{at(0.0), at(1.0), std::nullopt, detect_threshold(s, criterion)};
  states.order_stable = states.threshold.stable_ranking;
  return states;
}

ThreeStates three_states(const Graph& g, std::span<const double> grid,
                         StabilityCriterion criterion, Parallelism par) {
  validate_grid(grid);
  if (std::find(grid.begin(), grid.end(), 0.0) == grid.end() ||
      std::find(grid.begin(), grid.end(), 1.0) == grid.end()) {
    throw std::domain_error("grid must contain q = 0 and q = 1");
  }
  return three_states(sweep(g, grid, par), criterion);
}

ItemSetMismatch::ItemSetMismatch(std::vector<std::string> only_in_a,
                                 std::vector<std::string> only_in_b)
    : std::domain_error("rankings cover different items (" + std::to_string(only_in_a.size()) +
                        " only in first, " + std::to_string(only_in_b.size()) +
                        " only in second)"),
      only_in_a_(std::move(only_in_a)),
      only_in_b_(std::move(only_in_b)) {}

RankingComparison compare_rankings(std::span<const std::string> a, std::span<const std::string> b) {
  std::unordered_map<std::string_view, std::size_t> pos_b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!pos_b.emplace(b[i], i).second) {
      throw std::domain_error("duplicate item '" + b[i] + "' in second ranking");
    }
  }
  std::unordered_set<std::string_view> in_a;
  std::vector<std::string> only_a;
  std::vector<std::size_t> seq;
  seq.reserve(a.size());
  for (const auto& item : a) {
    if (!in_a.insert(item).second) {
      throw std::domain_error("duplicate item '" + item + "' in first ranking");
    }
    const auto it = pos_b.find(item);
    if (it == pos_b.end()) {
      only_a.push_back(item);
    } else {
      seq.push_back(it->second);
    }
  }
  std::vector<std::string> only_b;
  for (const auto& item : b) {
    if (!in_a.contains(item)) only_b.push_back(item);
  }
  if (!only_a.empty() || !only_b.empty()) throw ItemSetMismatch(std::move(only_a), std::move(only_b));
  if (a.empty()) throw std::domain_error("cannot compare empty rankings");

  RankingComparison cmp;
  cmp.kendall_tau = tau_from_positions(std::move(seq));
  cmp.top_k_overlap = top_k_overlaps(a, b);
  return cmp;
}

double kendall_tau(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw std::domain_error("rankings have different sizes");
  std::vector<std::size_t> pos_b(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) pos_b[b[i]] = i;
  std::vector<std::size_t> seq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) seq[i] = pos_b[a[i]];
  return tau_from_positions(std::move(seq));
}

RankingComparison compare_rankings(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    std::vector<std::string> only_a, only_b;
    for (std::size_t i = b.size(); i < a.size(); ++i) only_a.push_back(std::to_string(i));
    for (std::size_t i = a.size(); i < b.size(); ++i) only_b.push_back(std::to_string(i));
    throw ItemSetMismatch(std::move(only_a), std::move(only_b));
  }
  if (a.size() == 0) throw std::domain_error("cannot compare empty rankings");
  RankingComparison cmp;
  cmp.kendall_tau = kendall_tau(a, b);
  cmp.top_k_overlap = top_k_overlaps(a.order(), b.order());
  return cmp;
}

}  // namespace nlse
