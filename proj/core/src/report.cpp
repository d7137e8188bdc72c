#include "nlse/report.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "nlse/grid.hpp"

namespace nlse {
namespace {

using Json = nlohmann::ordered_json;

std::string entropy_text(double value) { return fmt::format("{:.6f}", value); }

std::string csv_field(std::string_view raw) {
  if (raw.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(raw);
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = to_string(cfg.command);
  if (cfg.command == Command::compare) {
    j["a"] = cfg.compare_a.string();
    j["b"] = cfg.compare_b.string();
    j["row_a"] = cfg.row_a ? Json(*cfg.row_a) : Json(nullptr);
    j["row_b"] = cfg.row_b ? Json(*cfg.row_b) : Json(nullptr);
  } else {
    j["input"] = cfg.input_path.string();
  }
  if (cfg.command == Command::rank) j["q"] = cfg.q;
  if (cfg.command == Command::sweep || cfg.command == Command::threshold ||
      cfg.command == Command::states) {
    j["grid"] = cfg.grid_spec;
  }
  if (cfg.command == Command::threshold || cfg.command == Command::states) {
    j["relaxed_tau"] = cfg.relaxed_tau ? Json(*cfg.relaxed_tau) : Json(nullptr);
  }
  if (cfg.command == Command::threshold) j["refine"] = cfg.refine;
  j["format"] = to_string(cfg.format);
  return j;
}

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string criterion_text(const RunConfig& cfg) {
  return cfg.relaxed_tau ? "relaxed:" + format_q(*cfg.relaxed_tau) : "exact";
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

void write_rank(std::ostream& out, const RunConfig& cfg, const Graph& g, const ScoreTable& table,
                const Ranking& ranking) {
  if (cfg.format == OutputFormat::json) {
    Json rows = Json::array();
    for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
      const NodeId id = ranking[pos];
      rows.push_back({{"label", g.label(id)},
                      {"degree", g.degree(id)},
                      {"entropy", table.scores[id]},
                      {"rank", pos + 1}});
    }
    write_json(out, {{"command", "rank"}, {"config", config_json(cfg)}, {"rows", rows}});
    return;
  }
  out << "label,degree,entropy,rank\n";
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    const NodeId id = ranking[pos];
    out << csv_field(g.label(id)) << ',' << g.degree(id) << ',' << entropy_text(table.scores[id])
        << ',' << pos + 1 << '\n';
  }
}

void write_sweep(std::ostream& out, const RunConfig& cfg, const Graph& g, const SweepResult& s) {
  if (cfg.format == OutputFormat::json) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
      const Ranking& r = s.rankings[k];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        rows.push_back({{"q", s.grid[k]},
                        {"label", g.label(r[pos])},
                        {"entropy", s.score_tables[k].scores[r[pos]]},
                        {"rank", pos + 1}});
      }
    }
    write_json(out, {{"command", "sweep"},
                     {"config", config_json(cfg)},
                     {"grid", s.grid},
                     {"rows", rows}});
    return;
  }
  out << "q,label,entropy,rank\n";
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const std::string q = format_q(s.grid[k]);
    const Ranking& r = s.rankings[k];
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      out << q << ',' << csv_field(g.label(r[pos])) << ','
          << entropy_text(s.score_tables[k].scores[r[pos]]) << ',' << pos + 1 << '\n';
    }
  }
}

void write_threshold(std::ostream& out, const RunConfig& cfg, const Graph& g,
                     const ThresholdReport& report, std::optional<double> refined) {
  std::vector<std::string> top;
  if (report.stable_ranking) top = report.stable_ranking->top_labels(g, 10);
  if (cfg.format == OutputFormat::json) {
    write_json(out, {{"command", "threshold"},
                     {"config", config_json(cfg)},
                     {"p_value", nullable(report.p_value)},
                     {"suffix_length", report.suffix_length},
                     {"refined_p_value", nullable(refined)},
                     {"criterion", criterion_text(cfg)},
                     {"stable_top10", top}});
    return;
  }
  const auto text = [](const std::optional<double>& v) { return v ? format_q(*v) : "none"; };
  out << "p_value,suffix_length,refined_p_value,criterion,stable_top10\n";
  out << text(report.p_value) << ',' << report.suffix_length << ',' << text(refined) << ','
      << criterion_text(cfg) << ',' << csv_field(top.empty() ? "none" : join_labels(top)) << '\n';
}

void write_states(std::ostream& out, const RunConfig& cfg, const Graph& g,
                  const ThreeStates& states) {
  const std::optional<std::vector<std::string>> orders[] = {
      states.order_q0.labels(g),
      states.order_q1.labels(g),
      states.order_stable ? std::optional(states.order_stable->labels(g)) : std::nullopt,
  };
  if (cfg.format == OutputFormat::json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < std::size(kStateRows); ++i) {
      rows.push_back({{"state", kStateRows[i]},
                      {"order", orders[i] ? Json(*orders[i]) : Json(nullptr)}});
    }
    write_json(out, {{"command", "states"},
                     {"config", config_json(cfg)},
                     {"p_value", nullable(states.threshold.p_value)},
                     {"rows", rows}});
    return;
  }
  out << "state,order\n";
  for (std::size_t i = 0; i < std::size(kStateRows); ++i) {
    out << kStateRows[i] << ',' << (orders[i] ? csv_field(join_labels(*orders[i])) : "none")
        << '\n';
  }
}

void write_comparison(std::ostream& out, const RunConfig& cfg, const RankingComparison& cmp) {
  if (cfg.format == OutputFormat::json) {
    write_json(out, {{"command", "compare"},
                     {"config", config_json(cfg)},
                     {"kendall_tau", cmp.kendall_tau},
                     {"top5_overlap", cmp.top_k_overlap.at(5)},
                     {"top10_overlap", cmp.top_k_overlap.at(10)}});
    return;
  }
  out << "kendall_tau,top5_overlap,top10_overlap\n";
  out << fmt::format("{:.6f},{:.6f},{:.6f}\n", cmp.kendall_tau, cmp.top_k_overlap.at(5),
                     cmp.top_k_overlap.at(10));
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  return fields;
}

std::vector<std::string> read_ranking_csv(std::istream& in, const std::optional<std::string>& row) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw std::runtime_error("ranking file is empty");
  const std::vector<std::string> header = split_csv_record(line);
  const auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };

  if (header == std::vector<std::string>{"state", "order"}) {
    if (!row) {
      throw std::runtime_error("states table holds several rankings; select one of " +
                               std::string("Order_q0, Order_q1, Order_stable"));
    }
    while (next_line()) {
      const auto fields = split_csv_record(line);
      if (fields.size() != 2) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected 2 fields");
      }
      if (fields[0] != *row) continue;
      if (fields[1] == "none") throw std::runtime_error("row " + *row + " holds no ranking");
      return split_csv_record(fields[1]);
    }
    throw std::runtime_error("no row named " + *row);
  }

  const auto label_col = column("label");
  const auto rank_col = column("rank");
  if (!label_col || !rank_col) {
    throw std::runtime_error("ranking CSV needs 'label' and 'rank' columns");
  }
  if (row) throw std::runtime_error("row selection applies only to states tables");
  std::vector<std::pair<long long, std::string>> entries;
  while (next_line()) {
    const auto fields = split_csv_record(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields");
    }
    long long r = 0;
    const std::string& text = fields[*rank_col];
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad rank '" + text + "'");
    }
    entries.emplace_back(r, fields[*label_col]);
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> labels;
  labels.reserve(entries.size());
  for (auto& e : entries) labels.push_back(std::move(e.second));
  return labels;
}

}  // namespace nlse
