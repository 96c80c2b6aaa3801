#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmsv/bundle.hpp"
#include "gmsv/error.hpp"
#include "gmsv/graph.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/side_views.hpp"

namespace gmsv {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared reader for the transaction format. `w` lines are accepted only when
// `weights` is provided; they are collected per graph instead of becoming edges.
struct WeightedLink {
  int u, v;
  double w;
};

inline void parse_transactions(const std::string& text, const std::string& where, GraphDataset& out,
                               std::vector<std::vector<WeightedLink>>* weights) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw DataError(where + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = tokens(line);
    if (tok[0] == "t") {
      if (tok.size() == 3 && tok[1] == "#" && tok[2] == "-1") break;  // gSpan end-of-input marker
      if (tok.size() != 4 || tok[1] != "#") fail("expected 't # <id> <label>'");
      const auto y = parse_number<int>(tok[3]);
      if (!y || (*y != 1 && *y != -1)) fail("class label outside {-1,+1}");
      out.graphs.emplace_back();
      out.labels.push_back(*y);
      if (weights) weights->emplace_back();
      continue;
    }
    if (out.graphs.empty()) fail("record before the first 't' line");
    Graph& g = out.graphs.back();
    if (tok[0] == "v") {
      if (tok.size() != 3) fail("expected 'v <idx> <label>'");
      const auto idx = parse_number<int>(tok[1]);
      const auto lab = parse_number<LabelId>(tok[2]);
      if (!idx || !lab) fail("malformed vertex line");
      if (*idx != g.node_count()) fail("vertex indices must be consecutive from 0");
      if (*lab < 0) fail("negative node label");
      g.add_node(*lab);
    } else if (tok[0] == "e") {
      if (tok.size() != 4) fail("expected 'e <u> <v> <label>'");
      const auto u = parse_number<int>(tok[1]);
      const auto v = parse_number<int>(tok[2]);
      const auto lab = parse_number<LabelId>(tok[3]);
      if (!u || !v || !lab) fail("malformed edge line");
      if (*u < 0 || *v < 0 || *u >= g.node_count() || *v >= g.node_count()) fail("edge references undeclared vertex");
      if (*u == *v) fail("self-loop");
      if (g.edge_between(*u, *v)) fail("duplicate edge");
      if (*lab < 0) fail("negative edge label");
      g.add_edge(*u, *v, *lab);
    } else if (tok[0] == "w" && weights) {
      if (tok.size() != 4) fail("expected 'w <u> <v> <weight>'");
      const auto u = parse_number<int>(tok[1]);
      const auto v = parse_number<int>(tok[2]);
      const auto w = parse_number<double>(tok[3]);
      if (!u || !v || !w) fail("malformed weight line");
      if (*u < 0 || *v < 0 || *u >= g.node_count() || *v >= g.node_count()) fail("link references undeclared vertex");
      if (*u == *v) fail("self-loop");
      weights->back().push_back({*u, *v, *w});
    } else {
      fail("unknown record type '" + std::string(tok[0]) + "'");
    }
  }
  if (out.graphs.empty()) throw DataError(where + ": no graphs");
}

}  // namespace detail

/// Reads the transaction format: `t # <id> <label>`, then `v <idx> <label>` and
/// `e <u> <v> <label>` lines per graph. Class labels come from the `t` lines.
inline GraphDataset load_graphs(const std::filesystem::path& path) {
  GraphDataset d;
  detail::parse_transactions(detail::read_file(path), path.string(), d, nullptr);
  d.validate();
  return d;
}

inline GraphDataset parse_graphs(const std::string& text, const std::string& where = "<memory>") {
  GraphDataset d;
  detail::parse_transactions(text, where, d, nullptr);
  d.validate();
  return d;
}

inline std::string format_graphs(const GraphDataset& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Graph& g = d.graphs[i];
    os << "t # " << i << ' ' << d.labels.at(i) << '\n';
    for (int v = 0; v < g.node_count(); ++v) os << "v " << v << ' ' << g.node_label(v) << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << ' ' << e.label << '\n';
  }
  return os.str();
}

inline void write_graphs(const std::filesystem::path& path, const GraphDataset& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << format_graphs(d);
  if (!out) throw DataError("write failed: " + path.string());
}

/// Brain-network style weighted graph: symmetric weights in [0,1], zero diagonal.
struct WeightedNetwork {
  std::vector<LabelId> node_labels;
  Matrix weights;

  [[nodiscard]] std::size_t node_count() const noexcept { return node_labels.size(); }
};

/// Keeps (u,v) iff weight > threshold (strict); edges get label 0.
inline Graph threshold_network(const WeightedNetwork& w, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw DataError("threshold must lie in [0, 1]");
  Graph g(w.node_labels);
  for (std::size_t u = 0; u < w.node_count(); ++u)
    for (std::size_t v = u + 1; v < w.node_count(); ++v)
      if (w.weights(u, v) > threshold) g.add_edge(static_cast<int>(u), static_cast<int>(v), 0);
  return g;
}

struct WeightedDataset {
  std::vector<WeightedNetwork> networks;
  std::vector<int> labels;
};

/// Same layout as the graph format with `w <u> <v> <weight>` link lines in
/// place of `e` lines. Link weights are min-max normalized per network; a
/// network whose links all share one weight maps them to 1.
inline WeightedDataset parse_weighted_networks(const std::string& text, const std::string& where = "<memory>") {
  GraphDataset skeleton;
  std::vector<std::vector<detail::WeightedLink>> links;
  detail::parse_transactions(text, where, skeleton, &links);
  WeightedDataset out;
  out.labels = skeleton.labels;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const Graph& g = skeleton.graphs[i];
    if (g.edge_count() != 0) throw DataError(where + ": weighted network " + std::to_string(i) + " has 'e' lines");
    WeightedNetwork net{g.node_labels(), Matrix(g.node_labels().size(), g.node_labels().size())};
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < links[i].size(); ++k) {
      if (!std::isfinite(links[i][k].w)) throw DataError(where + ": non-finite link weight");
      if (k == 0 || links[i][k].w < lo) lo = links[i][k].w;
      if (k == 0 || links[i][k].w > hi) hi = links[i][k].w;
    }
    std::vector<char> seen(net.node_count() * net.node_count(), 0);
    for (const auto& l : links[i]) {
      const double w = hi > lo ? (l.w - lo) / (hi - lo) : 1.0;
      const auto u = static_cast<std::size_t>(l.u), v = static_cast<std::size_t>(l.v);
      if (seen[std::min(u, v) * net.node_count() + std::max(u, v)]++)
        throw DataError(where + ": duplicate link in network " + std::to_string(i));
      net.weights(u, v) = w;
      net.weights(v, u) = w;
    }
    out.networks.push_back(std::move(net));
  }
  return out;
}

inline WeightedDataset load_weighted_networks(const std::filesystem::path& path) {
  return parse_weighted_networks(detail::read_file(path), path.string());
}

/// CSV with a header row and one numeric row per graph. Values are returned raw.
inline SideView parse_side_view(const std::string& text, const std::string& name, const std::string& where) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::size_t cols = 0;
  std::vector<double> cells;
  std::size_t rows = 0;
  bool header = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    if (header) {
      cols = fields.size();
      header = false;
      continue;
    }
    if (fields.size() != cols)
      throw DataError(where + ":" + std::to_string(line_no) + ": expected " + std::to_string(cols) + " columns");
    for (auto f : fields) {
      const auto v = detail::parse_number<double>(detail::trim(f));
      if (!v || !std::isfinite(*v)) throw DataError(where + ":" + std::to_string(line_no) + ": non-numeric cell");
      cells.push_back(*v);
    }
    ++rows;
  }
  if (header) throw DataError(where + ": missing header row");
  SideView view{name, Matrix(rows, cols), 1.0};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) view.values(r, c) = cells[r * cols + c];
  return view;
}

inline SideView load_side_view(const std::filesystem::path& path) {
  return parse_side_view(detail::read_file(path), path.stem().string(), path.string());
}

/// Loads one view per file, checks row counts against `n`, and min-max normalizes each column.
inline std::vector<SideView> load_side_views(const std::vector<std::filesystem::path>& paths, std::size_t n) {
  std::vector<SideView> views;
  for (const auto& p : paths) {
    SideView v = load_side_view(p);
    if (v.size() != n)
      throw DataError(p.string() + ": " + std::to_string(v.size()) + " rows for " + std::to_string(n) + " graphs");
    views.push_back(minmax_normalize(v));
  }
  return views;
}

inline std::string format_side_view(const SideView& v) {
  std::ostringstream os;
  for (std::size_t c = 0; c < v.dims(); ++c) os << (c ? "," : "") << v.name << '_' << c;
  os << '\n';
  char buf[32];
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.dims(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", v.values(r, c));
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

inline void write_side_view(const std::filesystem::path& path, const SideView& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << format_side_view(v);
  if (!out) throw DataError("write failed: " + path.string());
}

/// Graphs (or weighted networks, when a threshold is given), then views, with
/// per-view weights. An empty `weights` leaves every weight at 1.
inline DatasetBundle load_bundle(const std::filesystem::path& graphs, const std::vector<std::filesystem::path>& views,
                                 const std::vector<double>& weights = {},
                                 std::optional<double> threshold = std::nullopt) {
  DatasetBundle b;
  if (threshold) {
    const auto wd = load_weighted_networks(graphs);
    for (const auto& net : wd.networks) b.data.graphs.push_back(threshold_network(net, *threshold));
    b.data.labels = wd.labels;
  } else {
    b.data = load_graphs(graphs);
  }
  b.views = load_side_views(views, b.data.size());
  if (!weights.empty()) {
    if (weights.size() != b.views.size()) throw DataError("one weight per side view is required");
    for (std::size_t i = 0; i < weights.size(); ++i) b.views[i].weight = weights[i];
  }
  b.provenance.sources.push_back(graphs.string());
  for (const auto& v : views) b.provenance.sources.push_back(v.string());
  b.provenance.threshold = threshold;
  b.validate();
  return b;
}

}  // namespace gmsv
