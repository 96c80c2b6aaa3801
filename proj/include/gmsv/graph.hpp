#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmsv/error.hpp"

namespace gmsv {

using LabelId = std::int32_t;

struct Edge {
  int u = 0;
  int v = 0;
  LabelId label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int to = 0;
  LabelId label = 0;
  int edge_id = 0;
};

/// Undirected simple graph with integer node and edge labels.
///
/// Nodes are 0..node_count()-1. Self-loops and parallel edges are rejected on
/// insertion, so every Graph value satisfies the simple-graph invariants.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::vector<LabelId> node_labels) : labels_(std::move(node_labels)), adj_(labels_.size()) {
    for (LabelId l : labels_) {
      if (l < 0) throw DataError("negative node label");
    }
  }

  int add_node(LabelId label) {
    if (label < 0) throw DataError("negative node label");
    labels_.push_back(label);
    adj_.emplace_back();
    return static_cast<int>(labels_.size()) - 1;
  }

  int add_edge(int u, int v, LabelId label) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
      throw DataError("edge references undeclared vertex");
    if (u == v) throw DataError("self-loop");
    if (label < 0) throw DataError("negative edge label");
    if (edge_between(u, v)) throw DataError("duplicate edge");
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v, label});
    adj_[static_cast<std::size_t>(u)].push_back({v, label, id});
    adj_[static_cast<std::size_t>(v)].push_back({u, label, id});
    return id;
  }

  [[nodiscard]] int node_count() const noexcept { return static_cast<int>(labels_.size()); }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] LabelId node_label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<LabelId>& node_labels() const noexcept { return labels_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  [[nodiscard]] std::span<const Incidence> neighbors(int v) const {
    return adj_.at(static_cast<std::size_t>(v));
  }

  /// Edge id of {u,v}, if present.
  [[nodiscard]] std::optional<int> edge_between(int u, int v) const {
    const auto& a = adj_.at(static_cast<std::size_t>(u));
    const auto it = std::find_if(a.begin(), a.end(), [v](const Incidence& i) { return i.to == v; });
    if (it == a.end()) return std::nullopt;
    return it->edge_id;
  }

  /// True when every node is reachable from node 0. The empty graph counts as connected.
  [[nodiscard]] bool connected() const {
    if (labels_.empty()) return true;
    std::vector<char> seen(labels_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& inc : neighbors(v)) {
        if (!seen[static_cast<std::size_t>(inc.to)]) {
          seen[static_cast<std::size_t>(inc.to)] = 1;
          ++reached;
          stack.push_back(inc.to);
        }
      }
    }
    return reached == labels_.size();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<LabelId> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Labeled graph collection. Class labels are -1 or +1, one per graph.
struct GraphDataset {
  std::vector<Graph> graphs;
  std::vector<int> labels;

  [[nodiscard]] std::size_t size() const noexcept { return graphs.size(); }

  [[nodiscard]] std::size_t count_label(int y) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), y));
  }

  void validate() const {
    if (labels.size() != graphs.size())
      throw DataError("label count " + std::to_string(labels.size()) + " does not match graph count " +
                      std::to_string(graphs.size()));
    for (int y : labels) {
      if (y != 1 && y != -1) throw DataError("class label outside {-1,+1}: " + std::to_string(y));
    }
  }

  /// Mining and classification entry points need both classes.
  void require_both_classes() const {
    validate();
    if (count_label(1) == 0 || count_label(-1) == 0) throw DataError("dataset must contain both classes");
  }

  [[nodiscard]] GraphDataset subset(std::span<const std::size_t> rows) const {
    GraphDataset out;
    out.graphs.reserve(rows.size());
    out.labels.reserve(rows.size());
    for (std::size_t r : rows) {
      out.graphs.push_back(graphs.at(r));
      out.labels.push_back(labels.at(r));
    }
    return out;
  }

  friend bool operator==(const GraphDataset&, const GraphDataset&) = default;
};

}  // namespace gmsv
