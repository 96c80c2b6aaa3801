#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gmsv/error.hpp"
#include "gmsv/graph.hpp"

namespace gmsv {

/// One step of a DFS code: discovery indices of the endpoints plus the three labels.
/// Forward edges have from < to (and `to` is a newly discovered vertex); backward
/// edges have from > to.
struct DFSEdge {
  int from = 0;
  int to = 0;
  LabelId from_label = 0;
  LabelId edge_label = 0;
  LabelId to_label = 0;

  [[nodiscard]] bool is_forward() const noexcept { return from < to; }

  friend bool operator==(const DFSEdge&, const DFSEdge&) = default;

  /// gSpan DFS-lexicographic edge order, structure first and labels second:
  ///   both forward:   smaller `to`, then larger `from`
  ///   both backward:  smaller `from`, then smaller `to`
  ///   mixed:          backward (i1,j1) < forward (i2,j2) iff i1 < j2
  /// Encoded as a tuple key so that the order is total over all edges.
  friend std::strong_ordering operator<=>(const DFSEdge& a, const DFSEdge& b) noexcept {
    return a.order_key() <=> b.order_key();
  }

 private:
  [[nodiscard]] std::tuple<int, int, int, LabelId, LabelId, LabelId> order_key() const noexcept {
    if (is_forward()) return {to - 1, 1, -from, from_label, edge_label, to_label};
    return {from, 0, to, from_label, edge_label, to_label};
  }
};

/// Sequence of DFS edges. Codes compare lexicographically edge by edge, a proper
/// prefix being smaller.
struct DFSCode {
  std::vector<DFSEdge> edges;

  [[nodiscard]] std::size_t size() const noexcept { return edges.size(); }
  [[nodiscard]] bool empty() const noexcept { return edges.empty(); }

  [[nodiscard]] int vertex_count() const noexcept {
    int m = -1;
    for (const auto& e : edges) m = std::max({m, e.from, e.to});
    return m + 1;
  }

  /// Discovery index of the most recently discovered vertex.
  [[nodiscard]] int rightmost() const noexcept { return vertex_count() - 1; }

  /// Vertices on the path from the rightmost vertex back to the root,
  /// rightmost first.
  [[nodiscard]] std::vector<int> rightmost_path() const {
    std::vector<int> path;
    if (edges.empty()) return path;
    int cur = rightmost();
    path.push_back(cur);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      if (it->is_forward() && it->to == cur) {
        cur = it->from;
        path.push_back(cur);
      }
    }
    return path;
  }

  [[nodiscard]] DFSCode extended(const DFSEdge& e) const {
    DFSCode c = *this;
    c.edges.push_back(e);
    return c;
  }

  /// Materializes the graph the code denotes; node i is discovery index i.
  [[nodiscard]] Graph to_graph() const {
    std::vector<LabelId> labels(static_cast<std::size_t>(vertex_count()), -1);
    for (const auto& e : edges) {
      auto set = [&](int v, LabelId l) {
        auto& slot = labels.at(static_cast<std::size_t>(v));
        if (slot != -1 && slot != l) throw InvariantError("DFS code assigns two labels to one vertex");
        slot = l;
      };
      set(e.from, e.from_label);
      set(e.to, e.to_label);
    }
    Graph g(std::move(labels));
    for (const auto& e : edges) g.add_edge(e.from, e.to, e.edge_label);
    return g;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (i) os << ',';
      os << '(' << e.from << ',' << e.to << ',' << e.from_label << ',' << e.edge_label << ',' << e.to_label
         << ')';
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const DFSCode&, const DFSCode&) = default;
  friend std::strong_ordering operator<=>(const DFSCode& a, const DFSCode& b) noexcept {
    return std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                                  b.edges.end());
  }
};

namespace detail {

// Partial DFS traversal of a host graph realizing the code built so far.
struct Traversal {
  std::vector<int> host_of;   // discovery index -> host node
  std::vector<int> index_of;  // host node -> discovery index, -1 if undiscovered
  std::vector<char> used;     // host edge id -> already in the code
};

template <class Visit>
void for_each_extension(const Graph& g, const Traversal& t, const std::vector<int>& rmpath, Visit&& visit) {
  const int right = rmpath.front();
  const int next = static_cast<int>(t.host_of.size());
  std::vector<char> on_path(t.host_of.size(), 0);
  for (int v : rmpath) on_path[static_cast<std::size_t>(v)] = 1;

  const int hr = t.host_of[static_cast<std::size_t>(right)];
  for (const auto& inc : g.neighbors(hr)) {
    const int j = t.index_of[static_cast<std::size_t>(inc.to)];
    if (j < 0 || j == right || !on_path[static_cast<std::size_t>(j)] || t.used[static_cast<std::size_t>(inc.edge_id)])
      continue;
    visit(DFSEdge{right, j, g.node_label(hr), inc.label, g.node_label(inc.to)}, inc);
  }
  for (int u : rmpath) {
    const int hu = t.host_of[static_cast<std::size_t>(u)];
    for (const auto& inc : g.neighbors(hu)) {
      if (t.index_of[static_cast<std::size_t>(inc.to)] >= 0) continue;
      visit(DFSEdge{u, next, g.node_label(hu), inc.label, g.node_label(inc.to)}, inc);
    }
  }
}

inline Traversal advance(const Traversal& t, const DFSEdge& e, const Incidence& inc) {
  Traversal n = t;
  n.used[static_cast<std::size_t>(inc.edge_id)] = 1;
  if (e.is_forward()) {
    n.index_of[static_cast<std::size_t>(inc.to)] = e.to;
    n.host_of.push_back(inc.to);
  }
  return n;
}

// Greedy construction of the minimum DFS code over all traversals of g. With a
// target code, stops at the first position where the minimum differs and
// reports the mismatch by returning nullopt.
inline std::optional<DFSCode> build_min_code(const Graph& g, const DFSCode* target) {
  DFSCode code;
  std::vector<Traversal> live;

  std::optional<DFSEdge> first;
  for (const auto& e : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int a = flip ? e.v : e.u;
      const int b = flip ? e.u : e.v;
      const DFSEdge c{0, 1, g.node_label(a), e.label, g.node_label(b)};
      if (!first || c < *first) first = c;
    }
  }
  if (!first) return code;
  if (target && (target->empty() || target->edges.front() != *first)) return std::nullopt;
  for (const auto& e : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int a = flip ? e.v : e.u;
      const int b = flip ? e.u : e.v;
      if (DFSEdge{0, 1, g.node_label(a), e.label, g.node_label(b)} != *first) continue;
      Traversal t;
      t.host_of = {a, b};
      t.index_of.assign(static_cast<std::size_t>(g.node_count()), -1);
      t.index_of[static_cast<std::size_t>(a)] = 0;
      t.index_of[static_cast<std::size_t>(b)] = 1;
      t.used.assign(static_cast<std::size_t>(g.edge_count()), 0);
      t.used[static_cast<std::size_t>(
          g.edge_between(a, b).value())] = 1;
      live.push_back(std::move(t));
    }
  }
  code.edges.push_back(*first);

  while (static_cast<int>(code.size()) < g.edge_count()) {
    const auto rmpath = code.rightmost_path();
    std::optional<DFSEdge> best;
    for (const auto& t : live) {
      for_each_extension(g, t, rmpath, [&](const DFSEdge& e, const Incidence&) {
        if (!best || e < *best) best = e;
      });
    }
    if (!best) throw InvariantError("canonical traversal stalled before covering every edge");
    if (target && (target->size() <= code.size() || target->edges[code.size()] != *best)) return std::nullopt;

    std::vector<Traversal> next;
    for (const auto& t : live) {
      for_each_extension(g, t, rmpath, [&](const DFSEdge& e, const Incidence& inc) {
        if (e == *best) next.push_back(advance(t, e, inc));
      });
    }
    live = std::move(next);
    code.edges.push_back(*best);
  }
  if (target && target->size() != code.size()) return std::nullopt;
  return code;
}

}  // namespace detail

/// Canonical (lexicographically minimum) DFS code of a connected graph with at
/// least one edge. Isomorphic graphs yield identical codes.
inline DFSCode min_dfs_code(const Graph& g) {
  if (g.edge_count() == 0 || !g.connected()) throw DataError("not a pattern candidate");
  return *detail::build_min_code(g, nullptr);
}

/// True iff `code` is the canonical code of the graph it denotes.
inline bool is_min(const DFSCode& code) {
  if (code.empty()) return false;
  return detail::build_min_code(code.to_graph(), &code).has_value();
}

}  // namespace gmsv
