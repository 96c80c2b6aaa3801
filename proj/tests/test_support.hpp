#pragma once

// Test-only oracles and generators. Nothing here calls into the canonical-code
// builder or the miner's extension code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gmsv.hpp"

namespace gmsv::testing {

/// Every DFS code of a connected graph, by exhaustive enumeration of DFS
/// traversals (all start vertices, all child orders). When a vertex is
/// discovered its backward edges follow at once, ascending by target index.
inline std::vector<DFSCode> all_dfs_codes(const Graph& g) {
  struct State {
    std::vector<int> index_of;
    std::vector<int> stack;
    std::vector<char> used;
    DFSCode code;
    int next = 0;
  };
  std::vector<DFSCode> out;
  std::function<void(State)> explore = [&](State s) {
    while (!s.stack.empty()) {
      const int top = s.stack.back();
      bool open = false;
      for (const auto& inc : g.neighbors(top))
        if (s.index_of[static_cast<std::size_t>(inc.to)] < 0) open = true;
      if (open) break;
      s.stack.pop_back();
    }
    if (s.stack.empty()) {
      if (static_cast<int>(s.code.size()) == g.edge_count()) out.push_back(s.code);
      return;
    }
    const int top = s.stack.back();
    for (const auto& inc : g.neighbors(top)) {
      if (s.index_of[static_cast<std::size_t>(inc.to)] >= 0) continue;
      State c = s;
      const int u = inc.to;
      const int ui = c.next++;
      c.index_of[static_cast<std::size_t>(u)] = ui;
      c.used[static_cast<std::size_t>(inc.edge_id)] = 1;
      c.code.edges.push_back({c.index_of[static_cast<std::size_t>(top)], ui, g.node_label(top), inc.label, g.node_label(u)});
      std::vector<std::pair<int, Incidence>> back;
      for (const auto& b : g.neighbors(u)) {
        const int bi = c.index_of[static_cast<std::size_t>(b.to)];
        if (bi >= 0 && !c.used[static_cast<std::size_t>(b.edge_id)]) back.push_back({bi, b});
      }
      std::sort(back.begin(), back.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [bi, b] : back) {
        c.used[static_cast<std::size_t>(b.edge_id)] = 1;
        c.code.edges.push_back({ui, bi, g.node_label(u), b.label, g.node_label(b.to)});
      }
      c.stack.push_back(u);
      explore(std::move(c));
    }
  };
  for (int s = 0; s < g.node_count(); ++s) {
    State st;
    st.index_of.assign(static_cast<std::size_t>(g.node_count()), -1);
    st.used.assign(static_cast<std::size_t>(g.edge_count()), 0);
    st.index_of[static_cast<std::size_t>(s)] = 0;
    st.next = 1;
    st.stack = {s};
    explore(std::move(st));
  }
  return out;
}

inline DFSCode brute_force_min_code(const Graph& g) {
  const auto codes = all_dfs_codes(g);
  return *std::min_element(codes.begin(), codes.end());
}

/// Relabels node v as perm[v].
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  std::vector<LabelId> labels(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = g.node_label(v);
  Graph out(labels);
  for (const auto& e : g.edges()) out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.label);
  return out;
}

inline Graph random_graph(Rng& rng, int nodes, int max_edges, double p, int node_labels, int edge_labels) {
  std::vector<LabelId> labels(static_cast<std::size_t>(nodes));
  for (auto& l : labels) l = static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(node_labels)));
  Graph g(labels);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < nodes; ++u)
    for (int v = u + 1; v < nodes; ++v) pairs.push_back({u, v});
  shuffle(pairs, rng);
  for (auto [u, v] : pairs) {
    if (g.edge_count() >= max_edges) break;
    if (uniform01(rng) < p) g.add_edge(u, v, static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(edge_labels))));
  }
  return g;
}

/// Random spanning tree plus extra edges, so the result is connected.
inline Graph random_connected_graph(Rng& rng, int nodes, int extra_edges, int node_labels, int edge_labels) {
  std::vector<LabelId> labels(static_cast<std::size_t>(nodes));
  for (auto& l : labels) l = static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(node_labels)));
  Graph g(labels);
  for (int v = 1; v < nodes; ++v)
    g.add_edge(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v))), v,
               static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(edge_labels))));
  for (int t = 0; t < extra_edges * 4 && extra_edges > 0; ++t) {
    const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nodes)));
    const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nodes)));
    if (u == v || g.edge_between(u, v)) continue;
    g.add_edge(u, v, static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(edge_labels))));
    if (--extra_edges == 0) break;
  }
  return g;
}

struct RandomDatasetSpec {
  int graphs = 20;
  int max_nodes = 8;
  int max_edges = 12;
  int node_labels = 3;
  int edge_labels = 2;
};

/// Random labeled dataset with both classes present.
inline GraphDataset random_dataset(Rng& rng, const RandomDatasetSpec& spec) {
  GraphDataset d;
  for (int i = 0; i < spec.graphs; ++i) {
    const int nodes = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(spec.max_nodes - 2)));
    d.graphs.push_back(random_graph(rng, nodes, spec.max_edges, 0.5, spec.node_labels, spec.edge_labels));
    d.labels.push_back(i % 2 == 0 ? 1 : -1);
  }
  shuffle(d.labels, rng);
  return d;
}

inline SideView random_view(Rng& rng, std::size_t n, std::size_t dims, std::span<const int> labels, double shift,
                            const std::string& name) {
  SideView v{name, Matrix(n, dims), 1.0};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < dims; ++c) v.values(r, c) = standard_normal(rng) + shift * labels[r];
  return minmax_normalize(v);
}

}  // namespace gmsv::testing
