#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gmsv/dfs_code.hpp"
#include "gmsv/graph.hpp"

namespace gmsv {

using Indicator = std::vector<std::uint8_t>;

/// One occurrence of a pattern in a host graph. `nodes[i]` is the host node
/// matched to discovery index i; `edges[k]` is the host edge matched to the
/// k-th DFS edge.
struct Embedding {
  int graph = 0;
  std::vector<int> nodes;
  std::vector<int> edges;
};

/// A connected subgraph pattern: its DFS code, every embedding in the dataset
/// (ordered by graph), and the derived indicator vector f with f[j] = 1 iff the
/// pattern occurs in graph j.
struct Pattern {
  DFSCode code;
  std::vector<Embedding> embeddings;
  Indicator indicator;
  int support = 0;

  /// Recomputes indicator and support from the embedding list.
  void refresh_support(std::size_t dataset_size) {
    indicator.assign(dataset_size, 0);
    for (const auto& e : embeddings) indicator.at(static_cast<std::size_t>(e.graph)) = 1;
    support = 0;
    for (auto b : indicator) support += b;
  }

  /// Indices of the supporting graphs, ascending.
  [[nodiscard]] std::vector<std::size_t> support_set() const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < indicator.size(); ++j)
      if (indicator[j]) s.push_back(j);
    return s;
  }
};

/// (count, indicator) of a pattern with populated embeddings.
inline std::pair<int, Indicator> support(const Pattern& p, std::size_t dataset_size) {
  Pattern tmp;
  tmp.embeddings = p.embeddings;
  tmp.refresh_support(dataset_size);
  return {tmp.support, std::move(tmp.indicator)};
}

/// All single-edge patterns occurring in the dataset, in canonical orientation
/// (from_label <= to_label), sorted by code.
inline std::vector<Pattern> single_edge_patterns(const GraphDataset& d) {
  std::map<DFSEdge, Pattern> by_edge;
  for (std::size_t gi = 0; gi < d.graphs.size(); ++gi) {
    const Graph& g = d.graphs[gi];
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      for (int flip = 0; flip < 2; ++flip) {
        const int a = flip ? e.v : e.u;
        const int b = flip ? e.u : e.v;
        const DFSEdge de{0, 1, g.node_label(a), e.label, g.node_label(b)};
        if (de.from_label > de.to_label) continue;
        auto& p = by_edge[de];
        p.embeddings.push_back({static_cast<int>(gi), {a, b}, {id}});
      }
    }
  }
  std::vector<Pattern> out;
  out.reserve(by_edge.size());
  for (auto& [edge, p] : by_edge) {
    p.code.edges = {edge};
    p.refresh_support(d.size());
    out.push_back(std::move(p));
  }
  return out;
}

/// Every one-edge rightmost extension of `p` that occurs in the dataset, with
/// embeddings and indicators, sorted by the new edge. Non-canonical codes are
/// included; callers filter with is_min.
inline std::vector<std::pair<DFSEdge, Pattern>> extension_candidates(const Pattern& p, const GraphDataset& d) {
  const auto rmpath = p.code.rightmost_path();
  const int right = p.code.rightmost();
  const int next = right + 1;
  std::vector<char> on_path(static_cast<std::size_t>(next), 0);
  for (int v : rmpath) on_path[static_cast<std::size_t>(v)] = 1;

  std::map<DFSEdge, std::vector<Embedding>> grown;
  std::vector<int> index_of;
  for (const auto& emb : p.embeddings) {
    const Graph& g = d.graphs.at(static_cast<std::size_t>(emb.graph));
    index_of.assign(static_cast<std::size_t>(g.node_count()), -1);
    for (std::size_t i = 0; i < emb.nodes.size(); ++i) index_of[static_cast<std::size_t>(emb.nodes[i])] = static_cast<int>(i);
    auto used = [&](int edge_id) {
      for (int e : emb.edges)
        if (e == edge_id) return true;
      return false;
    };
    auto push = [&](const DFSEdge& de, const Incidence& inc) {
      Embedding child{emb.graph, emb.nodes, emb.edges};
      if (de.is_forward()) child.nodes.push_back(inc.to);
      child.edges.push_back(inc.edge_id);
      grown[de].push_back(std::move(child));
    };

    const int hr = emb.nodes[static_cast<std::size_t>(right)];
    for (const auto& inc : g.neighbors(hr)) {
      const int j = index_of[static_cast<std::size_t>(inc.to)];
      if (j < 0 || j == right || !on_path[static_cast<std::size_t>(j)] || used(inc.edge_id)) continue;
      push(DFSEdge{right, j, g.node_label(hr), inc.label, g.node_label(inc.to)}, inc);
    }
    for (int u : rmpath) {
      const int hu = emb.nodes[static_cast<std::size_t>(u)];
      for (const auto& inc : g.neighbors(hu)) {
        if (index_of[static_cast<std::size_t>(inc.to)] >= 0) continue;
        push(DFSEdge{u, next, g.node_label(hu), inc.label, g.node_label(inc.to)}, inc);
      }
    }
  }

  std::vector<std::pair<DFSEdge, Pattern>> out;
  out.reserve(grown.size());
  for (auto& [edge, embs] : grown) {
    Pattern child;
    child.code = p.code.extended(edge);
    child.embeddings = std::move(embs);
    child.refresh_support(d.size());
    out.emplace_back(edge, std::move(child));
  }
  return out;
}

/// Canonical one-edge extensions of `p`: extension_candidates filtered by is_min.
inline std::vector<std::pair<DFSEdge, Pattern>> rightmost_extensions(const Pattern& p, const GraphDataset& d) {
  auto all = extension_candidates(p, d);
  std::vector<std::pair<DFSEdge, Pattern>> out;
  for (auto& c : all)
    if (is_min(c.second.code)) out.push_back(std::move(c));
  return out;
}

}  // namespace gmsv
