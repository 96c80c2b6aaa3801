#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gmsv/dfs_code.hpp"
#include "gmsv/error.hpp"
#include "gmsv/gside.hpp"
#include "gmsv/matcher.hpp"
#include "gmsv/miner.hpp"
#include "gmsv/topk.hpp"

namespace gmsv {

/// Guard on the number of connected edge subsets the brute-force enumerator visits.
inline constexpr std::size_t kBruteForceLimit = 1'000'000;

/// Every connected edge subset of `g` with at most `max_edges` edges, as sorted
/// edge-id lists. Throws once `budget` is exhausted.
inline std::vector<std::vector<int>> connected_edge_subsets(const Graph& g, std::size_t max_edges,
                                                            std::size_t& budget) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen.insert({e}).second) frontier.push_back({e});
  }
  std::vector<std::vector<int>> all = frontier;
  for (std::size_t size = 1; size < max_edges && !frontier.empty(); ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& set : frontier) {
      std::vector<char> touched(static_cast<std::size_t>(g.node_count()), 0);
      for (int e : set) {
        touched[static_cast<std::size_t>(g.edge(e).u)] = 1;
        touched[static_cast<std::size_t>(g.edge(e).v)] = 1;
      }
      for (int e = 0; e < g.edge_count(); ++e) {
        if (std::binary_search(set.begin(), set.end(), e)) continue;
        const Edge& ed = g.edge(e);
        if (!touched[static_cast<std::size_t>(ed.u)] && !touched[static_cast<std::size_t>(ed.v)]) continue;
        auto grown = set;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), e), e);
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    for (const auto& s : next) all.push_back(s);
    frontier = std::move(next);
    if (all.size() > budget) throw DataError("brute-force enumeration guard exceeded");
  }
  if (all.size() > budget) throw DataError("brute-force enumeration guard exceeded");
  budget -= all.size();
  return all;
}

/// The subgraph of `g` induced by an edge set (not by its vertex set).
inline Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
  std::map<int, int> remap;
  std::vector<LabelId> labels;
  for (int e : edge_ids) {
    for (int v : {g.edge(e).u, g.edge(e).v}) {
      if (remap.emplace(v, static_cast<int>(labels.size())).second) labels.push_back(g.node_label(v));
    }
  }
  Graph sub(std::move(labels));
  for (int e : edge_ids) sub.add_edge(remap.at(g.edge(e).u), remap.at(g.edge(e).v), g.edge(e).label);
  return sub;
}

/// All distinct connected patterns (canonical codes) with 1..max_edges edges
/// occurring in the dataset.
inline std::set<DFSCode> enumerate_connected_patterns(const GraphDataset& d, std::size_t max_edges) {
  std::set<DFSCode> codes;
  std::size_t budget = kBruteForceLimit;
  for (const auto& g : d.graphs) {
    for (const auto& subset : connected_edge_subsets(g, max_edges, budget))
      codes.insert(min_dfs_code(edge_subgraph(g, subset)));
  }
  return codes;
}

/// Exhaustive reference for mine() over a candidate set (typically from
/// enumerate_connected_patterns): count support with contains(), keep frequent
/// patterns, rank by (q, code), return the first k. The returned patterns carry
/// code, indicator and support but no embeddings.
inline std::vector<ScoredPattern> brute_force_topk(const GraphDataset& d, const LaplacianPair& lp,
                                                   const std::set<DFSCode>& candidates, const MinerConfig& cfg) {
  d.require_both_classes();
  cfg.validate();
  if (lp.size() != d.size()) throw DataError("Laplacian size does not match dataset size");
  const int min_count = frequency_threshold(cfg.min_sup, d.size());
  std::vector<ScoredPattern> ranked;
  for (const auto& code : candidates) {
    ScoredPattern sp;
    sp.pattern.code = code;
    sp.pattern.indicator.assign(d.size(), 0);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (contains(d.graphs[j], code)) {
        sp.pattern.indicator[j] = 1;
        ++sp.pattern.support;
      }
    }
    if (sp.pattern.support < min_count) continue;
    sp.q = gside_score(sp.pattern.indicator, lp);
    sp.qhat = gside_lower_bound(sp.pattern.indicator, lp);
    ranked.push_back(std::move(sp));
  }
  std::sort(ranked.begin(), ranked.end(), ranks_before);
  if (ranked.size() > cfg.k) ranked.resize(cfg.k);
  return ranked;
}

inline std::vector<ScoredPattern> brute_force_topk(const GraphDataset& d, const LaplacianPair& lp,
                                                   std::size_t max_edges, const MinerConfig& cfg) {
  return brute_force_topk(d, lp, enumerate_connected_patterns(d, max_edges), cfg);
}

}  // namespace gmsv
