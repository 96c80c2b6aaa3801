#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmsv/dfs_code.hpp"
#include "gmsv/graph.hpp"
#include "gmsv/gside.hpp"
#include "gmsv/pattern.hpp"
#include "gmsv/side_views.hpp"
#include "gmsv/topk.hpp"

namespace gmsv {

struct MinerConfig {
  double min_sup = 0.2;  // fraction of graphs, in (0, 1]
  std::size_t k = 10;
  bool pruning = true;
  std::optional<std::size_t> max_pattern_edges;  // unlimited when empty

  void validate() const {
    if (!(min_sup > 0.0 && min_sup <= 1.0)) throw std::invalid_argument("min_sup must lie in (0, 1]");
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (max_pattern_edges && *max_pattern_edges == 0) throw std::invalid_argument("max_pattern_edges must be positive");
  }
};

/// Minimum number of supporting graphs: ceil(min_sup * n), at least 1. A
/// relative slack of 1e-9 absorbs products like 0.1 * 30 = 3.0000000000000004.
inline int frequency_threshold(double min_sup, std::size_t n) {
  const double raw = min_sup * static_cast<double>(n);
  const int t = static_cast<int>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
  return std::max(1, t);
}

struct MiningStats {
  std::size_t explored = 0;         // DFS-code-tree nodes whose frequency was evaluated
  std::size_t pruned_subtrees = 0;  // frequent nodes whose children were skipped by the bound
  double wall_seconds = 0.0;
};

struct MiningResult {
  std::vector<ScoredPattern> patterns;  // ascending by (q, code)
  MiningStats stats;
  std::optional<std::string> warning;
};

/// Called for every frequent canonical node the search visits, with its parent
/// (null for single-edge roots).
using MineObserver = std::function<void(const ScoredPattern* parent, const ScoredPattern& node)>;

/// Scores a pattern as (q, qhat) where qhat bounds q of every supergraph from below.
using PatternScorer = std::function<std::pair<double, double>(const Pattern&)>;

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const GraphDataset& d, const MinerConfig& cfg, PatternScorer scorer, const MineObserver* observer)
      : d_(d), cfg_(cfg), scorer_(std::move(scorer)), observer_(observer), buffer_(cfg.k),
        min_count_(frequency_threshold(cfg.min_sup, d.size())) {}

  MiningResult run() {
    const auto start = std::chrono::steady_clock::now();
    MiningResult result;
    bool any_frequent = false;
    for (auto& root : single_edge_patterns(d_)) {
      ++stats_.explored;
      if (root.support < min_count_) continue;
      any_frequent = true;
      visit(score(std::move(root)), nullptr);
    }
    stats_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.stats = stats_;
    result.patterns = std::move(buffer_).take();
    if (!any_frequent) result.warning = "no frequent single edge at min_sup";
    return result;
  }

 private:
  ScoredPattern score(Pattern p) {
    const auto [q, qhat] = scorer_(p);
    return {std::move(p), q, qhat};
  }

  void visit(const ScoredPattern& node, const ScoredPattern* parent) {
    if (observer_ && *observer_) (*observer_)(parent, node);
    buffer_.offer(node);
    if (cfg_.pruning && buffer_.full() && node.qhat >= buffer_.threshold()) {
      ++stats_.pruned_subtrees;
      return;
    }
    if (cfg_.max_pattern_edges && node.pattern.code.size() >= *cfg_.max_pattern_edges) return;
    for (auto& [edge, child] : extension_candidates(node.pattern, d_)) {
      ++stats_.explored;
      if (child.support < min_count_) continue;
      if (!is_min(child.code)) continue;
      visit(score(std::move(child)), &node);
    }
  }

  const GraphDataset& d_;
  const MinerConfig& cfg_;
  PatternScorer scorer_;
  const MineObserver* observer_;
  TopKBuffer buffer_;
  int min_count_;
  MiningStats stats_;
};

}  // namespace detail

/// Depth-first search of the DFS code tree keeping the k best patterns under an
/// arbitrary anti-monotone-bounded scorer. Children are visited in ascending
/// edge order, so patterns are reached in ascending code order.
inline MiningResult search_topk(const GraphDataset& d, const MinerConfig& cfg, PatternScorer scorer,
                                const MineObserver* observer = nullptr) {
  d.require_both_classes();
  cfg.validate();
  return detail::BranchAndBound(d, cfg, std::move(scorer), observer).run();
}

/// gMSV: the k frequent subgraph patterns with the smallest gSide score,
/// pruning subtrees whose lower bound reaches the current k-th best score.
inline MiningResult mine(const GraphDataset& d, const LaplacianPair& lp, const MinerConfig& cfg,
                         const MineObserver* observer = nullptr) {
  if (lp.size() != d.size()) throw DataError("Laplacian size does not match dataset size");
  return search_topk(
      d, cfg,
      [&lp](const Pattern& p) {
        return std::pair{gside_score(p.indicator, lp), gside_lower_bound(p.indicator, lp)};
      },
      observer);
}

/// The same search with bound-based pruning disabled; only the frequency gate applies.
inline MiningResult mine_unpruned(const GraphDataset& d, const LaplacianPair& lp, MinerConfig cfg,
                                  const MineObserver* observer = nullptr) {
  cfg.pruning = false;
  return mine(d, lp, cfg, observer);
}

/// Frequency baseline: the k most frequent patterns, ties by code. Support is
/// anti-monotone, so the negated support is its own bound.
inline std::vector<Pattern> mine_frequent_topk(const GraphDataset& d, const MinerConfig& cfg) {
  auto r = search_topk(d, cfg, [](const Pattern& p) {
    const double s = -static_cast<double>(p.support);
    return std::pair{s, s};
  });
  std::vector<Pattern> out;
  out.reserve(r.patterns.size());
  for (auto& sp : r.patterns) out.push_back(std::move(sp.pattern));
  return out;
}

}  // namespace gmsv
