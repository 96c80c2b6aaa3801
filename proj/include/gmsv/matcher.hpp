#pragma once

#include <cstddef>
#include <vector>

#include "gmsv/dfs_code.hpp"
#include "gmsv/graph.hpp"

namespace gmsv {

namespace detail {

// Plain backtracking subgraph matcher over the pattern graph, independent of
// the miner's embedding lists. Pattern vertices are matched in index order;
// every vertex after the first has a lower-indexed neighbor (codes are
// connected), which seeds its candidate set.
class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& pattern, const Graph& host)
      : pat_(pattern), host_(host), map_(static_cast<std::size_t>(pattern.node_count()), -1),
        taken_(static_cast<std::size_t>(host.node_count()), 0) {}

  bool exists() {
    if (pat_.node_count() == 0) return true;
    if (pat_.node_count() > host_.node_count() || pat_.edge_count() > host_.edge_count()) return false;
    return extend(0);
  }

 private:
  bool consistent(int pv, int hv) const {
    if (taken_[static_cast<std::size_t>(hv)] || pat_.node_label(pv) != host_.node_label(hv)) return false;
    for (const auto& inc : pat_.neighbors(pv)) {
      const int mapped = map_[static_cast<std::size_t>(inc.to)];
      if (mapped < 0) continue;
      const auto he = host_.edge_between(hv, mapped);
      if (!he || host_.edge(*he).label != inc.label) return false;
    }
    return true;
  }

  bool extend(int pv) {
    if (pv == pat_.node_count()) return true;
    int anchor = -1;
    for (const auto& inc : pat_.neighbors(pv)) {
      if (inc.to < pv) {
        anchor = inc.to;
        break;
      }
    }
    auto attempt = [&](int hv) {
      if (!consistent(pv, hv)) return false;
      map_[static_cast<std::size_t>(pv)] = hv;
      taken_[static_cast<std::size_t>(hv)] = 1;
      const bool ok = extend(pv + 1);
      taken_[static_cast<std::size_t>(hv)] = 0;
      map_[static_cast<std::size_t>(pv)] = -1;
      return ok;
    };
    if (anchor < 0) {
      for (int hv = 0; hv < host_.node_count(); ++hv)
        if (attempt(hv)) return true;
      return false;
    }
    for (const auto& inc : host_.neighbors(map_[static_cast<std::size_t>(anchor)]))
      if (attempt(inc.to)) return true;
    return false;
  }

  const Graph& pat_;
  const Graph& host_;
  std::vector<int> map_;
  std::vector<char> taken_;
};

}  // namespace detail

/// True iff the graph denoted by `code` is (label-preserving) subgraph-isomorphic to `g`.
inline bool contains(const Graph& g, const DFSCode& code) {
  const Graph pattern = code.to_graph();
  return detail::SubgraphMatcher(pattern, g).exists();
}

/// True iff `pattern` occurs in `g`.
inline bool contains(const Graph& g, const Graph& pattern) { return detail::SubgraphMatcher(pattern, g).exists(); }

}  // namespace gmsv
