#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmsv/bundle.hpp"
#include "gmsv/error.hpp"
#include "gmsv/graph.hpp"
#include "gmsv/io.hpp"
#include "gmsv/rng.hpp"

namespace gmsv {

/// A motif placed at fixed node positions, present in a positive (negative)
/// graph with probability fidelity_pos (fidelity_neg).
struct PlantedMotif {
  std::vector<std::pair<int, int>> edges;
  double fidelity_pos = 1.0;
  double fidelity_neg = 0.0;
};

/// Class-conditional view: each of `dims` columns is
/// clip(0.5 + y * separation / 2 + sigma * N(0,1), 0, 1), so the class means sit
/// at +-separation on a [-1, 1] scale folded onto [0, 1].
struct ViewSpec {
  std::size_t dims = 2;
  double separation = 1.0;
  double sigma = 0.2;
};

struct SynthConfig {
  std::size_t n_per_class = 30;
  int nodes = 20;
  double edge_prob = 0.1;
  PlantedMotif planted{{{0, 1}, {1, 2}, {2, 3}}, 0.9, 0.1};
  std::vector<PlantedMotif> distractors;  // label-independent structure, typically equal fidelities
  std::vector<ViewSpec> views{ViewSpec{}};
  int node_label_count = 0;  // 0: node i carries label i (region ids); otherwise random labels in [0, count)
  std::uint64_t seed = 42;

  void validate() const {
    if (n_per_class == 0) throw DataError("n_per_class must be positive");
    if (nodes < 2) throw DataError("graphs need at least two nodes");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw DataError("edge probability must lie in [0, 1]");
    if (node_label_count < 0) throw DataError("node_label_count must be nonnegative");
    auto check = [&](const PlantedMotif& m, const char* what) {
      for (double f : {m.fidelity_pos, m.fidelity_neg})
        if (!(f >= 0.0 && f <= 1.0)) throw DataError(std::string(what) + " fidelity must lie in [0, 1]");
      if (m.edges.empty()) throw DataError(std::string(what) + " motif has no edges");
      std::set<std::pair<int, int>> seen;
      int top = 0;
      for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0) throw DataError(std::string(what) + " motif has a negative node");
        if (u == v) throw DataError(std::string(what) + " motif has a self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
          throw DataError(std::string(what) + " motif has a duplicate edge");
        top = std::max({top, u, v});
      }
      if (top >= nodes) throw DataError("planted pattern larger than graph");
      std::vector<char> used(static_cast<std::size_t>(top + 1), 0);
      for (auto [u, v] : m.edges) used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
      Graph compact;
      std::vector<int> remap(static_cast<std::size_t>(top + 1), -1);
      for (int i = 0; i <= top; ++i)
        if (used[static_cast<std::size_t>(i)]) remap[static_cast<std::size_t>(i)] = compact.add_node(0);
      for (auto [u, v] : m.edges) compact.add_edge(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)], 0);
      if (!compact.connected()) throw DataError(std::string(what) + " motif is not connected");
    };
    check(planted, "planted");
    for (const auto& d : distractors) check(d, "distractor");
    for (const auto& v : views) {
      if (v.dims == 0) throw DataError("side views need at least one dimension");
      if (!(v.sigma >= 0.0)) throw DataError("view sigma must be nonnegative");
    }
  }
};

/// Deterministic planted-signal bundle: n_per_class positive graphs followed by
/// n_per_class negative graphs, then one side view per ViewSpec.
inline DatasetBundle generate_synthetic(const SynthConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const auto n = static_cast<std::size_t>(cfg.nodes);

  std::set<int> motif_nodes;
  for (auto [u, v] : cfg.planted.edges) motif_nodes.insert({u, v});
  for (const auto& m : cfg.distractors)
    for (auto [u, v] : m.edges) motif_nodes.insert({u, v});

  DatasetBundle b;
  for (std::size_t gi = 0; gi < 2 * cfg.n_per_class; ++gi) {
    const int y = gi < cfg.n_per_class ? 1 : -1;
    std::vector<LabelId> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (cfg.node_label_count == 0) labels[i] = static_cast<LabelId>(i);
      else if (motif_nodes.count(static_cast<int>(i))) labels[i] = static_cast<LabelId>(i % static_cast<std::size_t>(cfg.node_label_count));
      else labels[i] = static_cast<LabelId>(uniform_below(rng, static_cast<std::uint64_t>(cfg.node_label_count)));
    }
    std::vector<char> adj(n * n, 0);
    auto at = [&](int u, int v) -> char& {
      return adj[static_cast<std::size_t>(std::min(u, v)) * n + static_cast<std::size_t>(std::max(u, v))];
    };
    for (int u = 0; u < cfg.nodes; ++u)
      for (int v = u + 1; v < cfg.nodes; ++v) at(u, v) = uniform01(rng) < cfg.edge_prob ? 1 : 0;

    auto place = [&](const PlantedMotif& m) {
      const double fidelity = y == 1 ? m.fidelity_pos : m.fidelity_neg;
      const bool present = uniform01(rng) < fidelity;
      if (present) {
        for (auto [u, v] : m.edges) at(u, v) = 1;
        return;
      }
      bool complete = true;
      for (auto [u, v] : m.edges) complete = complete && at(u, v);
      if (complete) {
        const auto drop = m.edges[static_cast<std::size_t>(uniform_below(rng, m.edges.size()))];
        at(drop.first, drop.second) = 0;
      }
    };
    for (const auto& m : cfg.distractors) place(m);
    place(cfg.planted);

    Graph g(std::move(labels));
    for (int u = 0; u < cfg.nodes; ++u)
      for (int v = u + 1; v < cfg.nodes; ++v)
        if (at(u, v)) g.add_edge(u, v, 0);
    b.data.graphs.push_back(std::move(g));
    b.data.labels.push_back(y);
  }

  for (std::size_t p = 0; p < cfg.views.size(); ++p) {
    const auto& spec = cfg.views[p];
    SideView v{"view" + std::to_string(p), Matrix(b.data.size(), spec.dims), 1.0};
    for (std::size_t r = 0; r < b.data.size(); ++r) {
      for (std::size_t c = 0; c < spec.dims; ++c) {
        const double x = 0.5 + b.data.labels[r] * spec.separation / 2.0 + spec.sigma * standard_normal(rng);
        v.values(r, c) = std::clamp(x, 0.0, 1.0);
      }
    }
    b.views.push_back(std::move(v));
  }
  b.provenance.sources.push_back("synthetic");
  b.provenance.seed = cfg.seed;
  return b;
}

struct BundleFiles {
  std::filesystem::path graphs;
  std::vector<std::filesystem::path> views;
};

/// Writes graphs.txt and one <view name>.csv per view into `dir`.
inline BundleFiles write_bundle(const std::filesystem::path& dir, const DatasetBundle& b) {
  std::filesystem::create_directories(dir);
  BundleFiles files{dir / "graphs.txt", {}};
  write_graphs(files.graphs, b.data);
  for (const auto& v : b.views) {
    files.views.push_back(dir / (v.name + ".csv"));
    write_side_view(files.views.back(), v);
  }
  return files;
}

}  // namespace gmsv
