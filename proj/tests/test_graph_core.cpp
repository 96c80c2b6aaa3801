#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_support.hpp"

using namespace gmsv;
using gmsv::testing::all_dfs_codes;
using gmsv::testing::brute_force_min_code;

namespace {

Graph path(std::vector<LabelId> labels, LabelId edge = 0) {
  Graph g(labels);
  for (int v = 1; v < static_cast<int>(labels.size()); ++v) g.add_edge(v - 1, v, edge);
  return g;
}

Graph triangle(LabelId a = 0) {
  Graph g({a, a, a});
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 0);
  g.add_edge(2, 0, 0);
  return g;
}

DFSCode code(std::vector<DFSEdge> e) { return DFSCode{std::move(e)}; }

std::set<DFSCode> all_frequent_via_search(const GraphDataset& d, double min_sup) {
  std::set<DFSCode> out;
  const int t = frequency_threshold(min_sup, d.size());
  std::function<void(const Pattern&)> walk = [&](const Pattern& p) {
    out.insert(p.code);
    for (auto& [e, c] : rightmost_extensions(p, d))
      if (c.support >= t) walk(c);
  };
  for (const auto& p : single_edge_patterns(d))
    if (p.support >= t) walk(p);
  return out;
}

}  // namespace

TEST(Graph, RejectsInvalidEdges) {
  Graph g({0, 1, 2});
  g.add_edge(0, 1, 0);
  EXPECT_THROW(g.add_edge(0, 0, 0), DataError);
  EXPECT_THROW(g.add_edge(1, 0, 0), DataError);
  EXPECT_THROW(g.add_edge(0, 3, 0), DataError);
  EXPECT_THROW(g.add_edge(0, 2, -1), DataError);
  EXPECT_THROW(Graph({0, -1}), DataError);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.edge_between(1, 0).value(), 0);
  EXPECT_FALSE(g.edge_between(1, 2));
}

TEST(Graph, Connectivity) {
  Graph g({0, 0, 0});
  g.add_edge(0, 1, 0);
  EXPECT_FALSE(g.connected());
  g.add_edge(1, 2, 0);
  EXPECT_TRUE(g.connected());
}

TEST(Dataset, ValidationAndSubset) {
  GraphDataset d{{path({0, 1}), path({1, 2}), path({0, 2})}, {1, -1, 1}};
  EXPECT_NO_THROW(d.require_both_classes());
  const std::vector<std::size_t> rows{2, 0};
  const auto s = d.subset(rows);
  EXPECT_EQ(s.labels, (std::vector<int>{1, 1}));
  EXPECT_THROW(s.require_both_classes(), DataError);
  d.labels[0] = 0;
  EXPECT_THROW(d.validate(), DataError);
  d.labels.pop_back();
  EXPECT_THROW(d.validate(), DataError);
}

TEST(DFSEdgeOrder, StandardGSpanOrder) {
  // forward: smaller to first, then larger from
  EXPECT_LT((DFSEdge{1, 2, 0, 0, 0}), (DFSEdge{0, 3, 0, 0, 0}));
  EXPECT_LT((DFSEdge{1, 2, 0, 0, 0}), (DFSEdge{0, 2, 0, 0, 0}));
  // backward: smaller from, then smaller to
  EXPECT_LT((DFSEdge{2, 0, 0, 0, 0}), (DFSEdge{3, 0, 0, 0, 0}));
  EXPECT_LT((DFSEdge{3, 0, 0, 0, 0}), (DFSEdge{3, 1, 0, 0, 0}));
  // mixed: backward (i1,j1) < forward (i2,j2) iff i1 < j2
  EXPECT_LT((DFSEdge{2, 0, 0, 0, 0}), (DFSEdge{2, 3, 0, 0, 0}));
  EXPECT_LT((DFSEdge{1, 2, 0, 0, 0}), (DFSEdge{2, 0, 0, 0, 0}));
  // labels last
  EXPECT_LT((DFSEdge{0, 1, 0, 0, 1}), (DFSEdge{0, 1, 0, 1, 0}));
  EXPECT_LT((DFSEdge{0, 1, 0, 5, 5}), (DFSEdge{0, 1, 1, 0, 0}));
}

TEST(MinDfsCode, PathExample) {
  EXPECT_EQ(min_dfs_code(path({0, 1})), code({{0, 1, 0, 0, 1}}));
  EXPECT_EQ(min_dfs_code(path({1, 0})), code({{0, 1, 0, 0, 1}}));
}

TEST(MinDfsCode, TriangleExample) {
  EXPECT_EQ(min_dfs_code(triangle()), code({{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {2, 0, 0, 0, 0}}));
  EXPECT_EQ(brute_force_min_code(triangle()), min_dfs_code(triangle()));
}

TEST(MinDfsCode, SingleEdgeEqualLabelsIgnoresNumbering) {
  Graph a({3, 3});
  a.add_edge(0, 1, 2);
  Graph b({3, 3});
  b.add_edge(1, 0, 2);
  EXPECT_EQ(min_dfs_code(a), code({{0, 1, 3, 2, 3}}));
  EXPECT_EQ(min_dfs_code(a), min_dfs_code(b));
}

TEST(MinDfsCode, RejectsNonCandidates) {
  EXPECT_THROW(min_dfs_code(Graph({0, 1})), DataError);
  Graph g({0, 0, 0, 0});
  g.add_edge(0, 1, 0);
  g.add_edge(2, 3, 0);
  EXPECT_THROW(min_dfs_code(g), DataError);
}

TEST(MinDfsCode, MatchesBruteForceOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + static_cast<int>(uniform_below(rng, 5));
    const Graph g = gmsv::testing::random_connected_graph(rng, nodes, static_cast<int>(uniform_below(rng, 4)),
                                                          1 + static_cast<int>(uniform_below(rng, 3)),
                                                          1 + static_cast<int>(uniform_below(rng, 2)));
    ASSERT_EQ(min_dfs_code(g), brute_force_min_code(g)) << "trial " << trial;
  }
}

TEST(MinDfsCode, InvariantUnderPermutation) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + static_cast<int>(uniform_below(rng, 5));
    const Graph g = gmsv::testing::random_connected_graph(rng, nodes, static_cast<int>(uniform_below(rng, 5)),
                                                          1 + static_cast<int>(uniform_below(rng, 3)), 2);
    std::vector<int> perm(static_cast<std::size_t>(nodes));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    ASSERT_EQ(min_dfs_code(g), min_dfs_code(gmsv::testing::permute(g, perm))) << "trial " << trial;
  }
}

TEST(MinDfsCode, CodeDenotesTheGraph) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gmsv::testing::random_connected_graph(rng, 5, 3, 2, 2);
    EXPECT_TRUE(contains(min_dfs_code(g).to_graph(), g));
    EXPECT_EQ(min_dfs_code(g).to_graph().edge_count(), g.edge_count());
  }
}

TEST(IsMin, CanonicalAndNonCanonical) {
  EXPECT_TRUE(is_min(min_dfs_code(triangle())));
  // triangle with labels a,a,b: starting at the b vertex gives a larger code
  Graph t({0, 0, 1});
  t.add_edge(0, 1, 0);
  t.add_edge(1, 2, 0);
  t.add_edge(2, 0, 0);
  const DFSCode canonical = min_dfs_code(t);
  EXPECT_EQ(canonical, brute_force_min_code(t));
  const DFSCode rotated = code({{0, 1, 0, 0, 1}, {1, 2, 1, 0, 0}, {2, 0, 0, 0, 0}});
  EXPECT_LT(canonical, rotated);
  EXPECT_FALSE(is_min(rotated));
  EXPECT_FALSE(is_min(code({{0, 1, 1, 0, 0}})));
  EXPECT_TRUE(is_min(code({{0, 1, 0, 3, 1}})));
  EXPECT_TRUE(is_min(code({{0, 1, 2, 0, 2}})));
}

TEST(IsMin, AgreesWithBruteForceOverAllTraversals) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = gmsv::testing::random_connected_graph(rng, 2 + static_cast<int>(uniform_below(rng, 4)),
                                                          static_cast<int>(uniform_below(rng, 3)), 2, 2);
    const auto codes = all_dfs_codes(g);
    const DFSCode best = *std::min_element(codes.begin(), codes.end());
    for (const auto& c : codes) ASSERT_EQ(is_min(c), c == best) << c.to_string();
  }
}

TEST(DFSCode, RightmostPathAndText) {
  const DFSCode c = code({{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {2, 0, 0, 0, 0}, {0, 3, 0, 1, 2}});
  EXPECT_EQ(c.rightmost(), 3);
  EXPECT_EQ(c.rightmost_path(), (std::vector<int>{3, 0}));
  EXPECT_EQ(c.to_string(), "[(0,1,0,0,0),(1,2,0,0,0),(2,0,0,0,0),(0,3,0,1,2)]");
}

TEST(Extensions, TriangleGrowsPathThenCloses) {
  GraphDataset d{{triangle()}, {1}};
  const auto roots = single_edge_patterns(d);
  ASSERT_EQ(roots.size(), 1u);
  const auto level1 = rightmost_extensions(roots[0], d);
  ASSERT_EQ(level1.size(), 1u);
  EXPECT_EQ(level1[0].first, (DFSEdge{1, 2, 0, 0, 0}));
  const auto level2 = rightmost_extensions(level1[0].second, d);
  ASSERT_EQ(level2.size(), 1u);
  EXPECT_EQ(level2[0].first, (DFSEdge{2, 0, 0, 0, 0}));
  EXPECT_TRUE(rightmost_extensions(level2[0].second, d).empty());
}

TEST(Extensions, WholeGraphHasNoExtension) {
  const Graph g = path({0, 1, 2});
  GraphDataset d{{g}, {1}};
  Pattern p;
  p.code = min_dfs_code(g);
  for (auto& root : single_edge_patterns(d)) {
    for (auto& [e, c] : rightmost_extensions(root, d)) {
      if (c.code == p.code) EXPECT_TRUE(rightmost_extensions(c, d).empty());
    }
  }
}

TEST(Support, IndicatorExamples) {
  GraphDataset d{{path({0, 1}), path({0, 1, 2}), path({2, 2})}, {1, -1, 1}};
  const auto roots = single_edge_patterns(d);
  const auto it = std::find_if(roots.begin(), roots.end(), [](const Pattern& p) { return p.code == code({{0, 1, 0, 0, 1}}); });
  ASSERT_NE(it, roots.end());
  const auto [count, f] = support(*it, d.size());
  EXPECT_EQ(count, 2);
  EXPECT_EQ(f, (Indicator{1, 1, 0}));

  GraphDataset all{{path({0, 1}), path({1, 0}), path({0, 1, 0})}, {1, -1, 1}};
  for (const auto& p : single_edge_patterns(all)) {
    if (p.code == code({{0, 1, 0, 0, 1}})) {
      EXPECT_EQ(p.support, 3);
      EXPECT_EQ(p.indicator, (Indicator{1, 1, 1}));
    }
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(triangle(), code({{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}})));
  Graph g({0, 0});
  g.add_edge(0, 1, 1);
  EXPECT_FALSE(contains(g, code({{0, 1, 0, 0, 0}})));
  EXPECT_TRUE(contains(g, code({{0, 1, 0, 1, 0}})));
  // a 4-cycle does not contain a triangle
  Graph c4({0, 0, 0, 0});
  for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4, 0);
  EXPECT_FALSE(contains(c4, triangle()));
}

TEST(Properties, AntiMonotoneAndEmbeddingsAgreeWithContains) {
  Rng rng(21);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const GraphDataset d = gmsv::testing::random_dataset(rng, {12, 7, 9, 2, 2});
    std::function<void(const Pattern&, int)> walk = [&](const Pattern& p, int depth) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        ASSERT_EQ(contains(d.graphs[j], p.code), p.indicator[j] == 1) << p.code.to_string() << " graph " << j;
        ++pairs;
      }
      if (depth >= 4) return;
      for (auto& [e, c] : rightmost_extensions(p, d)) {
        for (std::size_t j = 0; j < d.size(); ++j) ASSERT_LE(c.indicator[j], p.indicator[j]);
        ASSERT_LE(c.support, p.support);
        ASSERT_GE(c.support, 1);
        walk(c, depth + 1);
      }
    };
    for (const auto& root : single_edge_patterns(d)) walk(root, 1);
  }
  EXPECT_GE(pairs, 1000u);
}

TEST(Properties, EmbeddingsAreInjectiveAndLabelPreserving) {
  Rng rng(33);
  const GraphDataset d = gmsv::testing::random_dataset(rng, {10, 7, 10, 2, 2});
  std::function<void(const Pattern&)> walk = [&](const Pattern& p) {
    for (const auto& emb : p.embeddings) {
      const Graph& g = d.graphs[static_cast<std::size_t>(emb.graph)];
      std::set<int> nodes(emb.nodes.begin(), emb.nodes.end());
      ASSERT_EQ(nodes.size(), emb.nodes.size());
      for (std::size_t k = 0; k < p.code.size(); ++k) {
        const auto& de = p.code.edges[k];
        const int hu = emb.nodes[static_cast<std::size_t>(de.from)];
        const int hv = emb.nodes[static_cast<std::size_t>(de.to)];
        ASSERT_EQ(g.node_label(hu), de.from_label);
        ASSERT_EQ(g.node_label(hv), de.to_label);
        const auto id = g.edge_between(hu, hv);
        ASSERT_TRUE(id);
        ASSERT_EQ(*id, emb.edges[k]);
        ASSERT_EQ(g.edge(*id).label, de.edge_label);
      }
    }
    if (p.code.size() < 4)
      for (auto& [e, c] : rightmost_extensions(p, d)) walk(c);
  };
  for (const auto& root : single_edge_patterns(d)) walk(root);
}

TEST(Properties, CompletenessAgainstBruteForceEnumeration) {
  Rng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const GraphDataset d = gmsv::testing::random_dataset(rng, {10, 8, 9, 2, 2});
    for (double min_sup : {0.1, 0.3}) {
      const int t = frequency_threshold(min_sup, d.size());
      std::set<DFSCode> expected;
      for (const auto& c : enumerate_connected_patterns(d, 64)) {
        int s = 0;
        for (const auto& g : d.graphs) s += contains(g, c) ? 1 : 0;
        if (s >= t) expected.insert(c);
      }
      const auto found = all_frequent_via_search(d, min_sup);
      ASSERT_EQ(found, expected) << "trial " << trial << " min_sup " << min_sup;
      for (const auto& c : found) ASSERT_TRUE(is_min(c));
    }
  }
}
