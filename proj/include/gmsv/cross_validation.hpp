#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gmsv/bundle.hpp"
#include "gmsv/error.hpp"
#include "gmsv/features.hpp"
#include "gmsv/linear_svm.hpp"
#include "gmsv/metrics.hpp"
#include "gmsv/miner.hpp"
#include "gmsv/rng.hpp"
#include "gmsv/side_views.hpp"

namespace gmsv {

/// Chooses subgraph features from training data only. Side views arrive
/// normalized with training-fold statistics.
using PatternSelector =
    std::function<std::vector<Pattern>(const GraphDataset& train, std::span<const SideView> train_views)>;

struct CVOptions {
  std::size_t folds = 3;
  std::uint64_t seed = 42;
  SvmParams svm;
};

struct FoldReport {
  std::size_t fold = 0;
  BinaryMetrics metrics;
  std::size_t train_pos = 0, train_neg = 0, test_pos = 0, test_neg = 0;
  std::vector<std::string> selected;  // DFS codes of the selected patterns
};

struct CVReport {
  std::vector<FoldReport> folds;
  BinaryMetrics mean;
  std::vector<int> fold_of;  // per input graph; -1 when dropped by balancing
  std::uint64_t seed = 0;
};

/// Balanced, stratified k-fold cross-validation. The majority class is
/// downsampled (seeded) to the minority size, each class is shuffled and dealt
/// round-robin into folds, and every fold mines, normalizes and trains on its
/// training rows alone.
inline CVReport stratified_cv(const DatasetBundle& bundle, const PatternSelector& select, const CVOptions& opt) {
  bundle.validate();
  if (opt.folds < 2) throw DataError("cross-validation needs at least two folds");
  const auto& d = bundle.data;

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < d.size(); ++i) (d.labels[i] == 1 ? pos : neg).push_back(i);
  const std::size_t per_class = std::min(pos.size(), neg.size());
  if (per_class < opt.folds) throw DataError("class too small to stratify");

  Rng rng(opt.seed);
  auto downsample = [&](std::vector<std::size_t>& idx) {
    if (idx.size() == per_class) return;
    std::vector<std::size_t> kept;
    for (std::size_t p : sample_without_replacement(idx.size(), per_class, rng)) kept.push_back(idx[p]);
    std::sort(kept.begin(), kept.end());
    idx = std::move(kept);
  };
  downsample(pos);
  downsample(neg);

  CVReport report;
  report.seed = opt.seed;
  report.fold_of.assign(d.size(), -1);
  for (auto* cls : {&pos, &neg}) {
    shuffle(*cls, rng);
    for (std::size_t r = 0; r < cls->size(); ++r) report.fold_of[(*cls)[r]] = static_cast<int>(r % opt.folds);
  }

  for (std::size_t f = 0; f < opt.folds; ++f) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (report.fold_of[i] < 0) continue;
      (static_cast<std::size_t>(report.fold_of[i]) == f ? test_rows : train_rows).push_back(i);
    }
    const GraphDataset train = d.subset(train_rows);
    const GraphDataset test = d.subset(test_rows);

    std::vector<SideView> train_views, test_views;
    for (const auto& v : bundle.views) {
      const Matrix tr = v.values.select_rows(train_rows);
      const ColumnRange range = ColumnRange::fit(tr);
      train_views.push_back({v.name, range.apply(tr), v.weight});
      test_views.push_back({v.name, range.apply(v.values.select_rows(test_rows)), v.weight});
    }

    const std::vector<Pattern> patterns = select(train, train_views);
    const FeatureMatrix x_train = concat_side_views(vectorize(train, patterns), train_views);
    const FeatureMatrix x_test = concat_side_views(vectorize_by_matching(test.graphs, patterns), test_views);

    SvmParams svm = opt.svm;
    svm.seed = opt.seed + 1000003ULL * (f + 1);
    const LinearModel model = train_linear_svm(x_train.values, train.labels, svm);
    const auto predicted = predict(model, x_test.values);

    FoldReport fr;
    fr.fold = f;
    fr.metrics = metrics(test.labels, predicted);
    fr.train_pos = train.count_label(1);
    fr.train_neg = train.count_label(-1);
    fr.test_pos = test.count_label(1);
    fr.test_neg = test.count_label(-1);
    for (const auto& p : patterns) fr.selected.push_back(p.code.to_string());
    report.folds.push_back(std::move(fr));
  }

  const double nf = static_cast<double>(report.folds.size());
  for (const auto& fr : report.folds) {
    report.mean.accuracy += fr.metrics.accuracy / nf;
    report.mean.precision += fr.metrics.precision / nf;
    report.mean.recall += fr.metrics.recall / nf;
    report.mean.f1 += fr.metrics.f1 / nf;
    report.mean.precision_undefined = report.mean.precision_undefined || fr.metrics.precision_undefined;
    report.mean.recall_undefined = report.mean.recall_undefined || fr.metrics.recall_undefined;
  }
  return report;
}

/// gMSV patterns: Laplacian from training labels and views, then branch-and-bound mining.
inline PatternSelector gmsv_selector(MinerConfig cfg) {
  return [cfg](const GraphDataset& train, std::span<const SideView> views) {
    const LaplacianPair lp = build_laplacian(train.labels, views);
    auto result = mine(train, lp, cfg);
    std::vector<Pattern> out;
    for (auto& sp : result.patterns) out.push_back(std::move(sp.pattern));
    return out;
  };
}

/// Most-frequent patterns, labels and views ignored.
inline PatternSelector frequent_selector(MinerConfig cfg) {
  return [cfg](const GraphDataset& train, std::span<const SideView>) { return mine_frequent_topk(train, cfg); };
}

/// No subgraph features: the side-views-only baseline.
inline PatternSelector no_patterns_selector() {
  return [](const GraphDataset&, std::span<const SideView>) { return std::vector<Pattern>{}; };
}

}  // namespace gmsv
