#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gmsv/error.hpp"
#include "gmsv/graph.hpp"
#include "gmsv/matcher.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/pattern.hpp"
#include "gmsv/side_views.hpp"

namespace gmsv {

struct FeatureMatrix {
  Matrix values;
  std::vector<std::string> columns;

  [[nodiscard]] std::size_t rows() const noexcept { return values.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return values.cols(); }
};

/// Binary pattern features from the patterns' indicator vectors: x[j][i] = f_i[j].
inline FeatureMatrix vectorize(const GraphDataset& d, std::span<const Pattern> patterns) {
  FeatureMatrix fm{Matrix(d.size(), patterns.size()), {}};
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].indicator.size() != d.size())
      throw DataError("pattern indicator length " + std::to_string(patterns[i].indicator.size()) +
                      " does not match dataset size " + std::to_string(d.size()));
    for (std::size_t j = 0; j < d.size(); ++j) fm.values(j, i) = patterns[i].indicator[j];
    fm.columns.push_back(patterns[i].code.to_string());
  }
  return fm;
}

/// Binary pattern features for graphs the patterns were not mined on, by subgraph matching.
inline FeatureMatrix vectorize_by_matching(std::span<const Graph> graphs, std::span<const Pattern> patterns) {
  FeatureMatrix fm{Matrix(graphs.size(), patterns.size()), {}};
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Graph pg = patterns[i].code.to_graph();
    for (std::size_t j = 0; j < graphs.size(); ++j) fm.values(j, i) = contains(graphs[j], pg) ? 1.0 : 0.0;
    fm.columns.push_back(patterns[i].code.to_string());
  }
  return fm;
}

/// Appends side-view columns after the existing ones, in view order.
inline FeatureMatrix concat_side_views(const FeatureMatrix& fm, std::span<const SideView> views) {
  std::size_t extra = 0;
  for (const auto& v : views) {
    if (v.size() != fm.rows())
      throw DataError("side view '" + v.name + "' row count does not match feature matrix");
    extra += v.dims();
  }
  FeatureMatrix out{Matrix(fm.rows(), fm.cols() + extra), fm.columns};
  for (std::size_t r = 0; r < fm.rows(); ++r)
    for (std::size_t c = 0; c < fm.cols(); ++c) out.values(r, c) = fm.values(r, c);
  std::size_t offset = fm.cols();
  for (const auto& v : views) {
    for (std::size_t c = 0; c < v.dims(); ++c) {
      for (std::size_t r = 0; r < fm.rows(); ++r) out.values(r, offset + c) = v.values(r, c);
      out.columns.push_back(v.name + "[" + std::to_string(c) + "]");
    }
    offset += v.dims();
  }
  return out;
}

}  // namespace gmsv
