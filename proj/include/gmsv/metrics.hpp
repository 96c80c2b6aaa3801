#pragma once

#include <cstddef>
#include <span>

#include "gmsv/error.hpp"

namespace gmsv {

/// Binary metrics on the +1 class. A zero denominator yields 0 with the
/// matching `*_undefined` flag set.
struct BinaryMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_undefined = false;
  bool recall_undefined = false;
};

inline BinaryMetrics metrics(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.empty()) throw DataError("metrics of an empty prediction set");
  if (y_true.size() != y_pred.size()) throw DataError("metrics: length mismatch");
  std::size_t tp = 0, fp = 0, fn = 0, correct = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool t = y_true[i] == 1;
    const bool p = y_pred[i] == 1;
    if (t == p) ++correct;
    if (t && p) ++tp;
    if (!t && p) ++fp;
    if (t && !p) ++fn;
  }
  BinaryMetrics m;
  m.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());
  if (tp + fp == 0) m.precision_undefined = true;
  else m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn == 0) m.recall_undefined = true;
  else m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (m.precision + m.recall > 0.0) m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

}  // namespace gmsv
