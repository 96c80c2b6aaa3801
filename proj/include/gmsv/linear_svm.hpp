#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "gmsv/error.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/rng.hpp"

namespace gmsv {

struct SvmParams {
  double C = 1.0;
  int epochs = 200;
  std::uint64_t seed = 0;
};

/// Linear classifier sign(w.x + b), with sign(0) = +1.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  SvmParams params;
  double objective = 0.0;

  [[nodiscard]] double decision(std::span<const double> x) const {
    if (x.size() != weights.size()) throw DataError("feature dimension does not match model");
    double s = bias;
    for (std::size_t i = 0; i < x.size(); ++i) s += weights[i] * x[i];
    return s;
  }
};

/// Primal objective 0.5 (|w|^2 + b^2) + C sum_i max(0, 1 - y_i (w.x_i + b)).
/// The bias is treated as the weight of a constant feature 1 and regularized with w.
inline double svm_objective(const Matrix& X, std::span<const int> y, std::span<const double> w, double b,
                            double C) {
  double reg = b * b;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    double s = b;
    for (std::size_t c = 0; c < X.cols(); ++c) s += w[c] * X(i, c);
    loss += std::max(0.0, 1.0 - y[i] * s);
  }
  return 0.5 * reg + C * loss;
}

/// L2-regularized hinge-loss SVM trained by dual coordinate descent over a
/// seeded visiting order. The primal objective is evaluated after every epoch
/// and the best iterate returned.
inline LinearModel train_linear_svm(const Matrix& X, std::span<const int> y, const SvmParams& params) {
  const std::size_t n = X.rows();
  const std::size_t d = X.cols();
  if (y.size() != n) throw DataError("label count does not match feature rows");
  if (!(params.C > 0.0)) throw DataError("SVM needs C > 0");
  if (params.epochs <= 0) throw DataError("SVM needs a positive epoch count");
  bool pos = false, neg = false;
  for (int v : y) {
    if (v == 1) pos = true;
    else if (v == -1) neg = true;
    else throw DataError("class label outside {-1,+1}");
  }
  if (!pos || !neg) throw DataError("SVM training needs both classes");

  std::vector<double> qii(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) qii[i] += X(i, c) * X(i, c);

  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(d, 0.0);
  double b = 0.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(params.seed);

  LinearModel best;
  best.weights = w;
  best.params = params;
  best.objective = svm_objective(X, y, w, b, params.C);

  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    shuffle(order, rng);
    double pg_max = -std::numeric_limits<double>::infinity();
    double pg_min = std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
      double s = b;
      for (std::size_t c = 0; c < d; ++c) s += w[c] * X(i, c);
      const double g = y[i] * s - 1.0;
      double pg = g;
      if (alpha[i] == 0.0) pg = std::min(g, 0.0);
      else if (alpha[i] == params.C) pg = std::max(g, 0.0);
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);
      if (pg == 0.0) continue;
      const double old = alpha[i];
      alpha[i] = std::clamp(old - g / qii[i], 0.0, params.C);
      const double step = (alpha[i] - old) * y[i];
      for (std::size_t c = 0; c < d; ++c) w[c] += step * X(i, c);
      b += step;
    }
    const double obj = svm_objective(X, y, w, b, params.C);
    if (obj < best.objective) {
      best.weights = w;
      best.bias = b;
      best.objective = obj;
    }
    if (pg_max - pg_min < 1e-10) break;
  }
  return best;
}

inline std::vector<int> predict(const LinearModel& m, const Matrix& X) {
  if (X.cols() != m.weights.size()) throw DataError("feature dimension does not match model");
  std::vector<int> out(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) out[i] = m.decision(X.row(i)) >= 0.0 ? 1 : -1;
  return out;
}

}  // namespace gmsv
