#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmsv/error.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/rng.hpp"
#include "gmsv/stats.hpp"

namespace gmsv {

/// Vector-valued features attached to every graph: one row per graph.
struct SideView {
  std::string name;
  Matrix values;
  double weight = 1.0;

  [[nodiscard]] std::size_t size() const noexcept { return values.rows(); }
  [[nodiscard]] std::size_t dims() const noexcept { return values.cols(); }

  void validate(std::size_t n) const {
    if (values.rows() != n)
      throw DataError("side view '" + name + "' has " + std::to_string(values.rows()) + " rows, expected " +
                      std::to_string(n));
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw DataError("side view '" + name + "' has invalid weight");
    for (double v : values.data())
      if (!std::isfinite(v)) throw DataError("side view '" + name + "' has a non-finite entry");
  }
};

/// Per-column affine range, fitted on one set of rows and applicable to others.
struct ColumnRange {
  std::vector<double> lo;
  std::vector<double> hi;

  static ColumnRange fit(const Matrix& m) {
    ColumnRange r{std::vector<double>(m.cols(), 0.0), std::vector<double>(m.cols(), 0.0)};
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const double v = m(i, c);
        if (i == 0 || v < r.lo[c]) r.lo[c] = v;
        if (i == 0 || v > r.hi[c]) r.hi[c] = v;
      }
    }
    return r;
  }

  /// Maps each column to [0,1]; constant columns map to 0 and values outside
  /// the fitted range are clipped.
  [[nodiscard]] Matrix apply(const Matrix& m) const {
    Matrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double span = hi.at(c) - lo.at(c);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!(span > 0.0)) {
          out(i, c) = 0.0;
          continue;
        }
        double v = (m(i, c) - lo[c]) / span;
        out(i, c) = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
      }
    }
    return out;
  }
};

inline SideView minmax_normalize(const SideView& view) {
  SideView out = view;
  out.values = ColumnRange::fit(view.values).apply(view.values);
  return out;
}

struct KernelMatrix {
  Matrix values;
  double mean = 0.0;  // over all n^2 entries, diagonal included
};

/// RBF kernel exp(-||z_i - z_j||^2 / d), bandwidth equal to the view dimensionality.
inline KernelMatrix rbf_kernel(const SideView& view) {
  const std::size_t n = view.size();
  const std::size_t d = view.dims();
  if (d == 0) throw DataError("side view '" + view.name + "' is zero-dimensional");
  KernelMatrix k{Matrix(n, n, 1.0), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dist = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = view.values(i, c) - view.values(j, c);
        dist += diff * diff;
      }
      const double v = std::exp(-dist / static_cast<double>(d));
      k.values(i, j) = v;
      k.values(j, i) = v;
    }
  }
  double sum = 0.0;
  for (double v : k.values.data()) sum += v;
  k.mean = sum / static_cast<double>(n * n);
  return k;
}

/// Theta: +1/|H| on pairs with kernel >= mean, -1/|L| on the rest (all ordered pairs).
inline Matrix theta_matrix(const KernelMatrix& k) {
  const std::size_t n = k.values.rows();
  std::size_t high = 0;
  for (double v : k.values.data())
    if (v >= k.mean) ++high;
  const std::size_t low = n * n - high;
  if (high == 0 || low == 0) throw DataError("degenerate view");
  Matrix theta(n, n);
  const double hv = 1.0 / static_cast<double>(high);
  const double lv = -1.0 / static_cast<double>(low);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta(i, j) = k.values(i, j) >= k.mean ? hv : lv;
  return theta;
}

/// Omega: +1/|M| on same-label pairs, -1/|C| on cross-label pairs (diagonal counts as same-label).
inline Matrix omega_matrix(std::span<const int> labels) {
  const std::size_t n = labels.size();
  std::size_t pos = 0;
  for (int y : labels) {
    if (y != 1 && y != -1) throw DataError("class label outside {-1,+1}");
    if (y == 1) ++pos;
  }
  const std::size_t neg = n - pos;
  if (pos == 0 || neg == 0) throw DataError("omega needs both classes");
  const double same = 1.0 / static_cast<double>(pos * pos + neg * neg);
  const double cross = -1.0 / static_cast<double>(2 * pos * neg);
  Matrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega(i, j) = labels[i] == labels[j] ? same : cross;
  return omega;
}

/// Phi, its Laplacian L = D - Phi with D_ii = sum_j Phi_ij, and Lhat = min(0, L).
struct LaplacianPair {
  Matrix phi;
  Matrix laplacian;
  Matrix laplacian_hat;

  [[nodiscard]] std::size_t size() const noexcept { return laplacian.rows(); }
};

struct WeightedTheta {
  Matrix theta;
  double weight = 1.0;
};

inline LaplacianPair phi_laplacian(const Matrix& omega, std::span<const WeightedTheta> thetas) {
  const std::size_t n = omega.rows();
  if (omega.cols() != n) throw DataError("omega is not square");
  LaplacianPair lp{omega, Matrix(n, n), Matrix(n, n)};
  for (const auto& t : thetas) {
    if (t.theta.rows() != n || t.theta.cols() != n) throw DataError("theta dimension mismatch");
    if (!(t.weight >= 0.0)) throw DataError("view weight must be nonnegative");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lp.phi(i, j) += t.weight * t.theta(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < n; ++j) degree += lp.phi(i, j);
    for (std::size_t j = 0; j < n; ++j) lp.laplacian(i, j) = -lp.phi(i, j);
    lp.laplacian(i, i) += degree;
    for (std::size_t j = 0; j < n; ++j) lp.laplacian_hat(i, j) = std::min(0.0, lp.laplacian(i, j));
  }
  return lp;
}

/// Full construction from labels and views: RBF kernels, Theta per view weighted
/// by the view's weight, Omega from labels.
inline LaplacianPair build_laplacian(std::span<const int> labels, std::span<const SideView> views) {
  std::vector<WeightedTheta> thetas;
  thetas.reserve(views.size());
  for (const auto& v : views) {
    v.validate(labels.size());
    thetas.push_back({theta_matrix(rbf_kernel(v)), v.weight});
  }
  return phi_laplacian(omega_matrix(labels), thetas);
}

/// Side-information consistency: are same-label kernel values larger than
/// cross-label ones? Off-diagonal unordered pairs only; equal-size samples of
/// min(|A_s|, |A_d|) drawn without replacement; one-tailed Welch test.
inline TTestResult consistency_ttest(const KernelMatrix& k, std::span<const int> labels, std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (k.values.rows() != n) throw DataError("kernel size does not match label count");
  std::vector<double> same;
  std::vector<double> diff;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      (labels[i] * labels[j] == 1 ? same : diff).push_back(k.values(i, j));
    }
  }
  if (diff.empty() || same.empty()) throw DataError("consistency test needs both classes");
  if (same.size() < 2 || diff.size() < 2) throw DataError("consistency test needs at least two pairs per group");
  const std::size_t m = std::min(same.size(), diff.size());
  Rng rng(seed);
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(m);
  b.reserve(m);
  for (std::size_t i : sample_without_replacement(same.size(), m, rng)) a.push_back(same[i]);
  for (std::size_t i : sample_without_replacement(diff.size(), m, rng)) b.push_back(diff[i]);
  return welch_t_test_greater(a, b);
}

}  // namespace gmsv
