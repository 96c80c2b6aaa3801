#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gmsv/error.hpp"
#include "gmsv/matrix.hpp"
#include "gmsv/pattern.hpp"
#include "gmsv/side_views.hpp"

namespace gmsv {

namespace detail {

// f^T M f for binary f, summed over the support set only.
inline double support_quadratic(std::span<const std::uint8_t> f, const Matrix& m) {
  if (f.size() != m.rows()) throw DataError("indicator length does not match Laplacian size");
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j]) s.push_back(j);
  double sum = 0.0;
  for (std::size_t p : s)
    for (std::size_t q : s) sum += m(p, q);
  return sum;
}

}  // namespace detail

/// gSide score q = f^T L f. Lower is more discriminative.
inline double gside_score(std::span<const std::uint8_t> f, const LaplacianPair& lp) {
  return detail::support_quadratic(f, lp.laplacian);
}

/// Lower bound q^ = f^T Lhat f on the score of every supergraph of the pattern.
inline double gside_lower_bound(std::span<const std::uint8_t> f, const LaplacianPair& lp) {
  return detail::support_quadratic(f, lp.laplacian_hat);
}

}  // namespace gmsv
