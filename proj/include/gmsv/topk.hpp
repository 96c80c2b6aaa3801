#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gmsv/pattern.hpp"

namespace gmsv {

struct ScoredPattern {
  Pattern pattern;
  double q = 0.0;
  double qhat = 0.0;
};

/// Orders by score, then by DFS code.
inline bool ranks_before(const ScoredPattern& a, const ScoredPattern& b) {
  if (a.q != b.q) return a.q < b.q;
  return a.pattern.code < b.pattern.code;
}

/// The k best patterns seen so far, ascending by (q, code). The threshold stays
/// at +inf until k patterns are held, then tracks the worst retained score.
class TopKBuffer {
 public:
  explicit TopKBuffer(std::size_t k) : k_(k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    entries_.reserve(k + 1);
  }

  /// Inserts when the buffer has room or the candidate ranks before the worst entry.
  bool offer(const ScoredPattern& sp) {
    if (full() && !ranks_before(sp, entries_.back())) return false;
    const auto pos = std::upper_bound(entries_.begin(), entries_.end(), sp, ranks_before);
    entries_.insert(pos, sp);
    if (entries_.size() > k_) entries_.pop_back();
    return true;
  }

  [[nodiscard]] bool full() const noexcept { return entries_.size() >= k_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::size_t capacity() const noexcept { return k_; }

  [[nodiscard]] double threshold() const noexcept {
    return full() ? entries_.back().q : std::numeric_limits<double>::infinity();
  }

  [[nodiscard]] const std::vector<ScoredPattern>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<ScoredPattern> take() && { return std::move(entries_); }

 private:
  std::size_t k_;
  std::vector<ScoredPattern> entries_;
};

}  // namespace gmsv
