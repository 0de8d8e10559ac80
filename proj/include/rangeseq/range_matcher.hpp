// Copyright 2026 The rangeseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sliding-window subsequence matching in O(|u|) time per scanned letter and
// O(|u|) space, independent of the window length.

#ifndef RANGESEQ_RANGE_MATCHER_HPP
#define RANGESEQ_RANGE_MATCHER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rangeseq/core_types.hpp"

namespace rangeseq {

/// Incremental matcher for a fixed pattern u and window length p.
///
/// shortest(i) is the length of the shortest suffix of the text read so far
/// that contains u[1:i] as a subsequence, or infinity() when that suffix
/// would be longer than p.
class MatcherState {
 public:
  using length_type = std::uint32_t;

  static constexpr length_type infinity() noexcept {
    return std::numeric_limits<length_type>::max();
  }

  MatcherState(Word const& u, std::size_t p) : p_(0), m_(u.length()) {
    if (u.length() > p) {
      throw precondition_error("pattern of length " +
                               std::to_string(u.length()) +
                               " cannot fit a window of length " +
                               std::to_string(p));
    }
    if (p >= infinity()) {
      throw precondition_error("window length too large");
    }
    p_ = static_cast<length_type>(p);
    a_.assign(m_, infinity());

    // Positions of each distinct symbol of u, stored descending so that the
    // in-place update of step() reads a[j-1] before it is overwritten.
    std::vector<std::size_t> order(m_);
    for (std::size_t i = 0; i < m_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return u[x] < u[y]; });
    for (std::size_t k = 0; k < m_;) {
      std::size_t e = k;
      while (e < m_ && u[order[e]] == u[order[k]]) ++e;
      symbols_.push_back(u[order[k]]);
      offsets_.push_back(static_cast<length_type>(occ_.size()));
      for (std::size_t x = e; x > k; --x) {
        occ_.push_back(static_cast<length_type>(order[x - 1]));
      }
      k = e;
    }
    offsets_.push_back(static_cast<length_type>(occ_.size()));
  }

  MatcherState(std::span<symbol const> u, std::size_t p)
      : MatcherState(Word(std::vector<symbol>(u.begin(), u.end())), p) {}

  /// Consumes one letter; true iff u occurs in the current window.
  bool step(symbol c) noexcept {
    length_type* a = a_.data();
    length_type const p = p_;
    for (std::size_t i = 0; i < m_; ++i) {
      a[i] = a[i] < p ? a[i] + 1 : infinity();
    }
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it != symbols_.end() && *it == c) {
      auto const k = static_cast<std::size_t>(it - symbols_.begin());
      for (length_type x = offsets_[k]; x < offsets_[k + 1]; ++x) {
        length_type const j = occ_[x];
        a[j] = j == 0 ? 1 : a[j - 1];
      }
    }
    return found();
  }

  [[nodiscard]] bool found() const noexcept {
    return m_ == 0 || a_[m_ - 1] <= p_;
  }

  /// 1-based view of the shortest-suffix array.
  [[nodiscard]] length_type shortest(std::size_t i) const {
    return a_.at(i - 1);
  }
  [[nodiscard]] std::span<length_type const> shortest_lengths() const noexcept {
    return a_;
  }

  [[nodiscard]] std::size_t pattern_length() const noexcept { return m_; }
  [[nodiscard]] std::size_t window() const noexcept { return p_; }

  /// Number of stored integers; depends on |u| only.
  [[nodiscard]] std::size_t footprint() const noexcept {
    return a_.size() + symbols_.size() + offsets_.size() + occ_.size();
  }

  /// Occurrence positions (1-based, ascending) of c inside u.
  [[nodiscard]] std::vector<std::size_t> occurrences(symbol c) const {
    std::vector<std::size_t> out;
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) return out;
    auto const k = static_cast<std::size_t>(it - symbols_.begin());
    for (length_type x = offsets_[k + 1]; x > offsets_[k]; --x) {
      out.push_back(occ_[x - 1] + std::size_t{1});
    }
    return out;
  }

 private:
  length_type p_;
  std::size_t m_;
  std::vector<length_type> a_;
  std::vector<symbol> symbols_;
  std::vector<length_type> offsets_;
  std::vector<length_type> occ_;
};

[[nodiscard]] inline MatcherState matcher_init(Word const& u, std::size_t p) {
  return {u, p};
}

inline bool matcher_step(MatcherState& state, symbol c) noexcept {
  return state.step(c);
}

namespace detail {

// Windows of length p over a text of length n are reported for
// t = p_eff .. n with p_eff = min(p, n); a zero-length text or window has
// exactly one (empty) window per end position.
inline MatchReport empty_report(std::size_t window, std::size_t count) {
  MatchReport r;
  r.window = window;
  r.per_window.assign(count, false);
  return r;
}

inline void finish_report(MatchReport& r) {
  auto it = std::find(r.per_window.begin(), r.per_window.end(), true);
  r.found = it != r.per_window.end();
  if (r.found) {
    r.first_hit =
        static_cast<std::size_t>(it - r.per_window.begin()) + std::size_t{1};
  }
}

}  // namespace detail

/// Decides u <=_p w and reports the verdict for every full window.
///
/// A window longer than w is clamped to |w|. A pattern longer than the
/// window is absent from every window and is answered without scanning.
[[nodiscard]] inline MatchReport p_subsequence_match(Word const& u,
                                                     Word const& w,
                                                     std::size_t p) {
  std::size_t const n = w.length();
  std::size_t const window = std::min(p, n);
  std::size_t const count = n - window + 1;
  MatchReport report = detail::empty_report(window, count);
  if (u.length() > window) return report;
  if (u.empty()) {
    report.per_window.assign(count, true);
    detail::finish_report(report);
    return report;
  }
  MatcherState state(u, window);
  for (std::size_t t = 1; t <= n; ++t) {
    bool const hit = state.step(w[t - 1]);
    if (t >= window) report.per_window[t - window] = hit;
  }
  detail::finish_report(report);
  return report;
}

/// Same decision as p_subsequence_match(u, w, p).found with early exit.
[[nodiscard]] inline bool occurs_in_some_window(std::span<symbol const> u,
                                                std::span<symbol const> w,
                                                std::size_t p) {
  std::size_t const window = std::min(p, w.size());
  if (u.size() > window) return false;
  if (u.empty()) return true;
  MatcherState state(u, window);
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (state.step(w[t]) && t + 1 >= window) return true;
  }
  return false;
}

[[nodiscard]] inline bool occurs_in_some_window(Word const& u, Word const& w,
                                                std::size_t p) {
  return occurs_in_some_window(u.symbols(), w.symbols(), p);
}

}  // namespace rangeseq

#endif  // RANGESEQ_RANGE_MATCHER_HPP
