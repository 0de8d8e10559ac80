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

// Suffix arrays, longest common extensions, Lyndon arrays and runs, all in
// linear time. Texts are integer vectors over [0, upper]; the end of a text
// compares smaller than every letter.

#ifndef RANGESEQ_DETAIL_SUFFIX_STRUCTURES_HPP
#define RANGESEQ_DETAIL_SUFFIX_STRUCTURES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace rangeseq::detail {

inline std::vector<int> suffix_array_naive(std::vector<int> const& s) {
  std::vector<int> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](int a, int b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b,
                                        s.end());
  });
  return sa;
}

/// Induced sorting (SA-IS).
inline std::vector<int> suffix_array(std::vector<int> const& s, int upper) {
  int const n = static_cast<int>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n < 10) return suffix_array_naive(s);

  std::vector<int> sa(static_cast<std::size_t>(n));
  std::vector<bool> ls(static_cast<std::size_t>(n));
  for (int i = n - 2; i >= 0; --i) {
    ls[i] = s[i] == s[i + 1] ? ls[i + 1] : s[i] < s[i + 1];
  }
  std::vector<int> sum_l(static_cast<std::size_t>(upper) + 1);
  std::vector<int> sum_s(static_cast<std::size_t>(upper) + 1);
  for (int i = 0; i < n; ++i) {
    if (!ls[i]) {
      ++sum_s[s[i]];
    } else {
      ++sum_l[s[i] + 1];
    }
  }
  for (int i = 0; i <= upper; ++i) {
    sum_s[i] += sum_l[i];
    if (i < upper) sum_l[i + 1] += sum_s[i];
  }

  auto induce = [&](std::vector<int> const& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<int> buf(static_cast<std::size_t>(upper) + 1);
    std::copy(sum_s.begin(), sum_s.end(), buf.begin());
    for (int d : lms) {
      if (d == n) continue;
      sa[buf[s[d]]++] = d;
    }
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    sa[buf[s[n - 1]]++] = n - 1;
    for (int i = 0; i < n; ++i) {
      int const v = sa[i];
      if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
    }
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    for (int i = n - 1; i >= 0; --i) {
      int const v = sa[i];
      if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<int> lms_map(static_cast<std::size_t>(n) + 1, -1);
  int m = 0;
  for (int i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms_map[i] = m++;
  }
  std::vector<int> lms;
  lms.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms.push_back(i);
  }

  induce(lms);

  if (m > 0) {
    std::vector<int> sorted_lms;
    sorted_lms.reserve(static_cast<std::size_t>(m));
    for (int v : sa) {
      if (lms_map[v] != -1) sorted_lms.push_back(v);
    }
    std::vector<int> rec_s(static_cast<std::size_t>(m));
    int rec_upper = 0;
    rec_s[lms_map[sorted_lms[0]]] = 0;
    for (int i = 1; i < m; ++i) {
      int l = sorted_lms[i - 1];
      int r = sorted_lms[i];
      int const end_l = lms_map[l] + 1 < m ? lms[lms_map[l] + 1] : n;
      int const end_r = lms_map[r] + 1 < m ? lms[lms_map[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++rec_upper;
      rec_s[lms_map[sorted_lms[i]]] = rec_upper;
    }
    auto const rec_sa = suffix_array(rec_s, rec_upper);
    for (int i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
    induce(sorted_lms);
  }
  return sa;
}

inline std::vector<int> inverse(std::vector<int> const& sa) {
  std::vector<int> rank(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) rank[sa[i]] = static_cast<int>(i);
  return rank;
}

/// lcp[i] = longest common prefix of suffixes sa[i] and sa[i+1] (Kasai).
inline std::vector<int> lcp_array(std::vector<int> const& s,
                                  std::vector<int> const& sa,
                                  std::vector<int> const& rank) {
  int const n = static_cast<int>(s.size());
  std::vector<int> lcp(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (h > 0) --h;
    if (rank[i] == n - 1) {
      h = 0;
      continue;
    }
    int const j = sa[rank[i] + 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
  }
  return lcp;
}

/// Range minimum in O(1) after O(n) preprocessing: a stack bitmask inside
/// blocks of 64 and a sparse table over block minima.
class RangeMin {
 public:
  RangeMin() = default;

  explicit RangeMin(std::vector<int> values) : a_(std::move(values)) {
    std::size_t const n = a_.size();
    mask_.resize(n);
    std::size_t const blocks = (n + 63) / 64;
    std::vector<int> block_min(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::size_t const start = b * 64;
      std::size_t const stop = std::min(n, start + 64);
      std::uint64_t cur = 0;
      int lowest = a_[start];
      for (std::size_t i = start; i < stop; ++i) {
        while (cur != 0 &&
               a_[start + 63 - static_cast<std::size_t>(
                                   std::countl_zero(cur))] >= a_[i]) {
          cur ^= std::uint64_t{1} << (63 - std::countl_zero(cur));
        }
        cur |= std::uint64_t{1} << (i - start);
        mask_[i] = cur;
        lowest = std::min(lowest, a_[i]);
      }
      block_min[b] = lowest;
    }
    sparse_.push_back(std::move(block_min));
    for (std::size_t len = 1; 2 * len <= blocks; len *= 2) {
      auto const& prev = sparse_.back();
      std::vector<int> next(blocks - 2 * len + 1);
      for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = std::min(prev[i], prev[i + len]);
      }
      sparse_.push_back(std::move(next));
    }
  }

  /// Minimum of values[lo..hi], inclusive, lo <= hi.
  [[nodiscard]] int query(std::size_t lo, std::size_t hi) const {
    std::size_t const bl = lo / 64;
    std::size_t const bh = hi / 64;
    if (bl == bh) return in_block(lo, hi);
    int best = std::min(in_block(lo, bl * 64 + 63), in_block(bh * 64, hi));
    if (bl + 1 < bh) {
      std::size_t const count = bh - bl - 1;
      auto const level = static_cast<std::size_t>(std::bit_width(count) - 1);
      best = std::min({best, sparse_[level][bl + 1],
                       sparse_[level][bh - (std::size_t{1} << level)]});
    }
    return best;
  }

 private:
  [[nodiscard]] int in_block(std::size_t lo, std::size_t hi) const {
    std::size_t const start = lo - lo % 64;
    std::uint64_t const m = mask_[hi] & (~std::uint64_t{0} << (lo - start));
    return a_[start + static_cast<std::size_t>(std::countr_zero(m))];
  }

  std::vector<int> a_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::vector<int>> sparse_;
};

/// Longest common extension of two suffixes of one text.
class LceIndex {
 public:
  LceIndex(std::vector<int> const& s, int upper)
      : n_(static_cast<int>(s.size())),
        sa_(detail::suffix_array(s, upper)),
        rank_(inverse(sa_)),
        rmq_(lcp_array(s, sa_, rank_)) {}

  [[nodiscard]] int lce(int i, int j) const {
    if (i == j) return n_ - i;
    if (i >= n_ || j >= n_) return 0;
    int lo = rank_[i];
    int hi = rank_[j];
    if (lo > hi) std::swap(lo, hi);
    return rmq_.query(static_cast<std::size_t>(lo),
                      static_cast<std::size_t>(hi - 1));
  }

  [[nodiscard]] std::vector<int> const& suffix_array() const { return sa_; }
  [[nodiscard]] std::vector<int> const& rank() const { return rank_; }

 private:
  int n_;
  std::vector<int> sa_;
  std::vector<int> rank_;
  RangeMin rmq_;
};

/// lyndon[i] = end (exclusive) of the longest Lyndon word starting at i:
/// the next suffix to the right that is lexicographically smaller.
inline std::vector<int> lyndon_array(std::vector<int> const& rank) {
  int const n = static_cast<int>(rank.size());
  std::vector<int> out(static_cast<std::size_t>(n), n);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    while (!stack.empty() && rank[stack.back()] > rank[i]) {
      out[stack.back()] = i;
      stack.pop_back();
    }
    stack.push_back(i);
  }
  return out;
}

struct Run {
  int start;   // inclusive
  int end;     // exclusive
  int period;  // smallest period
};

/// Every maximal repetition of s, each reported at least once, found from
/// Lyndon roots under both letter orders.
inline std::vector<Run> runs(std::vector<int> const& s, int upper) {
  int const n = static_cast<int>(s.size());
  std::vector<Run> out;
  if (n < 2) return out;
  LceIndex forward(s, upper);
  std::vector<int> reversed(s.rbegin(), s.rend());
  LceIndex backward(reversed, upper);
  std::vector<int> flipped(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) flipped[i] = upper - s[i];
  std::vector<int> const flipped_rank = inverse(suffix_array(flipped, upper));

  for (auto const* rank : {&forward.rank(), &flipped_rank}) {
    std::vector<int> const lyn = lyndon_array(*rank);
    for (int i = 0; i < n; ++i) {
      int const j = lyn[i];
      if (j >= n) continue;
      int const q = j - i;
      int const right = j + forward.lce(i, j);
      int const left = i > 0 ? i - backward.lce(n - i, n - j) : i;
      if (right - left >= 2 * q) out.push_back({left, right, q});
    }
  }
  return out;
}

}  // namespace rangeseq::detail

#endif  // RANGESEQ_DETAIL_SUFFIX_STRUCTURES_HPP
