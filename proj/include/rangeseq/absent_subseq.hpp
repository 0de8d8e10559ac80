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

// Absent subsequences in bounded ranges: p-absence, the single-pass minimal
// absent subsequence test and the exhaustive shortest absent subsequence
// test.

#ifndef RANGESEQ_ABSENT_SUBSEQ_HPP
#define RANGESEQ_ABSENT_SUBSEQ_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "rangeseq/core_types.hpp"
#include "rangeseq/range_matcher.hpp"

namespace rangeseq {

[[nodiscard]] inline bool is_p_absent(Word const& v, Word const& w,
                                      std::size_t p) {
  return !occurs_in_some_window(v, w, p);
}

/// Single-pass scanner deciding whether v is a minimal absent
/// p-subsequence of the text fed to it.
///
/// For the current window it keeps, per letter of v, the position lists of
/// the window, the leftmost greedy embedding j_1 < ... < j_f of the longest
/// embeddable prefix of v and the rightmost greedy embedding
/// g_s < ... < g_m of the longest embeddable suffix. Both embeddings only move
/// rightwards as the window slides, so every pointer walks its list at most
/// once and a letter costs O(m) amortised.
class PmasScanner {
 public:
  static constexpr std::size_t undefined = 0;

  PmasScanner(Word v, std::size_t p) : v_(std::move(v)), p_(p) {
    std::size_t const m = v_.length();
    std::vector<symbol> letters = v_.alph();
    for (symbol a : letters) index_.emplace(a, index_.size());
    lists_.resize(letters.size());
    list_of_.resize(m);
    for (std::size_t i = 0; i < m; ++i) list_of_[i] = index_.at(v_[i]);
    fwd_.assign(m, 0);
    bwd_.assign(m, 0);
    covered_.assign(m, false);
    s_ = m + 1;
  }

  /// Consumes w[t] for t = position() + 1.
  void step(symbol c) {
    std::size_t const m = v_.length();
    ++t_;
    if (p_ == 0) return;

    // Step 1: the position t - p leaves the window.
    if (recent_.size() == p_) {
      std::size_t const gone = t_ - p_;
      bool const head_expired = f_ > 0 && pos(0, fwd_[0]) == gone;
      if (s_ <= m && pos(s_ - 1, bwd_[s_ - 1]) == gone) ++s_;
      auto const it = index_.find(recent_.front());
      recent_.pop_front();
      if (it != index_.end()) {
        List& list = lists_[it->second];
        list.positions.pop_front();
        ++list.base;
      }
      if (head_expired) advance_forward();
    }

    // Step 2: the position t enters the window.
    recent_.push_back(c);
    auto const it = index_.find(c);
    if (it != index_.end()) {
      List& list = lists_[it->second];
      list.positions.push_back(t_);
      if (f_ < m && v_[f_] == c) {
        fwd_[f_] = list.base + list.positions.size() - 1;
        ++f_;
      }
      if (v_[m - 1] == c) rebuild_backward();
    }

    if (t_ < std::min(p_, limit_)) return;

    // Steps 3 and 4: detection and coverage for the full window.
    if (f_ == m && !first_occurrence_) first_occurrence_ = t_;
    for (std::size_t i = 1; i <= m; ++i) {
      if (!covered_[i - 1] && deletion_occurs(i)) {
        covered_[i - 1] = true;
        ++covered_count_;
      }
    }
  }

  /// Text length, when known, so that a text shorter than p still gets its
  /// single clamped window checked.
  void set_text_length(std::size_t n) { limit_ = n; }

  [[nodiscard]] bool detected() const noexcept {
    return first_occurrence_.has_value();
  }
  [[nodiscard]] std::optional<std::size_t> first_occurrence() const noexcept {
    return first_occurrence_;
  }
  [[nodiscard]] bool all_covered() const noexcept {
    return covered_count_ == v_.length();
  }
  [[nodiscard]] std::vector<bool> const& covered() const noexcept {
    return covered_;
  }

  [[nodiscard]] std::size_t position() const noexcept { return t_; }

  /// Positions of a inside the current window, ascending.
  [[nodiscard]] std::vector<std::size_t> window_positions(symbol a) const {
    auto const it = index_.find(a);
    if (it == index_.end()) return {};
    auto const& q = lists_[it->second].positions;
    return {q.begin(), q.end()};
  }

  /// j_i for i in [1:m], or undefined when v[1:i] is not in the window.
  [[nodiscard]] std::size_t prefix_end(std::size_t i) const {
    return i <= f_ ? pos(i - 1, fwd_[i - 1]) : undefined;
  }

  /// g_i for i in [1:m], or undefined when v[i:m] is not in the window.
  [[nodiscard]] std::size_t suffix_start(std::size_t i) const {
    return i >= s_ ? pos(i - 1, bwd_[i - 1]) : undefined;
  }

 private:
  struct List {
    std::deque<std::size_t> positions;
    std::size_t base = 0;  // absolute index of positions.front()
  };

  [[nodiscard]] std::size_t pos(std::size_t i, std::size_t abs) const {
    List const& list = lists_[list_of_[i]];
    return list.positions[abs - list.base];
  }

  [[nodiscard]] std::size_t end_index(std::size_t i) const {
    List const& list = lists_[list_of_[i]];
    return list.base + list.positions.size();
  }

  // j_1 expired: every j_i moves right to the next occurrence of v[i]
  // after the new j_{i-1}. Stops as soon as a pointer is unchanged.
  void advance_forward() {
    std::size_t prev = t_ - p_;
    for (std::size_t i = 0; i < f_; ++i) {
      std::size_t idx = fwd_[i];
      List const& list = lists_[list_of_[i]];
      idx = std::max(idx, list.base);
      std::size_t const end = end_index(i);
      while (idx < end && pos(i, idx) <= prev) ++idx;
      if (idx == end) {
        f_ = i;
        return;
      }
      if (idx == fwd_[i] && i > 0) return;
      fwd_[i] = idx;
      prev = pos(i, idx);
    }
  }

  // w[t] = v[m]: g_m becomes t and every g_i moves right to the last
  // occurrence of v[i] before g_{i+1}.
  void rebuild_backward() {
    std::size_t const m = v_.length();
    std::size_t const old_s = s_;
    bwd_[m - 1] = end_index(m - 1) - 1;
    s_ = m;
    for (std::size_t i = m - 1; i-- > 0;) {
      std::size_t const bound = pos(i + 1, bwd_[i + 1]);
      List const& list = lists_[list_of_[i]];
      std::size_t const end = end_index(i);
      std::size_t idx;
      if (i + 1 >= old_s) {
        idx = bwd_[i];
        while (idx + 1 < end && pos(i, idx + 1) < bound) ++idx;
        bool const same = idx == bwd_[i];
        bwd_[i] = idx;
        s_ = i + 1;
        if (same) {
          s_ = old_s;
          return;
        }
        continue;
      }
      auto const first = std::lower_bound(list.positions.begin(),
                                          list.positions.end(), bound);
      if (first == list.positions.begin()) return;
      idx = list.base +
            static_cast<std::size_t>(first - list.positions.begin()) - 1;
      bwd_[i] = idx;
      s_ = i + 1;
    }
  }

  // v with position i deleted occurs in the window iff the greedy prefix
  // for v[1:i-1] ends before the greedy suffix for v[i+1:m] starts.
  [[nodiscard]] bool deletion_occurs(std::size_t i) const {
    std::size_t const m = v_.length();
    if (i > 1 && f_ < i - 1) return false;
    if (i < m && s_ > i + 1) return false;
    if (i == 1 || i == m) return true;
    return prefix_end(i - 1) < suffix_start(i + 1);
  }

  Word v_;
  std::size_t p_;
  std::size_t t_ = 0;
  std::size_t limit_ = static_cast<std::size_t>(-1);
  std::map<symbol, std::size_t> index_;
  std::vector<List> lists_;
  std::vector<std::size_t> list_of_;
  std::deque<symbol> recent_;
  std::vector<std::size_t> fwd_;
  std::vector<std::size_t> bwd_;
  std::size_t f_ = 0;
  std::size_t s_;
  std::vector<bool> covered_;
  std::size_t covered_count_ = 0;
  std::optional<std::size_t> first_occurrence_;
};

struct PmasResult {
  bool is_pmas = false;
  bool absent = false;
  std::vector<bool> covered;
  /// End of the first window containing v, when scanning did not stop early.
  std::optional<std::size_t> first_occurrence;
};

/// Full diagnostic run. With early_exit the scan stops once v is seen.
[[nodiscard]] inline PmasResult pmas_scan(Word const& v, Word const& w,
                                          std::size_t p,
                                          bool early_exit = true) {
  PmasResult r;
  std::size_t const m = v.length();
  std::size_t const window = std::min(p, w.length());
  if (m == 0) return r;
  if (window == 0) {
    r.absent = true;
    r.covered.assign(m, m == 1);
    r.is_pmas = m == 1;
    return r;
  }
  PmasScanner scanner(v, window);
  scanner.set_text_length(w.length());
  for (symbol c : w) {
    scanner.step(c);
    if (early_exit && scanner.detected()) break;
  }
  r.absent = !scanner.detected();
  r.first_occurrence = scanner.first_occurrence();
  r.covered = scanner.covered();
  r.is_pmas = r.absent && scanner.all_covered();
  return r;
}

[[nodiscard]] inline bool is_pmas(Word const& v, Word const& w,
                                  std::size_t p) {
  return pmas_scan(v, w, p).is_pmas;
}

inline constexpr std::uint64_t default_candidate_budget = std::uint64_t{1}
                                                          << 24;

namespace detail {

// Calls f on every word of {1..sigma}^k in lexicographic order until f
// returns true. Returns the number of words visited.
template <typename F>
std::uint64_t for_each_word(symbol sigma, std::size_t k, F&& f) {
  std::vector<symbol> x(k, 1);
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (f(std::span<symbol const>(x))) return visited;
    std::size_t i = k;
    while (i > 0 && x[i - 1] == sigma) x[--i] = 1;
    if (i == 0) return visited;
    ++x[i - 1];
  }
}

}  // namespace detail

/// v is a shortest absent p-subsequence: v is p-absent and every word of
/// length |v| - 1 over the alphabet occurs in some window.
[[nodiscard]] inline bool is_psas(Word const& v, Word const& w, std::size_t p,
                                  std::uint64_t budget =
                                      default_candidate_budget) {
  if (v.empty()) return false;
  symbol const sigma = common_alphabet(v, w);
  std::uint64_t const needed = saturating_power(sigma, v.length() - 1);
  if (needed > budget) {
    throw budget_exceeded("psas check", needed, budget);
  }
  if (!is_p_absent(v, w, p)) return false;
  bool universal = true;
  detail::for_each_word(sigma, v.length() - 1,
                        [&](std::span<symbol const> x) {
                          if (!occurs_in_some_window(x, w.symbols(), p)) {
                            universal = false;
                            return true;
                          }
                          return false;
                        });
  return universal;
}

}  // namespace rangeseq

#endif  // RANGESEQ_ABSENT_SUBSEQ_HPP
