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

// Circular words: minimal representation, least rotation, circular
// subsequence matching and iterated matching through a next-position table.

#ifndef RANGESEQ_CIRCULAR_HPP
#define RANGESEQ_CIRCULAR_HPP

#include <algorithm>
#include <climits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "rangeseq/core_types.hpp"
#include "rangeseq/detail/suffix_structures.hpp"
#include "rangeseq/range_matcher.hpp"

namespace rangeseq {

/// Length of the primitive root of w (smallest period dividing |w|).
[[nodiscard]] inline std::size_t primitive_root_length(Word const& w) {
  std::size_t const n = w.length();
  if (n == 0) return 0;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  std::size_t const period = n - pi[n - 1];
  return n % period == 0 ? period : n;
}

/// 1-based offset of the lexicographically least conjugate, smallest such
/// offset when several conjugates coincide.
[[nodiscard]] inline std::size_t least_rotation_offset(Word const& w) {
  std::size_t const n = w.length();
  if (n == 0) return 1;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    symbol const a = w[(i + k) % n];
    symbol const b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j) + 1;
}

/// Shortest root u such that some conjugate of w is a prefix of u^infinity,
/// lexicographically least among roots of that length.
///
/// The shortest such root has length n - B where B is the longest border of
/// any conjugate, and conjugates with border B correspond to squares of
/// half-length B in www. Squares come from the runs of www; the conjugates
/// attaining B are then compared by suffix rank. Linear time overall.
[[nodiscard]] inline MinimalRepresentation minimal_representation(
    Word const& w) {
  std::size_t const n = w.length();
  if (n == 0) throw precondition_error("minimal representation of empty word");
  if (n > static_cast<std::size_t>(INT_MAX / 3 - 1)) {
    throw precondition_error("word too long for minimal representation");
  }

  std::vector<symbol> const letters = w.alph();
  std::vector<int> alpha(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    int const id = static_cast<int>(
        std::lower_bound(letters.begin(), letters.end(), w[i]) -
        letters.begin());
    alpha[i] = alpha[i + n] = alpha[i + 2 * n] = id;
  }
  int const upper = static_cast<int>(letters.size()) - 1;

  int const cap = static_cast<int>(n) - 1;
  int border = 0;
  for (auto const& run : detail::runs(alpha, upper)) {
    int const half = std::min((run.end - run.start) / 2, cap);
    border = std::max(border, half / run.period * run.period);
  }

  detail::LceIndex lce(alpha, upper);
  int const ni = static_cast<int>(n);
  int best = -1;
  for (int i = ni; i < 2 * ni; ++i) {
    if (border > 0 && lce.lce(i - border, i) < border) continue;
    if (best < 0 || lce.rank()[i] < lce.rank()[best]) best = i;
  }

  std::size_t const period = n - static_cast<std::size_t>(border);
  std::size_t const start = static_cast<std::size_t>(best) - n;
  std::vector<symbol> root(period);
  for (std::size_t k = 0; k < period; ++k) root[k] = w[(start + k) % n];
  return {Word(std::move(root), w.alphabet_size()), n,
          start % primitive_root_length(w) + 1};
}

[[nodiscard]] inline Word least_rotation(Word const& w) {
  return w.rotation(least_rotation_offset(w));
}

/// Some conjugate of w has v as a subsequence. The conjugates are the
/// length-|w| factors of ww.
[[nodiscard]] inline bool circular_match(Word const& v, Word const& w) {
  if (v.length() > w.length()) return false;
  if (v.empty()) return true;
  return occurs_in_some_window(v, w.concat(w), w.length());
}

/// next(i, a): first position of the circular word strictly after i
/// (1-based, wrapping) holding a, or undefined. Row 0 behaves as row n.
class CircularIndex {
 public:
  static constexpr std::uint32_t undefined = 0;

  explicit CircularIndex(Word source) : source_(std::move(source)) {
    std::size_t const n = source_.length();
    if (n == 0) throw precondition_error("circular index of empty word");
    letters_ = source_.alph();
    std::size_t const sigma = letters_.size();
    table_.assign(n * sigma, undefined);
    std::vector<std::size_t> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = column_of(source_[i]);
    // Walking ww right to left, next_seen[c] is the nearest position
    // strictly after the current one that holds letter c.
    std::vector<std::uint32_t> next_seen(sigma, undefined);
    for (std::size_t pos = 2 * n; pos >= 1; --pos) {
      std::size_t const i = (pos - 1) % n + 1;
      if (pos <= n) {
        std::copy(next_seen.begin(), next_seen.end(),
                  table_.begin() + static_cast<std::ptrdiff_t>((i - 1) * sigma));
      }
      next_seen[column[i - 1]] = static_cast<std::uint32_t>(i);
    }
  }

  [[nodiscard]] Word const& source() const noexcept { return source_; }
  [[nodiscard]] std::size_t length() const noexcept { return source_.length(); }
  [[nodiscard]] std::vector<symbol> const& letters() const noexcept {
    return letters_;
  }

  /// Column of a letter, or letters().size() when it does not occur.
  [[nodiscard]] std::size_t column_of(symbol a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a) return letters_.size();
    return static_cast<std::size_t>(it - letters_.begin());
  }

  [[nodiscard]] std::uint32_t next_in_column(std::size_t i,
                                             std::size_t column) const {
    if (i == 0) i = source_.length();
    return table_[(i - 1) * letters_.size() + column];
  }

  [[nodiscard]] std::uint32_t next(std::size_t i, symbol a) const {
    std::size_t const c = column_of(a);
    if (c == letters_.size()) return undefined;
    return next_in_column(i, c);
  }

 private:
  Word source_;
  std::vector<symbol> letters_;
  std::vector<std::uint32_t> table_;
};

[[nodiscard]] inline CircularIndex build_circular_index(Word const& w) {
  return CircularIndex(w);
}

enum class CanonicalStart { least_rotation, minimal_representation };

namespace detail {

// w with every letter outside alph(v) replaced by one fresh letter, so the
// table has at most |alph(v)| + 1 columns.
inline Word restrict_to(Word const& w, Word const& v) {
  std::vector<symbol> const keep = v.alph();
  symbol const fresh = std::max(w.alphabet_size(), v.alphabet_size()) + 1;
  std::vector<symbol> out(w.begin(), w.end());
  for (auto& c : out) {
    if (!std::binary_search(keep.begin(), keep.end(), c)) c = fresh;
  }
  return {std::move(out), fresh};
}

// Copies of the circular word read when matching v greedily from `start`.
// A new copy begins whenever the jump temp -> temp' passes position start,
// i.e. start lies in the cyclic interval (temp, temp'].
inline std::size_t copies_from(CircularIndex const& index,
                               std::vector<std::size_t> const& columns,
                               std::size_t start) {
  std::size_t const n = index.length();
  std::size_t temp = start == 1 ? n : start - 1;
  std::size_t count = 0;
  for (std::size_t c : columns) {
    std::size_t const next = index.next_in_column(temp, c);
    bool const crossed =
        temp < next ? (temp < start && start <= next)
                    : (start > temp || start <= next);
    if (crossed) ++count;
    temp = next;
  }
  return std::max<std::size_t>(count, 1);
}

inline std::optional<std::vector<std::size_t>> columns_for(
    CircularIndex const& index, Word const& v) {
  std::vector<std::size_t> out;
  out.reserve(v.length());
  for (symbol a : v) {
    std::size_t const c = index.column_of(a);
    if (c == index.letters().size()) return std::nullopt;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Smallest l >= 1 with v a subsequence of u^l, where u is the conjugate of
/// w at `offset` (1-based). Empty when some letter of v is missing from w.
[[nodiscard]] inline std::optional<std::size_t> iterated_match_from(
    Word const& v, Word const& w, std::size_t offset) {
  if (w.empty()) throw precondition_error("iterated match on empty word");
  if (offset < 1 || offset > w.length()) {
    throw precondition_error("rotation offset outside [1:|w|]");
  }
  CircularIndex const index(detail::restrict_to(w, v));
  auto const columns = detail::columns_for(index, v);
  if (!columns) return std::nullopt;
  return detail::copies_from(index, *columns, offset);
}

[[nodiscard]] inline std::size_t canonical_offset(Word const& w,
                                                  CanonicalStart start) {
  return start == CanonicalStart::least_rotation
             ? least_rotation_offset(w)
             : minimal_representation(w).rotation_offset;
}

/// Iterated matching against the canonical rotation of w.
[[nodiscard]] inline std::optional<std::size_t> iterated_circular_match(
    Word const& v, Word const& w,
    CanonicalStart start = CanonicalStart::least_rotation) {
  if (w.empty()) throw precondition_error("iterated match on empty word");
  return iterated_match_from(v, w, canonical_offset(w, start));
}

struct BestIteratedMatch {
  std::size_t copies = 0;
  std::size_t rotation_offset = 1;
};

/// Minimum over all conjugates, ties broken by the least offset.
[[nodiscard]] inline std::optional<BestIteratedMatch>
best_iterated_circular_match(Word const& v, Word const& w,
                             unsigned threads = 1) {
  if (w.empty()) throw precondition_error("iterated match on empty word");
  CircularIndex const index(detail::restrict_to(w, v));
  auto const columns = detail::columns_for(index, v);
  if (!columns) return std::nullopt;
  std::size_t const n = w.length();
  unsigned const count =
      static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, n));
  std::vector<BestIteratedMatch> partial(count);
  auto work = [&](unsigned id) {
    BestIteratedMatch best{SIZE_MAX, 0};
    for (std::size_t offset = 1 + id; offset <= n; offset += count) {
      std::size_t const l = detail::copies_from(index, *columns, offset);
      if (l < best.copies) best = {l, offset};
    }
    partial[id] = best;
  };
  if (count == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < count; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  BestIteratedMatch best = partial[0];
  for (auto const& r : partial) {
    if (r.copies < best.copies ||
        (r.copies == best.copies && r.rotation_offset < best.rotation_offset)) {
      best = r;
    }
  }
  return best;
}

}  // namespace rangeseq

#endif  // RANGESEQ_CIRCULAR_HPP
