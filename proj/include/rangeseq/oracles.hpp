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

// Brute-force reference implementations. Each one works straight from the
// definition and shares no code with the fast algorithms it is used to
// check; only the plain data types are common.

#ifndef RANGESEQ_ORACLES_HPP
#define RANGESEQ_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rangeseq/core_types.hpp"

namespace rangeseq::oracle {

inline constexpr std::size_t default_text_bound = 10000;

/// Subsequence test by trying every increasing index tuple. Only for tiny
/// inputs; validates greedy_subsequence.
[[nodiscard]] inline bool tuple_subsequence(std::span<symbol const> u,
                                            std::span<symbol const> w) {
  std::size_t const m = u.size();
  std::size_t const n = w.size();
  if (m == 0) return true;
  if (m > n) return false;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = u[i] == w[idx[i]];
    if (ok) return true;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

[[nodiscard]] inline bool greedy_subsequence(std::span<symbol const> u,
                                             std::span<symbol const> w) {
  std::size_t matched = 0;
  for (symbol c : w) {
    if (matched == u.size()) break;
    if (u[matched] == c) ++matched;
  }
  return matched == u.size();
}

/// Windows of a text: end positions t in [min(p,n) : n], each the factor
/// w[t - min(p,n) + 1 : t]. A text or window of length 0 has one empty
/// window.
[[nodiscard]] inline std::vector<std::span<symbol const>> windows(
    std::span<symbol const> w, std::size_t p) {
  std::size_t const len = std::min(p, w.size());
  std::vector<std::span<symbol const>> out;
  for (std::size_t start = 0; start + len <= w.size(); ++start) {
    out.push_back(w.subspan(start, len));
  }
  return out;
}

[[nodiscard]] inline bool occurs(std::span<symbol const> u,
                                 std::span<symbol const> w, std::size_t p) {
  for (auto win : windows(w, p)) {
    if (greedy_subsequence(u, win)) return true;
  }
  return false;
}

[[nodiscard]] inline MatchReport p_match(Word const& u, Word const& w,
                                         std::size_t p,
                                         std::size_t bound =
                                             default_text_bound) {
  if (w.length() > bound) {
    throw precondition_error("text exceeds oracle bound");
  }
  MatchReport r;
  r.window = std::min(p, w.length());
  for (auto win : windows(w.symbols(), p)) {
    r.per_window.push_back(greedy_subsequence(u.symbols(), win));
  }
  for (std::size_t k = 0; k < r.per_window.size(); ++k) {
    if (r.per_window[k]) {
      r.found = true;
      r.first_hit = k + 1;
      break;
    }
  }
  return r;
}

/// Absent itself, and every single-letter deletion present.
[[nodiscard]] inline bool pmas(Word const& v, Word const& w, std::size_t p) {
  if (v.empty()) return false;
  if (occurs(v.symbols(), w.symbols(), p)) return false;
  for (std::size_t i = 0; i < v.length(); ++i) {
    std::vector<symbol> d(v.begin(), v.end());
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
    if (!occurs(d, w.symbols(), p)) return false;
  }
  return true;
}

/// Every word over {1..sigma} of length k, in lexicographic order.
[[nodiscard]] inline std::vector<std::vector<symbol>> all_words(symbol sigma,
                                                                std::size_t k) {
  std::vector<std::vector<symbol>> out{{}};
  for (std::size_t len = 0; len < k; ++len) {
    std::vector<std::vector<symbol>> next;
    for (auto const& x : out) {
      for (symbol a = 1; a <= sigma; ++a) {
        next.push_back(x);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Subseq^p_k(w) over {1..sigma}.
[[nodiscard]] inline std::set<std::vector<symbol>> subseq_set(
    Word const& w, std::size_t k, std::size_t p, symbol sigma) {
  std::set<std::vector<symbol>> out;
  for (auto const& x : all_words(sigma, k)) {
    if (occurs(x, w.symbols(), p)) out.insert(x);
  }
  return out;
}

[[nodiscard]] inline std::optional<std::vector<symbol>> kp_non_universal(
    Word const& w, std::size_t k, std::size_t p, symbol sigma) {
  for (auto const& x : all_words(sigma, k)) {
    if (!occurs(x, w.symbols(), p)) return x;
  }
  return std::nullopt;
}

[[nodiscard]] inline std::optional<std::vector<symbol>> kp_non_equivalent(
    Word const& w, Word const& v, std::size_t k, std::size_t p,
    symbol sigma) {
  for (auto const& x : all_words(sigma, k)) {
    if (occurs(x, w.symbols(), p) != occurs(x, v.symbols(), p)) return x;
  }
  return std::nullopt;
}

/// Largest k with every word of length k over {1..sigma} a p-subsequence.
[[nodiscard]] inline std::size_t universal_length(Word const& w, std::size_t p,
                                                  symbol sigma) {
  std::size_t k = 0;
  while (!kp_non_universal(w, k + 1, p, sigma)) ++k;
  return k;
}

[[nodiscard]] inline bool psas(Word const& v, Word const& w, std::size_t p,
                               symbol sigma) {
  if (v.empty() || occurs(v.symbols(), w.symbols(), p)) return false;
  return !kp_non_universal(w, v.length() - 1, p, sigma).has_value();
}

/// Largest k such that every word of length k over alph(w) is a
/// subsequence of w.
[[nodiscard]] inline std::size_t universality_index(Word const& w) {
  std::vector<symbol> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::size_t k = 0;
  while (true) {
    std::vector<std::vector<symbol>> words{{}};
    for (std::size_t len = 0; len <= k; ++len) {
      std::vector<std::vector<symbol>> next;
      for (auto const& x : words) {
        for (symbol a : letters) {
          next.push_back(x);
          next.back().push_back(a);
        }
      }
      words = std::move(next);
    }
    for (auto const& x : words) {
      if (!greedy_subsequence(x, w.symbols())) return k;
    }
    ++k;
  }
}

[[nodiscard]] inline bool ov(OvInstance const& inst) {
  for (auto const& a : inst.set_a) {
    for (auto const& b : inst.set_b) {
      bool orthogonal = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) orthogonal = false;
      }
      if (orthogonal) return true;
    }
  }
  return false;
}

/// Least word of {0,1}^L, 0 before 1, compatible with no member of s.
[[nodiscard]] inline std::optional<std::string> partial_words(
    std::vector<PartialWord> const& s, std::size_t length) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    std::string x(length, '0');
    for (std::size_t j = 0; j < length; ++j) {
      if ((bits >> (length - 1 - j)) & 1U) x[j] = '1';
    }
    bool hit = false;
    for (auto const& pw : s) {
      bool compatible = pw.length() == length;
      for (std::size_t j = 0; j < length && compatible; ++j) {
        if (pw[j] == Cell::zero && x[j] == '1') compatible = false;
        if (pw[j] == Cell::one && x[j] == '0') compatible = false;
      }
      if (compatible) {
        hit = true;
        break;
      }
    }
    if (!hit) return x;
  }
  return std::nullopt;
}

/// Clauses as signed 1-based variable indices.
[[nodiscard]] inline bool satisfiable(
    std::size_t variables, std::vector<std::vector<int>> const& clauses) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << variables);
       ++bits) {
    bool all = true;
    for (auto const& clause : clauses) {
      bool any = false;
      for (int lit : clause) {
        auto const var = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
        bool const value = (bits >> var) & 1U;
        if (value == (lit > 0)) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

[[nodiscard]] inline std::vector<symbol> rotate_left(
    std::span<symbol const> w, std::size_t shift) {
  std::vector<symbol> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[(i + shift) % w.size()]);
  }
  return out;
}

/// Tries every conjugate and every root length; keeps the shortest root,
/// then the lexicographically least, then the smallest offset.
[[nodiscard]] inline MinimalRepresentation min_rep(Word const& w) {
  std::size_t const n = w.length();
  if (n == 0) throw precondition_error("empty word");
  std::optional<std::vector<symbol>> best;
  std::size_t best_offset = 0;
  for (std::size_t r = 1; r <= n && !best; ++r) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      auto const c = rotate_left(w.symbols(), shift);
      bool periodic = true;
      for (std::size_t i = 0; i + r < n && periodic; ++i) {
        periodic = c[i] == c[i + r];
      }
      if (!periodic) continue;
      std::vector<symbol> root(c.begin(),
                               c.begin() + static_cast<std::ptrdiff_t>(r));
      if (!best || root < *best) {
        best = root;
        best_offset = shift;
      }
    }
  }
  return {Word(*best, w.alphabet_size()), n, best_offset + 1};
}

/// Offset (1-based) of the lexicographically least conjugate; smallest
/// such offset.
[[nodiscard]] inline std::size_t least_rotation(Word const& w) {
  std::size_t best = 0;
  for (std::size_t shift = 1; shift < w.length(); ++shift) {
    if (rotate_left(w.symbols(), shift) < rotate_left(w.symbols(), best)) {
      best = shift;
    }
  }
  return best + 1;
}

[[nodiscard]] inline bool circular_match(Word const& v, Word const& w) {
  for (std::size_t shift = 0; shift < std::max<std::size_t>(w.length(), 1);
       ++shift) {
    if (greedy_subsequence(v.symbols(), rotate_left(w.symbols(), shift))) {
      return true;
    }
  }
  return false;
}

/// Smallest l with v a subsequence of u^l, u the conjugate at `offset`.
[[nodiscard]] inline std::optional<std::size_t> iterated_match(
    Word const& v, Word const& w, std::size_t offset) {
  for (symbol a : v) {
    if (std::find(w.begin(), w.end(), a) == w.end()) return std::nullopt;
  }
  auto const u = rotate_left(w.symbols(), offset - 1);
  std::vector<symbol> power;
  for (std::size_t l = 1; l <= v.length() + 1; ++l) {
    power.insert(power.end(), u.begin(), u.end());
    if (greedy_subsequence(v.symbols(), power)) return l;
  }
  return std::nullopt;
}

/// Minimal l over all conjugates, with the least offset reaching it.
[[nodiscard]] inline std::optional<std::pair<std::size_t, std::size_t>>
best_iterated_match(Word const& v, Word const& w) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t offset = 1; offset <= w.length(); ++offset) {
    auto const l = iterated_match(v, w, offset);
    if (!l) return std::nullopt;
    if (!best || *l < best->first) best = std::make_pair(*l, offset);
  }
  return best;
}

/// First position after i (1-based, cyclic) holding a, or 0.
[[nodiscard]] inline std::size_t next_position(Word const& w, std::size_t i,
                                               symbol a) {
  std::size_t const n = w.length();
  for (std::size_t step = 1; step <= n; ++step) {
    std::size_t const j = (i - 1 + step) % n;
    if (w[j] == a) return j + 1;
  }
  return 0;
}

}  // namespace rangeseq::oracle

#endif  // RANGESEQ_ORACLES_HPP
