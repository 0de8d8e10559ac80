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

// Exhaustive deciders over the set of length-k p-subsequences of a word:
// enumeration of the set, non-universality, non-equivalence, and the
// universality index.

#ifndef RANGESEQ_RANGE_ANALYSIS_HPP
#define RANGESEQ_RANGE_ANALYSIS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "rangeseq/absent_subseq.hpp"
#include "rangeseq/core_types.hpp"
#include "rangeseq/range_matcher.hpp"

namespace rangeseq {

inline constexpr std::uint64_t default_member_budget = std::uint64_t{1} << 22;

/// Subseq^p_k(w), members in lexicographic order.
struct SubseqSet {
  std::size_t k = 0;
  std::size_t p = 0;
  std::vector<Word> members;
};

/// Collects the distinct length-k subsequences of every window by a
/// depth-first walk that always jumps to the next occurrence of the chosen
/// letter, so each window yields each of its subsequences once.
[[nodiscard]] inline SubseqSet enumerate_subseq_pk(
    Word const& w, std::size_t k, std::size_t p,
    std::uint64_t budget = default_member_budget) {
  std::size_t const n = w.length();
  std::size_t const len = std::min(p, n);
  std::vector<symbol> const letters = w.alph();
  std::uint64_t const estimate = saturating_power(letters.size(), k);

  std::vector<std::vector<std::size_t>> where(letters.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto const a = static_cast<std::size_t>(
        std::lower_bound(letters.begin(), letters.end(), w[i]) -
        letters.begin());
    where[a].push_back(i);
  }

  std::set<std::vector<symbol>> found;
  std::vector<symbol> prefix;
  prefix.reserve(k);
  auto overflow = [&] {
    if (found.size() > budget) {
      throw budget_exceeded("subsequence set enumeration",
                            std::max<std::uint64_t>(estimate, found.size()),
                            budget);
    }
  };

  if (k == 0) {
    found.insert(std::vector<symbol>{});
  } else if (k <= len) {
    for (std::size_t start = 0; start + len <= n; ++start) {
      std::size_t const stop = start + len;
      auto walk = [&](auto&& self, std::size_t from) -> void {
        if (prefix.size() == k) {
          found.insert(prefix);
          overflow();
          return;
        }
        std::size_t const need = k - prefix.size();
        for (std::size_t a = 0; a < letters.size(); ++a) {
          auto it =
              std::lower_bound(where[a].begin(), where[a].end(), from);
          if (it == where[a].end() || *it + need > stop) continue;
          prefix.push_back(letters[a]);
          self(self, *it + 1);
          prefix.pop_back();
        }
      };
      walk(walk, start);
    }
  }

  SubseqSet out;
  out.k = k;
  out.p = p;
  out.members.reserve(found.size());
  for (auto const& x : found) out.members.emplace_back(x, w.alphabet_size());
  return out;
}

struct WitnessSearch {
  std::optional<Word> witness;
  /// Candidates a sequential lexicographic scan inspects, which is the rank
  /// of the witness plus one, or every candidate when there is none.
  std::uint64_t candidates_checked = 0;
  std::uint64_t budget = 0;
  bool shortcut = false;
};

namespace detail {

// Finds the lexicographically least x in {1..sigma}^k with reject(x), with
// the candidate range split into blocks handed out to `threads` workers.
template <typename Reject>
WitnessSearch least_candidate(symbol sigma, std::size_t k,
                              std::uint64_t budget, unsigned threads,
                              char const* what, Reject const& reject) {
  std::uint64_t const total = saturating_power(sigma, k);
  if (total > budget) throw budget_exceeded(what, total, budget);

  constexpr std::uint64_t block = 1024;
  std::uint64_t const blocks = (total + block - 1) / block;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{total};

  auto worker = [&] {
    std::vector<symbol> x(k);
    while (true) {
      std::uint64_t const b = next_block.fetch_add(1);
      if (b >= blocks || b * block >= best.load()) return;
      std::uint64_t const lo = b * block;
      std::uint64_t const hi = std::min(total, lo + block);
      std::uint64_t rest = lo;
      for (std::size_t i = k; i-- > 0;) {
        x[i] = static_cast<symbol>(rest % sigma) + 1;
        rest /= sigma;
      }
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (reject(std::span<symbol const>(x))) {
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
        std::size_t i = k;
        while (i > 0 && x[i - 1] == sigma) x[--i] = 1;
        if (i > 0) ++x[i - 1];
      }
    }
  };

  unsigned const count = std::max(1U, threads);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  WitnessSearch r;
  r.budget = budget;
  std::uint64_t const idx = best.load();
  if (idx < total) {
    std::vector<symbol> x(k);
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      x[i] = static_cast<symbol>(rest % sigma) + 1;
      rest /= sigma;
    }
    r.witness = Word(std::move(x), sigma);
    r.candidates_checked = idx + 1;
  } else {
    r.candidates_checked = total;
  }
  return r;
}

}  // namespace detail

/// Searches {1..sigma}^k, sigma = w.alphabet_size(), for the least word that
/// is not a p-subsequence of w. A text shorter than k * sigma has some letter
/// a occurring fewer than k times, so the answer is known up front (reported
/// as `shortcut`) and the scan stops by a^k at the latest.
[[nodiscard]] inline WitnessSearch kp_non_universal_search(
    Word const& w, std::size_t k, std::size_t p,
    std::uint64_t budget = default_candidate_budget, unsigned threads = 1) {
  symbol const sigma = w.alphabet_size();
  bool const shortcut = k > 0 && w.length() < k * std::size_t{sigma};
  WitnessSearch r = detail::least_candidate(
      sigma, k, budget, threads, "non-universality search",
      [&](std::span<symbol const> x) {
        return !occurs_in_some_window(x, w.symbols(), p);
      });
  r.shortcut = shortcut;
  return r;
}

[[nodiscard]] inline std::optional<Word> kp_non_universal(
    Word const& w, std::size_t k, std::size_t p,
    std::uint64_t budget = default_candidate_budget, unsigned threads = 1) {
  return kp_non_universal_search(w, k, p, budget, threads).witness;
}

/// Least word of length k over the common alphabet lying in exactly one of
/// Subseq^p_k(w) and Subseq^p_k(v).
[[nodiscard]] inline WitnessSearch kp_non_equivalent_search(
    Word const& w, Word const& v, std::size_t k, std::size_t p,
    std::uint64_t budget = default_candidate_budget, unsigned threads = 1) {
  return detail::least_candidate(
      common_alphabet(w, v), k, budget, threads, "non-equivalence search",
      [&](std::span<symbol const> x) {
        return occurs_in_some_window(x, w.symbols(), p) !=
               occurs_in_some_window(x, v.symbols(), p);
      });
}

[[nodiscard]] inline std::optional<Word> kp_non_equivalent(
    Word const& w, Word const& v, std::size_t k, std::size_t p,
    std::uint64_t budget = default_candidate_budget, unsigned threads = 1) {
  return kp_non_equivalent_search(w, v, k, p, budget, threads).witness;
}

/// Number of arches in the greedy factorisation of w into shortest factors
/// containing every letter of alph(w).
[[nodiscard]] inline std::size_t universality_index(Word const& w) {
  if (w.empty()) throw precondition_error("universality index of empty word");
  std::vector<symbol> const letters = w.alph();
  std::vector<std::size_t> seen_in(letters.size(), 0);
  std::size_t arch = 1;
  std::size_t seen = 0;
  std::size_t complete = 0;
  for (symbol c : w) {
    auto const a = static_cast<std::size_t>(
        std::lower_bound(letters.begin(), letters.end(), c) - letters.begin());
    if (seen_in[a] == arch) continue;
    seen_in[a] = arch;
    if (++seen == letters.size()) {
      ++complete;
      ++arch;
      seen = 0;
    }
  }
  return complete;
}

}  // namespace rangeseq

#endif  // RANGESEQ_RANGE_ANALYSIS_HPP
