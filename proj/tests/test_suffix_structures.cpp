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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "rangeseq/detail/suffix_structures.hpp"

using namespace rangeseq::detail;

namespace {

std::vector<int> random_text(std::mt19937_64& rng, std::size_t n, int upper) {
  std::uniform_int_distribution<int> letter(0, upper);
  std::vector<int> s(n);
  for (auto& x : s) x = letter(rng);
  return s;
}

int naive_lce(std::vector<int> const& s, int i, int j) {
  int h = 0;
  int const n = static_cast<int>(s.size());
  while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
  return h;
}

// Maximal repetitions [start, end) with smallest period q and length >= 2q.
std::set<std::tuple<int, int, int>> naive_runs(std::vector<int> const& s) {
  int const n = static_cast<int>(s.size());
  std::set<std::tuple<int, int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      int q = 1;
      while (q <= j - i) {
        bool ok = true;
        for (int k = i; k + q < j && ok; ++k) ok = s[k] == s[k + q];
        if (ok) break;
        ++q;
      }
      if (j - i < 2 * q) continue;
      bool const left_max = i == 0 || s[i - 1] != s[i - 1 + q];
      bool const right_max = j == n || s[j] != s[j - q];
      if (left_max && right_max) out.emplace(i, j, q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("suffix array matches sorting", "[suffix_structures]") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 3000; ++round) {
    int const upper = static_cast<int>(rng() % 5);
    auto const s = random_text(rng, rng() % 400, upper);
    CHECK(suffix_array(s, upper) == suffix_array_naive(s));
  }
  std::vector<int> const unary(1000, 0);
  CHECK(suffix_array(unary, 0) == suffix_array_naive(unary));
}

TEST_CASE("lce and range minimum agree with direct scans",
          "[suffix_structures]") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 300; ++round) {
    int const upper = static_cast<int>(rng() % 3);
    auto const s = random_text(rng, 1 + rng() % 300, upper);
    LceIndex const index(s, upper);
    for (int q = 0; q < 200; ++q) {
      int const i = static_cast<int>(rng() % s.size());
      int const j = static_cast<int>(rng() % s.size());
      CHECK(index.lce(i, j) == naive_lce(s, i, j));
    }
    auto const values = random_text(rng, 1 + rng() % 500, 1000);
    RangeMin const rmq(values);
    for (int q = 0; q < 200; ++q) {
      std::size_t lo = rng() % values.size();
      std::size_t hi = rng() % values.size();
      if (lo > hi) std::swap(lo, hi);
      CHECK(rmq.query(lo, hi) ==
            *std::min_element(values.begin() + static_cast<std::ptrdiff_t>(lo),
                              values.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
    }
  }
}

TEST_CASE("lyndon array marks the longest Lyndon prefix of each suffix",
          "[suffix_structures]") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 500; ++round) {
    auto const s = random_text(rng, 1 + rng() % 60, 2);
    auto const lyn = lyndon_array(inverse(suffix_array(s, 2)));
    int const n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
      // A word is Lyndon iff it is strictly smaller than all its proper
      // rotations.
      auto is_lyndon = [&](int len) {
        std::vector<int> x(s.begin() + i, s.begin() + i + len);
        for (int r = 1; r < len; ++r) {
          std::vector<int> y(x.begin() + r, x.end());
          y.insert(y.end(), x.begin(), x.begin() + r);
          if (!(x < y)) return false;
        }
        return true;
      };
      int longest = 1;
      for (int len = 1; i + len <= n; ++len) {
        if (is_lyndon(len)) longest = len;
      }
      CHECK(lyn[i] == i + longest);
    }
  }
}

TEST_CASE("runs finds every maximal repetition", "[suffix_structures]") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 1000; ++round) {
    int const upper = static_cast<int>(rng() % 3);
    auto const s = random_text(rng, rng() % 50, upper);
    std::set<std::tuple<int, int, int>> found;
    for (auto const& r : runs(s, upper)) found.emplace(r.start, r.end, r.period);
    CHECK(found == naive_runs(s));
  }
}
