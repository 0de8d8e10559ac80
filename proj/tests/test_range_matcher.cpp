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

#include "rangeseq/core_types.hpp"
#include "rangeseq/oracles.hpp"
#include "rangeseq/range_matcher.hpp"
#include "support.hpp"

using namespace rangeseq;
using rangeseq::testing::letters;

namespace {

std::vector<bool> feed(Word const& u, std::size_t p, char const* text) {
  MatcherState state = matcher_init(u, p);
  std::vector<bool> out;
  for (symbol c : letters(text)) out.push_back(matcher_step(state, c));
  return out;
}

void expect_same(MatchReport const& a, MatchReport const& b) {
  CHECK(a.window == b.window);
  CHECK(a.per_window == b.per_window);
  CHECK(a.first_hit == b.first_hit);
  CHECK(a.found == b.found);
}

}  // namespace

TEST_CASE("matcher_init", "[range_matcher]") {
  MatcherState const s = matcher_init(letters("ab"), 3);
  CHECK(s.shortest(1) == MatcherState::infinity());
  CHECK(s.shortest(2) == MatcherState::infinity());
  CHECK(matcher_init(letters("aa"), 2).occurrences(1) ==
        std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(matcher_init(letters("abc"), 2), precondition_error);

  MatcherState empty = matcher_init(Word({}, 1), 1);
  CHECK(empty.shortest_lengths().empty());
  CHECK(matcher_step(empty, 1));
}

TEST_CASE("matcher_step examples", "[range_matcher]") {
  CHECK(feed(letters("ab"), 2, "ab") == std::vector<bool>{false, true});
  CHECK(feed(letters("ab"), 2, "acb") ==
        std::vector<bool>{false, false, false});
  CHECK(feed(letters("ab"), 3, "acb") ==
        std::vector<bool>{false, false, true});
}

TEST_CASE("p_subsequence_match examples", "[range_matcher]") {
  auto const same = p_subsequence_match(letters("ab"), letters("ab"), 2);
  CHECK(same.found);
  CHECK(same.first_hit == 1u);
  CHECK_FALSE(p_subsequence_match(letters("ab"), letters("acb"), 2).found);
  auto const doubled =
      p_subsequence_match(letters("ca"), letters("ababccababcc"), 6);
  CHECK(doubled.found);
  CHECK(doubled.first_hit == 2u);
  CHECK(doubled.at_end(7));
  CHECK_FALSE(doubled.at_end(6));
}

TEST_CASE("out-of-range inputs are answered directly", "[range_matcher]") {
  auto const too_long = p_subsequence_match(letters("abc"), letters("abcd"), 2);
  CHECK_FALSE(too_long.found);
  CHECK(too_long.per_window.size() == 3);
  auto const clamped = p_subsequence_match(letters("ac"), letters("abc"), 99);
  CHECK(clamped.window == 3);
  CHECK(clamped.per_window == std::vector<bool>{true});
  auto const empty_text = p_subsequence_match(Word({}, 1), Word({}, 1), 3);
  CHECK(empty_text.found);
}

TEST_CASE("matcher state invariants after every step",
          "[range_matcher][property]") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 2000; ++round) {
    std::size_t const m = rangeseq::testing::random_size(rng, 1, 6);
    std::size_t const p = rangeseq::testing::random_size(rng, m, 12);
    Word const u = rangeseq::testing::random_word(rng, m, 3);
    Word const w = rangeseq::testing::random_word(rng, 30, 3);
    MatcherState state(u, p);
    for (std::size_t t = 1; t <= w.length(); ++t) {
      state.step(w[t - 1]);
      auto const a = state.shortest_lengths();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != MatcherState::infinity()) {
          CHECK(a[i] >= 1);
          CHECK(a[i] <= p);
          // Definition: shortest suffix of w[1:t] containing u[1:i+1].
          Word const suffix = w.factor(static_cast<std::ptrdiff_t>(t - a[i] + 1),
                                       static_cast<std::ptrdiff_t>(t));
          CHECK(classic_subsequence(u.factor(1, static_cast<std::ptrdiff_t>(i + 1)),
                                    suffix));
        }
        if (i + 1 < a.size() && a[i + 1] != MatcherState::infinity()) {
          CHECK(a[i] <= a[i + 1]);
        }
      }
    }
  }
}

TEST_CASE("matcher agrees with the oracle on random instances",
          "[range_matcher][property]") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 10000; ++round) {
    symbol const sigma = static_cast<symbol>(rangeseq::testing::random_size(rng, 1, 4));
    Word const w = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 0, 30), sigma);
    Word const u = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 0, 6), sigma);
    std::size_t const p = rangeseq::testing::random_size(rng, 0, 32);
    expect_same(p_subsequence_match(u, w, p), oracle::p_match(u, w, p));
  }
}

TEST_CASE("matcher agrees with the oracle exhaustively over two letters",
          "[range_matcher][property]") {
  std::vector<Word> patterns;
  rangeseq::testing::for_all_words(2, 4, [&](Word const& u) {
    patterns.push_back(u);
  });
  std::size_t disagreements = 0;
  rangeseq::testing::for_all_words(2, 10, [&](Word const& w) {
    for (auto const& u : patterns) {
      for (std::size_t p = u.length(); p <= w.length(); ++p) {
        auto const fast = p_subsequence_match(u, w, p);
        auto const slow = oracle::p_match(u, w, p);
        if (fast.per_window != slow.per_window ||
            fast.first_hit != slow.first_hit) {
          ++disagreements;
        }
      }
    }
  });
  CHECK(disagreements == 0);
}

TEST_CASE("found is monotone in the window length",
          "[range_matcher][property]") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 3000; ++round) {
    Word const w = rangeseq::testing::random_word(rng, 25, 3);
    Word const u = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 1, 5), 3);
    bool seen = false;
    for (std::size_t p = 0; p <= 26; ++p) {
      bool const found = p_subsequence_match(u, w, p).found;
      if (seen) CHECK(found);
      seen = seen || found;
    }
  }
}

TEST_CASE("full-length window is the classic relation",
          "[range_matcher][property]") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 3000; ++round) {
    Word const w = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 1, 30), 3);
    Word const u = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 0, 8), 3);
    CHECK(p_subsequence_match(u, w, w.length()).found ==
          classic_subsequence(u, w));
  }
}

TEST_CASE("matcher state size depends only on the pattern",
          "[range_matcher][property]") {
  std::mt19937_64 rng(23);
  Word const u = rangeseq::testing::random_word(rng, 40, 4);
  MatcherState small(u, 40);
  MatcherState large(u, 1000000);
  std::size_t const before = large.footprint();
  for (int i = 0; i < 100000; ++i) {
    large.step(static_cast<symbol>(1 + i % 4));
  }
  CHECK(small.footprint() == large.footprint());
  CHECK(large.footprint() == before);
  CHECK(large.footprint() <= 4 * u.length() + 2);
}

TEST_CASE("infinity saturates for very large windows", "[range_matcher]") {
  std::size_t const p = MatcherState::infinity() - 1;
  MatcherState state(letters("ab"), p);
  for (int i = 0; i < 1000; ++i) state.step(1);
  CHECK(state.shortest(2) == MatcherState::infinity());
  CHECK(state.step(2));
  CHECK_THROWS_AS(MatcherState(letters("ab"), MatcherState::infinity()),
                  precondition_error);
}

TEST_CASE("occurs_in_some_window matches the report", "[range_matcher]") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 3000; ++round) {
    Word const w = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 0, 20), 3);
    Word const u = rangeseq::testing::random_word(
        rng, rangeseq::testing::random_size(rng, 0, 5), 3);
    std::size_t const p = rangeseq::testing::random_size(rng, 0, 22);
    CHECK(occurs_in_some_window(u, w, p) == p_subsequence_match(u, w, p).found);
  }
}
