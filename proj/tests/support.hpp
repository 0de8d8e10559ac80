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

#ifndef RANGESEQ_TESTS_SUPPORT_HPP
#define RANGESEQ_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rangeseq/core_types.hpp"

namespace rangeseq::testing {

inline Word random_word(std::mt19937_64& rng, std::size_t length,
                        symbol sigma) {
  std::uniform_int_distribution<symbol> letter(1, sigma);
  std::vector<symbol> out(length);
  for (auto& x : out) x = letter(rng);
  return {std::move(out), sigma};
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo,
                               std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Calls f on every word over {1..sigma} of each length in [0, max_length].
template <typename F>
void for_all_words(symbol sigma, std::size_t max_length, F&& f) {
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<symbol> x(len, 1);
    while (true) {
      f(Word(x, sigma));
      std::size_t i = len;
      while (i > 0 && x[i - 1] == sigma) x[--i] = 1;
      if (i == 0) break;
      ++x[i - 1];
    }
  }
}

inline Word letters(char const* text) { return Word::from_letters(text); }

}  // namespace rangeseq::testing

#endif  // RANGESEQ_TESTS_SUPPORT_HPP
