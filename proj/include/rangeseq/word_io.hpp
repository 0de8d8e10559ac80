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

// Word files: one word per line, either raw bytes (ascii) or
// space-separated decimal symbol ids (ints).

#ifndef RANGESEQ_WORD_IO_HPP
#define RANGESEQ_WORD_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rangeseq/core_types.hpp"

namespace rangeseq::io {

enum class Mode { ascii, ints };

/// Byte <-> id mapping for ascii mode. Ids follow increasing byte order
/// over every byte seen, so lexicographic comparisons agree with the text.
class Alphabet {
 public:
  Alphabet() = default;

  void add(std::string_view text) {
    for (char c : text) seen_[static_cast<unsigned char>(c)] = true;
    renumber();
  }

  [[nodiscard]] symbol size() const noexcept {
    return static_cast<symbol>(bytes_.size());
  }

  [[nodiscard]] symbol id(char c) const {
    auto it = std::lower_bound(bytes_.begin(), bytes_.end(),
                               static_cast<unsigned char>(c));
    if (it == bytes_.end() || *it != static_cast<unsigned char>(c)) {
      throw precondition_error(std::string("byte not in alphabet: ") + c);
    }
    return static_cast<symbol>(it - bytes_.begin()) + 1;
  }

  [[nodiscard]] char byte(symbol s) const {
    if (s == 0 || s > bytes_.size()) {
      throw precondition_error("symbol " + std::to_string(s) +
                               " has no byte");
    }
    return static_cast<char>(bytes_[s - 1]);
  }

  [[nodiscard]] Word encode(std::string_view text) const {
    std::vector<symbol> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(id(c));
    return {std::move(out), std::max<symbol>(1, size())};
  }

  [[nodiscard]] std::string decode(Word const& w) const {
    std::string out;
    out.reserve(w.length());
    for (symbol s : w) out.push_back(byte(s));
    return out;
  }

  /// Pairs (byte as a one-character string, id) in id order.
  [[nodiscard]] std::vector<std::pair<std::string, symbol>> mapping() const {
    std::vector<std::pair<std::string, symbol>> out;
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
      out.emplace_back(std::string(1, static_cast<char>(bytes_[i])),
                       static_cast<symbol>(i + 1));
    }
    return out;
  }

 private:
  void renumber() {
    bytes_.clear();
    for (int b = 0; b < 256; ++b) {
      if (seen_[b]) bytes_.push_back(static_cast<unsigned char>(b));
    }
  }

  bool seen_[256] = {};
  std::vector<unsigned char> bytes_;
};

/// Whole file, or standard input for "-".
[[nodiscard]] inline std::string slurp(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// First line without its terminator; empty for an empty file.
[[nodiscard]] inline std::string first_line(std::string const& content) {
  std::string line = content.substr(0, content.find('\n'));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

[[nodiscard]] inline std::vector<symbol> parse_ints(std::string_view line) {
  std::vector<symbol> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == ',') {
      ++i;
      continue;
    }
    symbol value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || value == 0) {
      throw precondition_error("bad symbol id near '" +
                               std::string(line.substr(i, 12)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

[[nodiscard]] inline std::string format_ints(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

/// A set of words read together so that they share one alphabet.
class WordSet {
 public:
  WordSet(Mode mode, symbol sigma) : mode_(mode), sigma_(sigma) {}

  /// Registers raw text; returns its index for word().
  std::size_t add(std::string line) {
    raw_.push_back(std::move(line));
    return raw_.size() - 1;
  }

  std::size_t add_file(std::string const& path) {
    return add(first_line(slurp(path)));
  }

  /// Fixes the alphabet; call once every input has been added.
  void seal() {
    if (mode_ == Mode::ascii) {
      for (auto const& r : raw_) alphabet_.add(r);
      for (auto const& r : raw_) words_.push_back(alphabet_.encode(r));
      return;
    }
    std::vector<std::vector<symbol>> parsed;
    symbol largest = 1;
    for (auto const& r : raw_) {
      parsed.push_back(parse_ints(r));
      for (symbol s : parsed.back()) largest = std::max(largest, s);
    }
    symbol const sigma = sigma_ == 0 ? largest : sigma_;
    for (auto& x : parsed) words_.emplace_back(std::move(x), sigma);
  }

  [[nodiscard]] Word const& word(std::size_t i) const { return words_.at(i); }
  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  [[nodiscard]] Alphabet const& alphabet() const noexcept { return alphabet_; }

  [[nodiscard]] std::string render(Word const& w) const {
    return mode_ == Mode::ascii ? alphabet_.decode(w) : format_ints(w);
  }

 private:
  Mode mode_;
  symbol sigma_;
  std::vector<std::string> raw_;
  std::vector<Word> words_;
  Alphabet alphabet_;
};

}  // namespace rangeseq::io

#endif  // RANGESEQ_WORD_IO_HPP
