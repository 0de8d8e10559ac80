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

// Words over an integer alphabet, partial words, window arithmetic and the
// unbounded subsequence relation. Everything else in the library builds on
// the types declared here.

#ifndef RANGESEQ_CORE_TYPES_HPP
#define RANGESEQ_CORE_TYPES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rangeseq {

using symbol = std::uint32_t;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class precondition_error : public error {
 public:
  using error::error;
};

class budget_exceeded : public error {
 public:
  budget_exceeded(std::string const& what_for, std::uint64_t required,
                  std::uint64_t budget)
      : error(what_for + " needs " + std::to_string(required) +
              " candidates, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  [[nodiscard]] std::uint64_t required() const noexcept { return required_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// Saturating sigma^k, used by every budgeted enumeration.
[[nodiscard]] inline std::uint64_t saturating_power(std::uint64_t base,
                                                    std::size_t exponent) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

/// An immutable word over the alphabet {1, ..., alphabet_size}.
class Word {
 public:
  Word() = default;

  Word(std::vector<symbol> symbols, symbol alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) {
      throw precondition_error("alphabet size must be at least 1");
    }
    for (symbol s : symbols_) {
      if (s == 0 || s > alphabet_size_) {
        throw precondition_error("symbol " + std::to_string(s) +
                                 " outside alphabet [1:" +
                                 std::to_string(alphabet_size_) + "]");
      }
    }
  }

  /// Alphabet size defaults to the largest symbol present (at least 1).
  explicit Word(std::vector<symbol> symbols)
      : Word(symbols, std::max<symbol>(
                          1, symbols.empty() ? 1
                                             : *std::max_element(
                                                   symbols.begin(),
                                                   symbols.end()))) {}

  Word(std::initializer_list<symbol> symbols)
      : Word(std::vector<symbol>(symbols)) {}

  /// Maps 'a' to 1, 'b' to 2 and so on; convenient for fixed examples.
  [[nodiscard]] static Word from_letters(std::string_view letters,
                                         symbol alphabet_size = 0) {
    std::vector<symbol> out;
    out.reserve(letters.size());
    symbol largest = 1;
    for (char c : letters) {
      if (c < 'a' || c > 'z') {
        throw precondition_error(std::string("not a lowercase letter: ") + c);
      }
      out.push_back(static_cast<symbol>(c - 'a' + 1));
      largest = std::max(largest, out.back());
    }
    return {std::move(out), alphabet_size == 0 ? largest : alphabet_size};
  }

  [[nodiscard]] std::size_t length() const noexcept { return symbols_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] symbol alphabet_size() const noexcept { return alphabet_size_; }

  /// 1-based access, matching the usual w[i] notation.
  [[nodiscard]] symbol at(std::size_t i) const { return symbols_.at(i - 1); }
  [[nodiscard]] symbol operator[](std::size_t i) const noexcept {
    return symbols_[i];
  }

  [[nodiscard]] std::span<symbol const> symbols() const noexcept {
    return symbols_;
  }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

  /// Occurrence count |w|_a.
  [[nodiscard]] std::size_t count(symbol a) const noexcept {
    return static_cast<std::size_t>(
        std::count(symbols_.begin(), symbols_.end(), a));
  }

  /// alph(w) as a sorted list of distinct symbols.
  [[nodiscard]] std::vector<symbol> alph() const {
    std::vector<symbol> out(symbols_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Same symbols, alphabet widened to at least `sigma`.
  [[nodiscard]] Word with_alphabet(symbol sigma) const {
    return {symbols_, std::max(sigma, alphabet_size_)};
  }

  /// Factor w[from:to], 1-based and inclusive, with the clamping rules
  /// w[m:n] = w[1:n] for m < 1 and w[m:n] = w[m:|w|] for n > |w|.
  [[nodiscard]] Word factor(std::ptrdiff_t from, std::ptrdiff_t to) const {
    auto const n = static_cast<std::ptrdiff_t>(symbols_.size());
    from = std::max<std::ptrdiff_t>(from, 1);
    to = std::min(to, n);
    if (from > to) return Word(std::vector<symbol>{}, alphabet_size_);
    return {std::vector<symbol>(symbols_.begin() + (from - 1),
                                symbols_.begin() + to),
            alphabet_size_};
  }

  [[nodiscard]] Word concat(Word const& other) const {
    std::vector<symbol> out(symbols_);
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return {std::move(out), std::max(alphabet_size_, other.alphabet_size_)};
  }

  [[nodiscard]] Word power(std::size_t k) const {
    std::vector<symbol> out;
    out.reserve(symbols_.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), symbols_.begin(), symbols_.end());
    }
    return {std::move(out), alphabet_size_};
  }

  /// The conjugate w[offset:n] w[1:offset-1], offset 1-based.
  [[nodiscard]] Word rotation(std::size_t offset) const {
    if (symbols_.empty()) return *this;
    std::vector<symbol> out(symbols_);
    std::rotate(out.begin(),
                out.begin() + static_cast<std::ptrdiff_t>(
                                  (offset - 1) % symbols_.size()),
                out.end());
    return {std::move(out), alphabet_size_};
  }

  /// Removes the 1-based position i.
  [[nodiscard]] Word without(std::size_t i) const {
    std::vector<symbol> out(symbols_);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return {std::move(out), alphabet_size_};
  }

  /// Letters rendered as 'a', 'b', ... (ids above 26 as "<id>").
  [[nodiscard]] std::string to_letters() const {
    std::string out;
    for (symbol s : symbols_) {
      if (s <= 26) {
        out.push_back(static_cast<char>('a' + s - 1));
      } else {
        out += "<" + std::to_string(s) + ">";
      }
    }
    return out;
  }

  friend bool operator==(Word const& a, Word const& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend auto operator<=>(Word const& a, Word const& b) noexcept {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<symbol> symbols_;
  symbol alphabet_size_ = 1;
};

/// Widest alphabet among the arguments; binary operations work over it.
[[nodiscard]] inline symbol common_alphabet(Word const& a, Word const& b) {
  return std::max(a.alphabet_size(), b.alphabet_size());
}

enum class Cell : std::uint8_t { zero, one, wildcard };

/// A word over {0, 1, wildcard}. Text form uses '0', '1' and '*'.
class PartialWord {
 public:
  PartialWord() = default;
  explicit PartialWord(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  [[nodiscard]] static PartialWord parse(std::string_view text) {
    std::vector<Cell> cells;
    cells.reserve(text.size());
    // "\u25CA" (a lozenge) is accepted as a synonym for '*'.
    constexpr std::string_view lozenge = "\xE2\x97\x8A";
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (text.substr(i, lozenge.size()) == lozenge) {
        cells.push_back(Cell::wildcard);
        i += lozenge.size() - 1;
        continue;
      }
      switch (c) {
        case '0': cells.push_back(Cell::zero); break;
        case '1': cells.push_back(Cell::one); break;
        case '*': cells.push_back(Cell::wildcard); break;
        default:
          throw precondition_error(std::string("bad partial word cell '") + c +
                                   "', expected 0, 1 or *");
      }
    }
    return PartialWord(std::move(cells));
  }

  [[nodiscard]] std::size_t length() const noexcept { return cells_.size(); }
  [[nodiscard]] Cell operator[](std::size_t i) const noexcept {
    return cells_[i];
  }
  [[nodiscard]] std::span<Cell const> cells() const noexcept { return cells_; }

  /// A full binary word is compatible when it agrees on every defined cell.
  [[nodiscard]] bool compatible_with(std::span<std::uint8_t const> bits) const {
    if (bits.size() != cells_.size()) return false;
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      if (cells_[j] == Cell::wildcard) continue;
      if ((cells_[j] == Cell::one) != (bits[j] != 0)) return false;
    }
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (Cell c : cells_) {
      out.push_back(c == Cell::zero ? '0' : c == Cell::one ? '1' : '*');
    }
    return out;
  }

  friend bool operator==(PartialWord const&, PartialWord const&) = default;

 private:
  std::vector<Cell> cells_;
};

struct WindowQuery {
  Word pattern;
  std::size_t window = 0;

  WindowQuery(Word p, std::size_t window_length)
      : pattern(std::move(p)), window(window_length) {
    if (pattern.length() > window) {
      throw precondition_error("pattern longer than window");
    }
  }
};

/// Verdicts for every window of a bounded-range query. Entry k describes the
/// window ending at t = window + k (1-based), i.e. starting at k + 1.
struct MatchReport {
  std::size_t window = 0;
  std::vector<bool> per_window;
  std::optional<std::size_t> first_hit;
  bool found = false;

  [[nodiscard]] bool at_end(std::size_t t) const {
    return per_window.at(t - window);
  }
};

/// Two sets of Boolean vectors of a common dimension.
struct OvInstance {
  std::vector<std::vector<std::uint8_t>> set_a;
  std::vector<std::vector<std::uint8_t>> set_b;

  [[nodiscard]] std::size_t dimension() const {
    return set_a.empty() ? 0 : set_a.front().size();
  }

  void validate() const {
    if (set_a.empty() || set_b.empty()) {
      throw precondition_error("both vector sets must be nonempty");
    }
    std::size_t const d = dimension();
    if (d == 0) throw precondition_error("vector dimension must be positive");
    for (auto const* set : {&set_a, &set_b}) {
      for (auto const& vec : *set) {
        if (vec.size() != d) {
          throw precondition_error("vectors differ in dimension");
        }
        for (auto x : vec) {
          if (x > 1) throw precondition_error("vector entries must be 0 or 1");
        }
      }
    }
  }
};

/// A circular word of length total_len written as a power of root, realised
/// by the conjugate starting at rotation_offset (1-based).
struct MinimalRepresentation {
  Word root;
  std::size_t total_len = 0;
  std::size_t rotation_offset = 1;

  /// The length-total_len prefix of root^infinity.
  [[nodiscard]] Word expand() const {
    std::vector<symbol> out(total_len);
    for (std::size_t i = 0; i < total_len; ++i) {
      out[i] = root[i % root.length()];
    }
    return {std::move(out), root.alphabet_size()};
  }

  friend bool operator==(MinimalRepresentation const& a,
                         MinimalRepresentation const& b) {
    return a.root == b.root && a.total_len == b.total_len &&
           a.rotation_offset == b.rotation_offset;
  }
};

/// Unbounded u <= w by the left-to-right greedy scan.
[[nodiscard]] inline bool classic_subsequence(std::span<symbol const> u,
                                              std::span<symbol const> w) {
  std::size_t i = 0;
  for (std::size_t t = 0; t < w.size() && i < u.size(); ++t) {
    if (w[t] == u[i]) ++i;
  }
  return i == u.size();
}

[[nodiscard]] inline bool classic_subsequence(Word const& u, Word const& w) {
  return classic_subsequence(u.symbols(), w.symbols());
}

/// The window of length p ending at position t: w[t-p+1 : t], clamped.
[[nodiscard]] inline Word window_at(Word const& w, std::size_t p,
                                    std::size_t t) {
  if (t < 1 || t > w.length()) {
    throw precondition_error("window end " + std::to_string(t) +
                             " outside [1:" + std::to_string(w.length()) + "]");
  }
  if (p < 1) throw precondition_error("window length must be positive");
  auto const end = static_cast<std::ptrdiff_t>(t);
  return w.factor(end - static_cast<std::ptrdiff_t>(p) + 1, end);
}

}  // namespace rangeseq

#endif  // RANGESEQ_CORE_TYPES_HPP
