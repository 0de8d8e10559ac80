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

// Instance generators for the hardness reductions. Every generator returns
// the target instance together with a digest of its source so that both
// sides can be decided independently and compared.
//
// Gadget letters use fixed ids: '0' = 1, '1' = 2, '#' = 3, '[' = 4, ']' = 5.
// Reductions from subsequence matching add one fresh letter '$' = sigma + 1.

#ifndef RANGESEQ_REDUCTIONS_HPP
#define RANGESEQ_REDUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rangeseq/core_types.hpp"

namespace rangeseq {

namespace gadget {
inline constexpr symbol zero = 1;
inline constexpr symbol one = 2;
inline constexpr symbol hash = 3;
inline constexpr symbol open = 4;
inline constexpr symbol close = 5;

/// Renders gadget words with the characters 0 1 # [ ].
[[nodiscard]] inline std::string render(Word const& w) {
  static constexpr std::string_view chars = "?01#[]";
  std::string out;
  for (symbol s : w) out.push_back(s < chars.size() ? chars[s] : '?');
  return out;
}
}  // namespace gadget

enum class ReductionKind {
  ov_to_match,
  sat3_to_pw,
  pw_to_kp_non_univ,
  kp_non_univ_to_kp_non_equiv,
  pw_to_psas,
  match_to_pmas,
  match_to_pmas_stream,
};

[[nodiscard]] inline std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::ov_to_match: return "ov_to_match";
    case ReductionKind::sat3_to_pw: return "sat3_to_pw";
    case ReductionKind::pw_to_kp_non_univ: return "pw_to_kp_non_univ";
    case ReductionKind::kp_non_univ_to_kp_non_equiv:
      return "kp_non_univ_to_kp_non_equiv";
    case ReductionKind::pw_to_psas: return "pw_to_psas";
    case ReductionKind::match_to_pmas: return "match_to_pmas";
    case ReductionKind::match_to_pmas_stream: return "match_to_pmas_stream";
  }
  return "unknown";
}

struct ReductionInstance {
  ReductionKind kind{};
  std::map<std::string, Word> words;
  std::map<std::string, std::size_t> numbers;
  std::string source_digest;

  [[nodiscard]] Word const& word(std::string const& name) const {
    auto it = words.find(name);
    if (it == words.end()) throw error("instance has no word '" + name + "'");
    return it->second;
  }
  [[nodiscard]] std::size_t number(std::string const& name) const {
    auto it = numbers.find(name);
    if (it == numbers.end()) {
      throw error("instance has no number '" + name + "'");
    }
    return it->second;
  }
};

namespace detail {

inline void ensure_size(char const* what, std::size_t actual,
                        std::size_t expected) {
  if (actual != expected) {
    throw error(std::string(what) + " has length " + std::to_string(actual) +
                ", expected " + std::to_string(expected));
  }
}

inline void append(std::vector<symbol>& out, symbol s, std::size_t times = 1) {
  out.insert(out.end(), times, s);
}

inline void append(std::vector<symbol>& out, std::vector<symbol> const& x) {
  out.insert(out.end(), x.begin(), x.end());
}

inline std::string digest(OvInstance const& inst) {
  std::string out = "A=";
  for (auto const* set : {&inst.set_a, &inst.set_b}) {
    for (auto const& vec : *set) {
      for (auto x : vec) out.push_back(x != 0 ? '1' : '0');
      out.push_back(',');
    }
    if (set == &inst.set_a) out += ";B=";
  }
  return out;
}

inline std::string digest(std::vector<PartialWord> const& s) {
  std::string out = "S=";
  for (auto const& pw : s) out += pw.to_string() + ",";
  return out;
}

inline std::string digest(Word const& u, Word const& w, std::size_t p) {
  auto ints = [](Word const& x) {
    std::string out;
    for (symbol s : x) out += std::to_string(s) + " ";
    return out;
  };
  return "u=" + ints(u) + ";w=" + ints(w) + ";p=" + std::to_string(p);
}

inline std::size_t common_length(std::vector<PartialWord> const& s,
                                 std::size_t length) {
  if (length == 0) throw precondition_error("partial word length must be >= 1");
  for (auto const& pw : s) {
    if (pw.length() != length) {
      throw precondition_error("partial word '" + pw.to_string() +
                               "' does not have length " +
                               std::to_string(length));
    }
  }
  return length;
}

}  // namespace detail

/// 0 -> "01#", 1 -> "00#", per coordinate.
[[nodiscard]] inline std::vector<symbol> psi_a(
    std::vector<std::uint8_t> const& vec) {
  std::vector<symbol> out;
  for (auto x : vec) {
    out.push_back(gadget::zero);
    out.push_back(x != 0 ? gadget::zero : gadget::one);
    out.push_back(gadget::hash);
  }
  return out;
}

/// y -> "y#", per coordinate.
[[nodiscard]] inline std::vector<symbol> psi_b(
    std::vector<std::uint8_t> const& vec) {
  std::vector<symbol> out;
  for (auto x : vec) {
    out.push_back(x != 0 ? gadget::one : gadget::zero);
    out.push_back(gadget::hash);
  }
  return out;
}

/// Orthogonal vectors to bounded-range matching: the instance has an
/// orthogonal pair iff u is a |W|-subsequence of w = W^2.
[[nodiscard]] inline ReductionInstance ov_to_match(OvInstance const& inst) {
  inst.validate();
  std::size_t const d = inst.dimension();
  std::size_t const n = inst.set_a.size();
  if (inst.set_b.size() != n) {
    throw precondition_error("vector sets must have the same size");
  }
  std::vector<std::uint8_t> const zeros(d, 0);
  std::vector<std::uint8_t> const ones(d, 1);
  auto block = [](std::vector<symbol>& out, std::vector<symbol> const& body) {
    out.push_back(gadget::open);
    detail::append(out, body);
    out.push_back(gadget::close);
  };

  std::vector<symbol> big_w;
  block(big_w, psi_a(ones));
  block(big_w, psi_a(zeros));
  for (auto const& a : inst.set_a) {
    block(big_w, psi_a(a));
    block(big_w, psi_a(zeros));
  }
  block(big_w, psi_a(ones));

  std::vector<symbol> big_u;
  block(big_u, psi_b(ones));
  for (auto const& b : inst.set_b) block(big_u, psi_b(b));
  block(big_u, psi_b(ones));

  detail::ensure_size("W", big_w.size(), (2 * n + 3) * (3 * d + 2));
  detail::ensure_size("U", big_u.size(), (n + 2) * (2 * d + 2));

  std::size_t const p = big_w.size();
  std::vector<symbol> doubled(big_w);
  detail::append(doubled, big_w);

  ReductionInstance r;
  r.kind = ReductionKind::ov_to_match;
  r.words.emplace("u", Word(std::move(big_u), gadget::close));
  r.words.emplace("w", Word(std::move(doubled), gadget::close));
  r.numbers = {{"p", p}, {"n", n}, {"d", d}};
  r.source_digest = detail::digest(inst);
  return r;
}

/// One partial word per clause encoding the clause's negation: a positive
/// literal x_j gives 0 at position j, a negative one gives 1, every other
/// position is a wildcard. A binary word is incompatible with all of them
/// iff it is a satisfying assignment.
[[nodiscard]] inline std::vector<PartialWord> sat3_to_partial_words(
    std::size_t variables, std::vector<std::vector<int>> const& clauses) {
  if (variables == 0) throw precondition_error("need at least one variable");
  std::vector<PartialWord> out;
  for (auto const& clause : clauses) {
    if (clause.empty()) throw precondition_error("empty clause");
    std::vector<Cell> cells(variables, Cell::wildcard);
    for (int lit : clause) {
      auto const var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (lit == 0 || var > variables) {
        throw precondition_error("literal " + std::to_string(lit) +
                                 " outside variables 1.." +
                                 std::to_string(variables));
      }
      Cell const c = lit > 0 ? Cell::zero : Cell::one;
      Cell& slot = cells[var - 1];
      if (slot != Cell::wildcard && slot != c) {
        throw precondition_error("clause contains x" + std::to_string(var) +
                                 " and its negation");
      }
      slot = c;
    }
    out.emplace_back(std::move(cells));
  }
  return out;
}

namespace detail {

// 0 -> "0#", 1 -> "1#", wildcard -> "01#".
inline std::vector<symbol> cell_gadget(PartialWord const& pw) {
  std::vector<symbol> out;
  for (Cell c : pw.cells()) {
    if (c != Cell::one) out.push_back(gadget::zero);
    if (c != Cell::zero) out.push_back(gadget::one);
    out.push_back(gadget::hash);
  }
  return out;
}

// V = (#^{2L} (01)^{2L})^L: contains every length-2L word over {0,1,#}
// except those of the shape a_1 # a_2 # ... a_L # with a_j in {0,1}.
inline std::vector<symbol> prefix_gadget(std::size_t length) {
  std::vector<symbol> out;
  for (std::size_t r = 0; r < length; ++r) {
    append(out, gadget::hash, 2 * length);
    for (std::size_t j = 0; j < 2 * length; ++j) {
      out.push_back(gadget::zero);
      out.push_back(gadget::one);
    }
  }
  ensure_size("V", out.size(), 6 * length * length);
  return out;
}

}  // namespace detail

/// Partial-word non-universality to length-2L non-universality in range
/// p = |V|. W = #^p u_1 #^p ... u_s #^p V with u_i the gadget of the i-th
/// partial word.
[[nodiscard]] inline ReductionInstance partial_words_to_kp_non_univ(
    std::vector<PartialWord> const& s, std::size_t length) {
  detail::common_length(s, length);
  std::vector<symbol> const v = detail::prefix_gadget(length);
  std::size_t const p = v.size();
  std::vector<symbol> w;
  detail::append(w, gadget::hash, p);
  std::size_t gadget_total = 0;
  for (auto const& pw : s) {
    auto const g = detail::cell_gadget(pw);
    gadget_total += g.size();
    detail::append(w, g);
    detail::append(w, gadget::hash, p);
  }
  detail::append(w, v);
  detail::ensure_size("W", w.size(), (s.size() + 2) * p + gadget_total);

  ReductionInstance r;
  r.kind = ReductionKind::pw_to_kp_non_univ;
  r.words.emplace("w", Word(std::move(w), gadget::hash));
  r.numbers = {{"k", 2 * length}, {"p", p}, {"L", length}};
  r.source_digest = detail::digest(s);
  return r;
}

/// Adds W' = #^p (01#)^L #^p V, which is 2L-universal in range p, so that
/// W and W' differ exactly when W is not universal.
[[nodiscard]] inline ReductionInstance kp_non_univ_to_kp_non_equiv(
    std::vector<PartialWord> const& s, std::size_t length) {
  ReductionInstance r = partial_words_to_kp_non_univ(s, length);
  std::size_t const p = r.number("p");
  std::vector<symbol> w2;
  detail::append(w2, gadget::hash, p);
  for (std::size_t j = 0; j < length; ++j) {
    w2.push_back(gadget::zero);
    w2.push_back(gadget::one);
    w2.push_back(gadget::hash);
  }
  detail::append(w2, gadget::hash, p);
  detail::append(w2, detail::prefix_gadget(length));
  detail::ensure_size("W'", w2.size(), 3 * p + 3 * length);
  r.kind = ReductionKind::kp_non_univ_to_kp_non_equiv;
  r.words.emplace("w_prime", Word(std::move(w2), gadget::hash));
  return r;
}

/// v = (0#)^L 0 is a shortest absent p-subsequence of W iff W is
/// 2L-universal in range p.
[[nodiscard]] inline ReductionInstance psas_instance_from_partial_words(
    std::vector<PartialWord> const& s, std::size_t length) {
  ReductionInstance r = partial_words_to_kp_non_univ(s, length);
  std::vector<symbol> v;
  for (std::size_t j = 0; j < length; ++j) {
    v.push_back(gadget::zero);
    v.push_back(gadget::hash);
  }
  v.push_back(gadget::zero);
  detail::ensure_size("v", v.size(), 2 * length + 1);
  r.kind = ReductionKind::pw_to_psas;
  r.words.emplace("v", Word(std::move(v), gadget::hash));
  return r;
}

/// u is a minimal absent p-subsequence of
/// w' = phi(w) $^{3 p0 sigma} u_1 ... u_{m-1}, p = p0 sigma, iff u is not a
/// p0-subsequence of w. phi(a) = a $^{sigma-1}; u_i lists the alphabet with
/// u[i] moved to the end.
[[nodiscard]] inline ReductionInstance match_to_pmas(Word const& u,
                                                     Word const& w,
                                                     std::size_t p0) {
  std::size_t const m = u.length();
  if (m == 0) throw precondition_error("pattern must be nonempty");
  if (m > p0) throw precondition_error("pattern longer than the window");
  symbol const sigma = common_alphabet(u, w);
  symbol const dollar = sigma + 1;
  std::size_t const p = p0 * sigma;

  std::vector<symbol> out;
  for (symbol a : w) {
    out.push_back(a);
    detail::append(out, dollar, sigma - 1);
  }
  detail::append(out, dollar, 3 * p);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (symbol a = 1; a <= sigma; ++a) {
      if (a != u[i]) out.push_back(a);
    }
    out.push_back(u[i]);
  }
  detail::ensure_size("w'", out.size(),
                      sigma * w.length() + 3 * p + sigma * (m - 1));

  ReductionInstance r;
  r.kind = ReductionKind::match_to_pmas;
  r.words.emplace("u", u.with_alphabet(dollar));
  r.words.emplace("w", Word(std::move(out), dollar));
  r.numbers = {{"p", p}, {"p0", p0}, {"sigma", sigma}};
  r.source_digest = detail::digest(u, w, p0);
  return r;
}

/// u is a minimal absent p-subsequence of v = w $^{p+1} u_1 ... $^{p+1} u_m,
/// u_i = u with its i-th letter deleted, iff u is p-absent from w.
[[nodiscard]] inline ReductionInstance match_to_pmas_stream(Word const& u,
                                                            Word const& w,
                                                            std::size_t p) {
  std::size_t const m = u.length();
  if (m == 0) throw precondition_error("pattern must be nonempty");
  if (m > p) throw precondition_error("pattern longer than the window");
  symbol const sigma = common_alphabet(u, w);
  symbol const dollar = sigma + 1;
  std::vector<symbol> out(w.begin(), w.end());
  for (std::size_t i = 1; i <= m; ++i) {
    detail::append(out, dollar, p + 1);
    for (std::size_t j = 1; j <= m; ++j) {
      if (j != i) out.push_back(u.at(j));
    }
  }
  detail::ensure_size("v", out.size(), w.length() + m * (p + 1) + m * (m - 1));

  ReductionInstance r;
  r.kind = ReductionKind::match_to_pmas_stream;
  r.words.emplace("u", u.with_alphabet(dollar));
  r.words.emplace("v", Word(std::move(out), dollar));
  r.numbers = {{"p", p}};
  r.source_digest = detail::digest(u, w, p);
  return r;
}

}  // namespace rangeseq

#endif  // RANGESEQ_REDUCTIONS_HPP
