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

#include <random>
#include <string>

#include "rangeseq/absent_subseq.hpp"
#include "rangeseq/oracles.hpp"
#include "rangeseq/range_analysis.hpp"
#include "rangeseq/range_matcher.hpp"
#include "rangeseq/reductions.hpp"
#include "support.hpp"

using namespace rangeseq;
using rangeseq::testing::letters;

namespace {

OvInstance random_ov(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  OvInstance inst;
  inst.set_a.assign(n, std::vector<std::uint8_t>(d));
  inst.set_b.assign(n, std::vector<std::uint8_t>(d));
  for (auto* set : {&inst.set_a, &inst.set_b}) {
    for (auto& vec : *set) {
      for (auto& x : vec) x = static_cast<std::uint8_t>(rng() & 1);
    }
  }
  return inst;
}

std::vector<PartialWord> all_partial_words(std::size_t length) {
  std::vector<std::string> texts{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (auto const& t : texts) {
      for (char c : std::string_view("01*")) next.push_back(t + c);
    }
    texts = std::move(next);
  }
  std::vector<PartialWord> out;
  for (auto const& t : texts) out.push_back(PartialWord::parse(t));
  return out;
}

Word binary(std::uint32_t bits, std::size_t length) {
  std::vector<symbol> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = 1 + ((bits >> i) & 1);
  return Word(std::move(out), 2);
}

struct PwTargets {
  bool non_universal;
  bool non_equivalent;
  bool shortest_absent;
};

PwTargets run_targets(std::vector<PartialWord> const& s, std::size_t length) {
  auto const a = partial_words_to_kp_non_univ(s, length);
  auto const b = kp_non_univ_to_kp_non_equiv(s, length);
  auto const c = psas_instance_from_partial_words(s, length);
  return {
      kp_non_universal(a.word("w"), a.number("k"), a.number("p")).has_value(),
      kp_non_equivalent(b.word("w"), b.word("w_prime"), b.number("k"),
                        b.number("p"))
          .has_value(),
      is_psas(c.word("v"), c.word("w"), c.number("p"))};
}

}  // namespace

TEST_CASE("vector gadgets", "[reductions]") {
  CHECK(gadget::render(Word(psi_a({1, 0}), 5)) == "00#01#");
  CHECK(gadget::render(Word(psi_b({0, 1}), 5)) == "0#1#");
  // Orthogonal: every 1 in b faces a 0 in a.
  CHECK(classic_subsequence(Word(psi_b({0, 1}), 5), Word(psi_a({1, 0}), 5)));
  CHECK_FALSE(
      classic_subsequence(Word(psi_b({1, 1}), 5), Word(psi_a({1, 0}), 5)));
  CHECK(classic_subsequence(Word(psi_b({1, 1}), 5), Word(psi_a({0, 0}), 5)));
}

TEST_CASE("ov_to_match examples", "[reductions]") {
  OvInstance yes{{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}};
  OvInstance no{{{1, 1}}, {{1, 0}}};
  REQUIRE(oracle::ov(yes));
  REQUIRE_FALSE(oracle::ov(no));
  for (auto const* inst : {&yes, &no}) {
    auto const r = ov_to_match(*inst);
    CHECK(r.kind == ReductionKind::ov_to_match);
    std::size_t const n = r.number("n");
    std::size_t const d = r.number("d");
    CHECK(r.number("p") == (2 * n + 3) * (3 * d + 2));
    CHECK(r.word("w").length() == 2 * r.number("p"));
    CHECK(r.word("u").length() == (n + 2) * (2 * d + 2));
    CHECK(occurs_in_some_window(r.word("u"), r.word("w"), r.number("p")) ==
          oracle::ov(*inst));
  }
  CHECK_THROWS_AS(ov_to_match(OvInstance{{{1, 0}}, {{1, 0}, {0, 0}}}),
                  precondition_error);
  CHECK_THROWS_AS(ov_to_match(OvInstance{{{1, 2}}, {{1, 0}}}),
                  precondition_error);
  CHECK_THROWS_AS(ov_to_match(OvInstance{{}, {}}), precondition_error);
}

TEST_CASE("ov_to_match round trips", "[reductions][property]") {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 500; ++round) {
    auto const inst = random_ov(rng, rangeseq::testing::random_size(rng, 1, 8),
                                rangeseq::testing::random_size(rng, 1, 6));
    auto const r = ov_to_match(inst);
    CHECK(occurs_in_some_window(r.word("u"), r.word("w"), r.number("p")) ==
          oracle::ov(inst));
  }
}

TEST_CASE("sat3_to_partial_words examples", "[reductions]") {
  auto const s = sat3_to_partial_words(3, {{1, -2}, {2, 3, -1}});
  REQUIRE(s.size() == 2);
  CHECK(s[0].to_string() == "01*");
  CHECK(s[1].to_string() == "100");
  CHECK(sat3_to_partial_words(2, {{1, 1}})[0].to_string() == "0*");
  CHECK_THROWS_AS(sat3_to_partial_words(2, {{1, -1}}), precondition_error);
  CHECK_THROWS_AS(sat3_to_partial_words(2, {{0}}), precondition_error);
  CHECK_THROWS_AS(sat3_to_partial_words(2, {{3}}), precondition_error);
  CHECK_THROWS_AS(sat3_to_partial_words(2, {{}}), precondition_error);
  CHECK_THROWS_AS(sat3_to_partial_words(0, {}), precondition_error);
}

TEST_CASE("sat3_to_partial_words preserves satisfiability",
          "[reductions][property]") {
  std::mt19937_64 rng(113);
  for (int round = 0; round < 2000; ++round) {
    std::size_t const vars = rangeseq::testing::random_size(rng, 1, 5);
    std::size_t const count = rangeseq::testing::random_size(rng, 0, 8);
    std::vector<std::vector<int>> clauses;
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<int> clause;
      std::size_t const width = rangeseq::testing::random_size(rng, 1, 3);
      for (std::size_t i = 0; i < width; ++i) {
        int const var =
            static_cast<int>(rangeseq::testing::random_size(rng, 1, vars));
        int lit = (rng() & 1) ? var : -var;
        for (int other : clause) {
          if (other == -lit) lit = -lit;
        }
        clause.push_back(lit);
      }
      clauses.push_back(clause);
    }
    auto const s = sat3_to_partial_words(vars, clauses);
    CHECK(oracle::partial_words(s, vars).has_value() ==
          oracle::satisfiable(vars, clauses));
  }
}

TEST_CASE("prefix gadget supplies every binary word", "[reductions]") {
  for (std::size_t length = 1; length <= 3; ++length) {
    Word const v(detail::prefix_gadget(length), gadget::hash);
    CHECK(v.length() == 6 * length * length);
    for (std::uint32_t bits = 0; bits < (1u << (2 * length)); ++bits) {
      CHECK(classic_subsequence(binary(bits, 2 * length).with_alphabet(3), v));
    }
    std::vector<symbol> alternating;
    for (std::size_t j = 0; j < length; ++j) {
      alternating.push_back(gadget::zero);
      alternating.push_back(gadget::hash);
    }
    CHECK_FALSE(classic_subsequence(Word(alternating, 3), v));
  }
}

TEST_CASE("a single 001101 block per run misses binary words",
          "[reductions]") {
  // #^4 001101 #^4 has only three zeros, so 0000 cannot be supplied.
  Word const v = Word({3, 3, 3, 3, 1, 1, 2, 2, 1, 2, 3, 3, 3, 3}, 3);
  CHECK_FALSE(classic_subsequence(binary(0, 4).with_alphabet(3), v));
  Word const repaired(detail::prefix_gadget(2), gadget::hash);
  CHECK(classic_subsequence(binary(0, 4).with_alphabet(3), repaired));
}

TEST_CASE("partial-word reduction instances", "[reductions]") {
  std::vector<PartialWord> const s{PartialWord::parse("0*"),
                                   PartialWord::parse("11")};
  auto const r = partial_words_to_kp_non_univ(s, 2);
  CHECK(r.number("k") == 4);
  CHECK(r.number("p") == 24);
  CHECK(r.number("L") == 2);
  // Gadgets "0#01#" and "1#1#" between #^p separators, then V.
  CHECK(r.word("w").length() == 4 * 24 + 5 + 4);
  CHECK(gadget::render(r.word("w").factor(25, 29)) == "0#01#");

  auto const e = kp_non_univ_to_kp_non_equiv(s, 2);
  Word const& w2 = e.word("w_prime");
  CHECK(w2.length() == 3 * 24 + 6);
  CHECK(gadget::render(w2.factor(25, 30)) == "01#01#");
  CHECK(!kp_non_universal(w2, 4, 24));

  auto const v = psas_instance_from_partial_words(s, 2);
  CHECK(gadget::render(v.word("v")) == "0#0#0");

  CHECK_THROWS_AS(partial_words_to_kp_non_univ({PartialWord::parse("0")}, 2),
                  precondition_error);
}

TEST_CASE("partial-word targets on small sets", "[reductions]") {
  auto const star = run_targets({PartialWord::parse("*")}, 1);
  CHECK_FALSE(star.non_universal);
  CHECK_FALSE(star.non_equivalent);
  CHECK(star.shortest_absent);
  auto const zero = run_targets({PartialWord::parse("0")}, 1);
  CHECK(zero.non_universal);
  CHECK(zero.non_equivalent);
  CHECK_FALSE(zero.shortest_absent);
  auto const empty = run_targets({}, 2);
  CHECK(empty.non_universal);
}

TEST_CASE("partial-word targets agree with the source exhaustively",
          "[reductions][property]") {
  for (std::size_t length = 1; length <= 2; ++length) {
    auto const all = all_partial_words(length);
    std::vector<std::vector<PartialWord>> sets{{}};
    for (std::size_t i = 0; i < all.size(); ++i) {
      sets.push_back({all[i]});
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        sets.push_back({all[i], all[j]});
      }
    }
    for (auto const& s : sets) {
      bool const source = oracle::partial_words(s, length).has_value();
      auto const t = run_targets(s, length);
      CHECK(t.non_universal == source);
      CHECK(t.non_equivalent == source);
      CHECK(t.shortest_absent == !source);
    }
  }
}

TEST_CASE("match_to_pmas examples", "[reductions]") {
  auto const r = match_to_pmas(letters("ab"), letters("ba"), 2);
  CHECK(r.number("sigma") == 2);
  CHECK(r.number("p") == 4);
  Word const& w = r.word("w");
  CHECK(w.alphabet_size() == 3);
  CHECK(w.factor(1, 4) == Word({2, 3, 1, 3}, 3));
  CHECK(w.length() == 4 + 12 + 2);
  CHECK(w.factor(17, 18) == Word({2, 1}, 3));
  CHECK(is_pmas(r.word("u"), w, r.number("p")));
  auto const hit = match_to_pmas(letters("ab"), letters("ab"), 2);
  CHECK_FALSE(is_pmas(hit.word("u"), hit.word("w"), hit.number("p")));
  CHECK_THROWS_AS(match_to_pmas(Word({}, 2), letters("ab"), 2),
                  precondition_error);
  CHECK_THROWS_AS(match_to_pmas(letters("abc"), letters("ab"), 2),
                  precondition_error);
}

TEST_CASE("match_to_pmas_stream examples", "[reductions]") {
  auto const r = match_to_pmas_stream(letters("ab"), letters("ba"), 2);
  Word const& v = r.word("v");
  CHECK(v == Word({2, 1, 3, 3, 3, 2, 3, 3, 3, 1}, 3));
  CHECK(is_pmas(r.word("u"), v, 2));
  auto const hit = match_to_pmas_stream(letters("ab"), letters("aab"), 2);
  CHECK_FALSE(is_pmas(hit.word("u"), hit.word("v"), 2));
}

TEST_CASE("match reductions agree with the source exhaustively",
          "[reductions][property]") {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::uint32_t wb = 0; wb < (1u << n); ++wb) {
        for (std::uint32_t ub = 0; ub < (1u << m); ++ub) {
          Word const w = binary(wb, n);
          Word const u = binary(ub, m);
          for (std::size_t p0 = m; p0 <= n; ++p0) {
            bool const source = oracle::occurs(u.symbols(), w.symbols(), p0);
            auto const a = match_to_pmas(u, w, p0);
            auto const b = match_to_pmas_stream(u, w, p0);
            CHECK(is_pmas(a.word("u"), a.word("w"), a.number("p")) == !source);
            CHECK(is_pmas(b.word("u"), b.word("v"), b.number("p")) == !source);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("reduction kinds have names", "[reductions]") {
  CHECK(to_string(ReductionKind::ov_to_match) == "ov_to_match");
  CHECK(to_string(ReductionKind::match_to_pmas_stream) ==
        "match_to_pmas_stream");
  ReductionInstance r;
  CHECK_THROWS_AS(r.word("missing"), error);
  CHECK_THROWS_AS(r.number("missing"), error);
}
