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

// rangeseq: command-line front end. Decisions exit 0 for YES and 1 for NO;
// usage errors, malformed input and exhausted budgets exit 2.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rangeseq/absent_subseq.hpp"
#include "rangeseq/circular.hpp"
#include "rangeseq/core_types.hpp"
#include "rangeseq/oracles.hpp"
#include "rangeseq/range_analysis.hpp"
#include "rangeseq/range_matcher.hpp"
#include "rangeseq/reductions.hpp"
#include "rangeseq/word_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rangeseq;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

struct Globals {
  std::string alphabet = "ascii";
  symbol sigma = 0;
  bool json_output = false;
  unsigned threads = 1;
  std::uint64_t budget = default_candidate_budget;
};

Globals globals;

io::WordSet make_set() {
  return {globals.alphabet == "ints" ? io::Mode::ints : io::Mode::ascii,
          globals.sigma};
}

void add_alphabet(json& report, io::WordSet const& set) {
  if (set.mode() != io::Mode::ascii) return;
  json mapping = json::array();
  for (auto const& [byte, id] : set.alphabet().mapping()) {
    mapping.push_back({{"byte", byte}, {"id", id}});
  }
  report["alphabet"] = mapping;
}

std::string plain(json const& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (auto const& x : value) {
      if (!out.empty()) out.push_back(',');
      out += plain(x);
    }
    return "[" + out + "]";
  }
  if (value.is_object()) return value.dump();
  return value.dump();
}

void emit(json const& report) {
  if (globals.json_output) {
    std::cout << report.dump() << '\n';
    return;
  }
  bool first = true;
  for (auto const& [key, value] : report.items()) {
    if (key == "alphabet") continue;
    std::cout << (first ? "" : " ") << key << '=' << plain(value);
    first = false;
  }
  std::cout << '\n';
}

json optional_word(std::optional<Word> const& w, io::WordSet const& set) {
  return w ? json(set.render(*w)) : json(nullptr);
}

template <typename T>
json optional_number(std::optional<T> const& x) {
  return x ? json(*x) : json(nullptr);
}

json bools(std::vector<bool> const& xs) {
  json out = json::array();
  for (bool x : xs) out.push_back(x);
  return out;
}

// Two word files read into one alphabet.
struct Pair {
  io::WordSet set = make_set();
  Word first;
  Word second;

  Pair(std::string const& a, std::string const& b) {
    set.add_file(a);
    set.add_file(b);
    set.seal();
    first = set.word(0);
    second = set.word(1);
  }
};

int run_match(std::string const& u_path, std::string const& w_path,
              std::size_t p) {
  Pair in(u_path, w_path);
  MatchReport const r = p_subsequence_match(in.first, in.second, p);
  json report = {{"command", "match"},
                 {"found", r.found},
                 {"first_hit", optional_number(r.first_hit)},
                 {"window", r.window},
                 {"per_window", bools(r.per_window)}};
  add_alphabet(report, in.set);
  emit(report);
  return r.found ? exit_yes : exit_no;
}

// Verdict per position t >= p for a text arriving on standard input.
int run_match_stream(std::string const& u_path, std::size_t p) {
  io::WordSet set = make_set();
  set.add_file(u_path);
  set.seal();
  Word const& u = set.word(0);
  symbol const unknown = u.alphabet_size() + 1;
  std::optional<MatcherState> state;
  if (u.length() <= p) state.emplace(u, p);
  bool any = false;
  std::size_t t = 0;
  auto feed = [&](symbol c) {
    ++t;
    bool const hit = state ? state->step(c) : false;
    if (t < p) return;
    any = any || hit;
    if (globals.json_output) {
      std::cout << json{{"t", t}, {"found", hit}}.dump() << '\n';
    } else {
      std::cout << t << ' ' << (hit ? 1 : 0) << '\n';
    }
  };
  if (set.mode() == io::Mode::ascii) {
    auto const letters = set.alphabet().mapping();
    char c;
    while (std::cin.get(c)) {
      if (c == '\n' || c == '\r') continue;
      symbol id = unknown;
      for (auto const& [byte, sym] : letters) {
        if (byte[0] == c) id = sym;
      }
      feed(id);
    }
  } else {
    std::string token;
    while (std::cin >> token) {
      for (symbol s : io::parse_ints(token)) feed(s);
    }
  }
  return any ? exit_yes : exit_no;
}

int run_pmas(std::string const& v_path, std::string const& w_path,
             std::size_t p, bool early_exit) {
  Pair in(v_path, w_path);
  PmasResult const r = pmas_scan(in.first, in.second, p, early_exit);
  json report = {{"command", "pmas"},
                 {"is_pmas", r.is_pmas},
                 {"absent", r.absent},
                 {"covered", bools(r.covered)},
                 {"first_occurrence", optional_number(r.first_occurrence)}};
  add_alphabet(report, in.set);
  emit(report);
  return r.is_pmas ? exit_yes : exit_no;
}

int run_pabsent(std::string const& v_path, std::string const& w_path,
                std::size_t p) {
  Pair in(v_path, w_path);
  bool const absent = is_p_absent(in.first, in.second, p);
  json report = {{"command", "pabsent"}, {"absent", absent}};
  add_alphabet(report, in.set);
  emit(report);
  return absent ? exit_yes : exit_no;
}

int run_psas(std::string const& v_path, std::string const& w_path,
             std::size_t p) {
  Pair in(v_path, w_path);
  bool const yes = is_psas(in.first, in.second, p, globals.budget);
  json report = {{"command", "psas"},
                 {"is_psas", yes},
                 {"budget", globals.budget}};
  add_alphabet(report, in.set);
  emit(report);
  return yes ? exit_yes : exit_no;
}

json search_report(char const* command, char const* answer_key,
                   WitnessSearch const& r, io::WordSet const& set) {
  return {{"command", command},
          {answer_key, r.witness.has_value()},
          {"witness", optional_word(r.witness, set)},
          {"candidates_checked", r.candidates_checked},
          {"budget", r.budget},
          {"shortcut", r.shortcut}};
}

int run_nonuniv(std::string const& w_path, std::size_t k, std::size_t p) {
  io::WordSet set = make_set();
  set.add_file(w_path);
  set.seal();
  auto const r = kp_non_universal_search(set.word(0), k, p, globals.budget,
                                         globals.threads);
  json report = search_report("nonuniv", "non_universal", r, set);
  add_alphabet(report, set);
  emit(report);
  return r.witness ? exit_yes : exit_no;
}

int run_nonequiv(std::string const& w_path, std::string const& v_path,
                 std::size_t k, std::size_t p) {
  Pair in(w_path, v_path);
  auto const r = kp_non_equivalent_search(in.first, in.second, k, p,
                                          globals.budget, globals.threads);
  json report = search_report("nonequiv", "non_equivalent", r, in.set);
  add_alphabet(report, in.set);
  emit(report);
  return r.witness ? exit_yes : exit_no;
}

int run_minrep(std::string const& w_path, bool use_oracle) {
  io::WordSet set = make_set();
  set.add_file(w_path);
  set.seal();
  MinimalRepresentation const r = use_oracle
                                       ? oracle::min_rep(set.word(0))
                                       : minimal_representation(set.word(0));
  json report = {{"command", use_oracle ? "oracle minrep" : "minrep"},
                 {"root", set.render(r.root)},
                 {"n", r.total_len},
                 {"rotation_offset", r.rotation_offset}};
  add_alphabet(report, set);
  emit(report);
  return exit_yes;
}

int run_circmatch(std::string const& v_path, std::string const& w_path) {
  Pair in(v_path, w_path);
  bool const yes = circular_match(in.first, in.second);
  json report = {{"command", "circmatch"}, {"match", yes}};
  add_alphabet(report, in.set);
  emit(report);
  return yes ? exit_yes : exit_no;
}

int decide_ell(json& report, std::optional<std::size_t> ell,
               std::optional<std::size_t> bound) {
  if (!bound) return ell ? exit_yes : exit_no;
  bool const yes = ell && *ell <= *bound;
  report["ell_bound"] = *bound;
  report["answer"] = yes;
  return yes ? exit_yes : exit_no;
}

int run_itmatch(std::string const& v_path, std::string const& w_path,
                std::string const& start, std::optional<std::size_t> bound) {
  Pair in(v_path, w_path);
  CanonicalStart const how = start == "minrep"
                                 ? CanonicalStart::minimal_representation
                                 : CanonicalStart::least_rotation;
  if (in.second.empty()) throw precondition_error("w must be nonempty");
  std::size_t const offset = canonical_offset(in.second, how);
  auto const ell = iterated_match_from(in.first, in.second, offset);
  json report = {{"command", "itmatch"},
                 {"start", start},
                 {"rotation_offset", offset},
                 {"ell", optional_number(ell)}};
  int const rc = decide_ell(report, ell, bound);
  add_alphabet(report, in.set);
  emit(report);
  return rc;
}

int run_bestitmatch(std::string const& v_path, std::string const& w_path,
                    std::optional<std::size_t> bound) {
  Pair in(v_path, w_path);
  auto const best =
      best_iterated_circular_match(in.first, in.second, globals.threads);
  std::optional<std::size_t> ell;
  if (best) ell = best->copies;
  json report = {{"command", "bestitmatch"},
                 {"ell", optional_number(ell)},
                 {"rotation_offset", best ? json(best->rotation_offset)
                                          : json(nullptr)}};
  int const rc = decide_ell(report, ell, bound);
  add_alphabet(report, in.set);
  emit(report);
  return rc;
}

json load_json(std::string const& path) {
  try {
    return json::parse(io::slurp(path));
  } catch (json::exception const& e) {
    throw precondition_error(path + ": " + e.what());
  }
}

OvInstance ov_from(json const& src) {
  OvInstance inst;
  try {
    inst.set_a = src.at("a").get<std::vector<std::vector<std::uint8_t>>>();
    inst.set_b = src.at("b").get<std::vector<std::vector<std::uint8_t>>>();
  } catch (json::exception const& e) {
    throw precondition_error(std::string("OV source: ") + e.what());
  }
  inst.validate();
  return inst;
}

std::pair<std::vector<PartialWord>, std::size_t> partial_words_from(
    json const& src) {
  std::vector<PartialWord> s;
  try {
    for (auto const& text : src.at("partial_words")) {
      s.push_back(PartialWord::parse(text.get<std::string>()));
    }
  } catch (json::exception const& e) {
    throw precondition_error(std::string("partial word source: ") + e.what());
  }
  std::size_t length = src.value("length", std::size_t{0});
  if (length == 0 && !s.empty()) length = s.front().length();
  return {std::move(s), length};
}

// {"u": "ab", "w": "ba", "p": 2} with strings in ascii mode, or arrays of
// symbol ids with an optional "sigma".
struct MatchSource {
  Word u;
  Word w;
  std::size_t p = 0;
};

MatchSource match_from(json const& src) {
  MatchSource out;
  try {
    out.p = src.at("p").get<std::size_t>();
    if (src.at("u").is_string()) {
      io::Alphabet alphabet;
      alphabet.add(src.at("u").get<std::string>());
      alphabet.add(src.at("w").get<std::string>());
      out.u = alphabet.encode(src.at("u").get<std::string>());
      out.w = alphabet.encode(src.at("w").get<std::string>());
    } else {
      auto u = src.at("u").get<std::vector<symbol>>();
      auto w = src.at("w").get<std::vector<symbol>>();
      symbol sigma = src.value("sigma", symbol{1});
      for (symbol s : u) sigma = std::max(sigma, s);
      for (symbol s : w) sigma = std::max(sigma, s);
      out.u = Word(std::move(u), sigma);
      out.w = Word(std::move(w), sigma);
    }
  } catch (json::exception const& e) {
    throw precondition_error(std::string("match source: ") + e.what());
  }
  return out;
}

int run_reduce(std::string const& kind, std::string const& src_path,
               std::string const& out_dir) {
  json const src = load_json(src_path);
  json manifest = {{"command", "reduce"}, {"kind", kind}};

  if (kind == "sat3_to_pw") {
    std::size_t const variables = src.at("variables").get<std::size_t>();
    auto const clauses = src.at("clauses").get<std::vector<std::vector<int>>>();
    auto const words = sat3_to_partial_words(variables, clauses);
    json list = json::array();
    for (auto const& pw : words) list.push_back(pw.to_string());
    manifest["partial_words"] = list;
    manifest["length"] = variables;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ofstream(std::filesystem::path(out_dir) / "partial_words.json")
          << json{{"partial_words", list}, {"length", variables}}.dump()
          << '\n';
    }
    emit(manifest);
    return exit_yes;
  }

  ReductionInstance inst;
  json checks = json::object();
  if (kind == "ov_to_match") {
    OvInstance const ov = ov_from(src);
    inst = ov_to_match(ov);
    std::size_t const n = inst.number("n");
    std::size_t const d = inst.number("d");
    checks["|W| = (2n+3)(3d+2)"] =
        inst.number("p") == (2 * n + 3) * (3 * d + 2);
    checks["|U| = (n+2)(2d+2)"] =
        inst.word("u").length() == (n + 2) * (2 * d + 2);
  } else if (kind == "pw_to_kp_non_univ" ||
             kind == "kp_non_univ_to_kp_non_equiv" || kind == "pw_to_psas") {
    auto const [s, length] = partial_words_from(src);
    if (kind == "pw_to_kp_non_univ") {
      inst = partial_words_to_kp_non_univ(s, length);
    } else if (kind == "kp_non_univ_to_kp_non_equiv") {
      inst = kp_non_univ_to_kp_non_equiv(s, length);
    } else {
      inst = psas_instance_from_partial_words(s, length);
    }
    checks["p = 6L^2"] = inst.number("p") == 6 * length * length;
    checks["k = 2L"] = inst.number("k") == 2 * length;
  } else if (kind == "match_to_pmas") {
    MatchSource const m = match_from(src);
    inst = match_to_pmas(m.u, m.w, m.p);
    std::size_t const sigma = inst.number("sigma");
    checks["|w'| = sigma|w| + 3 p0 sigma + sigma(m-1)"] =
        inst.word("w").length() == sigma * m.w.length() + 3 * m.p * sigma +
                                       sigma * (m.u.length() - 1);
  } else if (kind == "match_to_pmas_stream") {
    MatchSource const m = match_from(src);
    inst = match_to_pmas_stream(m.u, m.w, m.p);
    std::size_t const len = m.u.length();
    checks["|v| = |w| + m(p+1) + m(m-1)"] =
        inst.word("v").length() ==
        m.w.length() + len * (m.p + 1) + len * (len - 1);
  } else {
    throw precondition_error("unknown reduction kind '" + kind + "'");
  }

  manifest["source_digest"] = inst.source_digest;
  manifest["numbers"] = inst.numbers;
  json words = json::object();
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (auto const& [name, w] : inst.words) {
    json entry = {{"length", w.length()}, {"sigma", w.alphabet_size()}};
    if (out_dir.empty()) {
      entry["symbols"] = io::format_ints(w);
    } else {
      auto const file = std::filesystem::path(out_dir) / (name + ".txt");
      std::ofstream(file) << io::format_ints(w) << '\n';
      entry["file"] = file.string();
    }
    words[name] = entry;
  }
  manifest["words"] = words;
  manifest["size_checks"] = checks;
  emit(manifest);
  return exit_yes;
}

int run_oracle(std::string const& op, std::vector<std::string> const& args,
               std::size_t p) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw precondition_error("oracle " + op + " takes " +
                               std::to_string(count) + " file argument(s)");
    }
  };
  if (op == "pmatch") {
    need(2);
    Pair in(args[0], args[1]);
    MatchReport const r = oracle::p_match(in.first, in.second, p);
    json report = {{"command", "oracle pmatch"},
                   {"found", r.found},
                   {"first_hit", optional_number(r.first_hit)},
                   {"window", r.window},
                   {"per_window", bools(r.per_window)}};
    add_alphabet(report, in.set);
    emit(report);
    return r.found ? exit_yes : exit_no;
  }
  if (op == "pmas") {
    need(2);
    Pair in(args[0], args[1]);
    bool const yes = oracle::pmas(in.first, in.second, p);
    json report = {{"command", "oracle pmas"}, {"is_pmas", yes}};
    add_alphabet(report, in.set);
    emit(report);
    return yes ? exit_yes : exit_no;
  }
  if (op == "ov") {
    need(1);
    bool const yes = oracle::ov(ov_from(load_json(args[0])));
    emit({{"command", "oracle ov"}, {"orthogonal_pair", yes}});
    return yes ? exit_yes : exit_no;
  }
  if (op == "pw") {
    need(1);
    auto const [s, length] = partial_words_from(load_json(args[0]));
    auto const witness = oracle::partial_words(s, length);
    emit({{"command", "oracle pw"},
          {"non_universal", witness.has_value()},
          {"witness", witness ? json(*witness) : json(nullptr)}});
    return witness ? exit_yes : exit_no;
  }
  if (op == "minrep") {
    need(1);
    return run_minrep(args[0], true);
  }
  throw precondition_error("unknown oracle '" + op + "'");
}

int run_bench(std::size_t n, std::size_t m, std::size_t p, symbol sigma,
              std::size_t reps, std::uint64_t seed) {
  if (sigma == 0) throw precondition_error("--sigma must be positive");
  if (p == 0) p = 4 * m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<symbol> letter(1, sigma);
  std::cout << "n,m,p,wall_ns\n";
  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::vector<symbol> u(m);
    std::vector<symbol> w(n);
    for (auto& x : u) x = letter(rng);
    for (auto& x : w) x = letter(rng);
    Word const uw(std::move(u), sigma);
    Word const ww(std::move(w), sigma);
    auto const start = std::chrono::steady_clock::now();
    MatchReport const r = p_subsequence_match(uw, ww, p);
    auto const stop = std::chrono::steady_clock::now();
    if (r.per_window.empty() && n > 0) std::cerr << "empty report\n";
    std::cout << n << ',' << m << ',' << p << ','
              << std::chrono::duration_cast<std::chrono::nanoseconds>(stop -
                                                                       start)
                     .count()
              << '\n';
  }
  return exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subsequences in bounded ranges of words"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alphabet", globals.alphabet, "Word file mode")
      ->check(CLI::IsMember({"ascii", "ints"}));
  app.add_option("--sigma", globals.sigma,
                 "Alphabet size in ints mode (default: largest id)");
  app.add_flag("--json", globals.json_output, "Machine-readable output");
  app.add_option("--threads", globals.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", globals.budget,
                 "Candidate budget for exhaustive deciders");

  int rc = exit_error;
  std::string a;
  std::string b;
  std::size_t p = 0;
  std::size_t k = 0;

  auto* match = app.add_subcommand("match", "Is u a p-subsequence of w?");
  bool stream = false;
  match->add_option("u", a, "Pattern file")->required();
  match->add_option("w", b, "Text file (omit with --stream)");
  match->add_option("--p", p, "Window length")->required();
  match->add_flag("--stream", stream, "Read the text from standard input");
  match->callback([&] {
    if (stream) {
      rc = run_match_stream(a, p);
    } else {
      if (b.empty()) throw CLI::ValidationError("w", "text file required");
      rc = run_match(a, b, p);
    }
  });

  auto* pmas = app.add_subcommand("pmas", "Is v a minimal absent p-subsequence?");
  bool full_scan = false;
  pmas->add_option("v", a)->required();
  pmas->add_option("w", b)->required();
  pmas->add_option("--p", p)->required();
  pmas->add_flag("--no-early-exit", full_scan,
                 "Scan the whole text and report the first occurrence of v");
  pmas->callback([&] { rc = run_pmas(a, b, p, !full_scan); });

  auto* pabsent = app.add_subcommand("pabsent", "Is v p-absent from w?");
  pabsent->add_option("v", a)->required();
  pabsent->add_option("w", b)->required();
  pabsent->add_option("--p", p)->required();
  pabsent->callback([&] { rc = run_pabsent(a, b, p); });

  auto* psas = app.add_subcommand("psas", "Is v a shortest absent p-subsequence?");
  psas->add_option("v", a)->required();
  psas->add_option("w", b)->required();
  psas->add_option("--p", p)->required();
  psas->callback([&] { rc = run_psas(a, b, p); });

  auto* nonuniv = app.add_subcommand(
      "nonuniv", "Is some length-k word missing from every window?");
  nonuniv->add_option("w", a)->required();
  nonuniv->add_option("--k", k)->required();
  nonuniv->add_option("--p", p)->required();
  nonuniv->callback([&] { rc = run_nonuniv(a, k, p); });

  auto* nonequiv = app.add_subcommand(
      "nonequiv", "Do w and v have different length-k p-subsequences?");
  nonequiv->add_option("w", a)->required();
  nonequiv->add_option("v", b)->required();
  nonequiv->add_option("--k", k)->required();
  nonequiv->add_option("--p", p)->required();
  nonequiv->callback([&] { rc = run_nonequiv(a, b, k, p); });

  auto* minrep = app.add_subcommand("minrep", "Minimal representation");
  minrep->add_option("w", a)->required();
  minrep->callback([&] { rc = run_minrep(a, false); });

  auto* circmatch =
      app.add_subcommand("circmatch", "Is v a subsequence of a conjugate of w?");
  circmatch->add_option("v", a)->required();
  circmatch->add_option("w", b)->required();
  circmatch->callback([&] { rc = run_circmatch(a, b); });

  std::optional<std::size_t> ell;
  std::string start = "lex";
  auto* itmatch = app.add_subcommand(
      "itmatch", "Copies of the canonical rotation needed to embed v");
  itmatch->add_option("v", a)->required();
  itmatch->add_option("w", b)->required();
  itmatch->add_option("--ell", ell, "Decide whether this many copies suffice");
  itmatch->add_option("--start", start, "Canonical rotation")
      ->check(CLI::IsMember({"lex", "minrep"}));
  itmatch->callback([&] { rc = run_itmatch(a, b, start, ell); });

  auto* bestitmatch = app.add_subcommand(
      "bestitmatch", "Fewest copies over all rotations of w");
  bestitmatch->add_option("v", a)->required();
  bestitmatch->add_option("w", b)->required();
  bestitmatch->add_option("--ell", ell, "Decide whether this many copies suffice");
  bestitmatch->callback([&] { rc = run_bestitmatch(a, b, ell); });

  std::string out_dir;
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("kind", a, "Reduction kind")
      ->required()
      ->check(CLI::IsMember({"ov_to_match", "sat3_to_pw", "pw_to_kp_non_univ",
                             "kp_non_univ_to_kp_non_equiv", "pw_to_psas",
                             "match_to_pmas", "match_to_pmas_stream"}));
  reduce->add_option("source", b, "Source instance (JSON)")->required();
  reduce->add_option("--out", out_dir, "Write target words into this directory");
  reduce->callback([&] { rc = run_reduce(a, b, out_dir); });

  std::vector<std::string> oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference deciders");
  oracle_cmd->add_option("op", a, "pmatch, pmas, ov, pw or minrep")
      ->required()
      ->check(CLI::IsMember({"pmatch", "pmas", "ov", "pw", "minrep"}));
  oracle_cmd->add_option("files", oracle_args);
  oracle_cmd->add_option("--p", p);
  oracle_cmd->callback([&] { rc = run_oracle(a, oracle_args, p); });

  std::size_t bench_n = 1000000;
  std::size_t bench_m = 1000;
  std::size_t bench_p = 0;
  symbol bench_sigma = 4;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "Timing runs, CSV on stdout");
  bench->add_option("target", a, "Benchmark target")
      ->required()
      ->check(CLI::IsMember({"match"}));
  bench->add_option("--n", bench_n);
  bench->add_option("--m", bench_m);
  bench->add_option("--p", bench_p, "Window length (default 4m)");
  bench->add_option("--sigma", bench_sigma);
  bench->add_option("--reps", reps);
  bench->add_option("--seed", seed);
  bench->callback([&] {
    rc = run_bench(bench_n, bench_m, bench_p, bench_sigma, reps, seed);
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_yes : exit_error;
  } catch (budget_exceeded const& e) {
    if (globals.json_output) {
      std::cout << json{{"error", "budget_exceeded"},
                        {"required", e.required()},
                        {"budget", e.budget()},
                        {"message", e.what()}}
                       .dump()
                << '\n';
    }
    std::cerr << "rangeseq: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    if (globals.json_output) {
      std::cout << json{{"error", "invalid_input"}, {"message", e.what()}}.dump()
                << '\n';
    }
    std::cerr << "rangeseq: " << e.what() << '\n';
    return exit_error;
  }
  return rc;
}
