#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symcode/construct.hpp"
#include "symcode/decodability.hpp"
#include "symcode/enumerate.hpp"
#include "symcode/metrics.hpp"

using namespace symcode;

namespace {

bool is_submultiset(const exponent_multiset& part, const exponent_multiset& whole) {
  for (std::size_t x : std::set<std::size_t>(part.begin(), part.end())) {
    if (part.count(x) > whole.count(x)) return false;
  }
  return true;
}

mpz_class power_sum(const exponent_multiset& xs) {
  mpz_class s = 0;
  for (std::size_t x : xs) s += pow2(x);
  return s;
}

// every exponent multiset with elements < vals and multiplicities <= reps
void for_each_multiset(std::size_t vals, std::size_t reps,
                       const std::function<void(const exponent_multiset&)>& fn) {
  std::vector<std::size_t> mult(vals, 0);
  while (true) {
    exponent_multiset ms;
    for (std::size_t v = 0; v < vals; ++v) {
      for (std::size_t r = 0; r < mult[v]; ++r) ms.insert(v);
    }
    fn(ms);
    std::size_t i = 0;
    while (i < vals && ++mult[i] > reps) mult[i++] = 0;
    if (i == vals) break;
  }
}

}  // namespace

TEST_CASE("subset_sum_exact on worked instances") {
  CHECK(subset_sum_exact({0}, 0) == exponent_multiset{0});
  CHECK(subset_sum_exact({1, 2, 2, 0, 1}, 3) == exponent_multiset{2, 2});
  CHECK(subset_sum_exact({0, 0, 1}, 1) == exponent_multiset{1});
  CHECK(subset_sum_exact({0, 0}, 1) == exponent_multiset{0, 0});
  CHECK(subset_sum_exact({3, 3}, 3) == exponent_multiset{3});
}

TEST_CASE("subset_sum_exact enforces its preconditions") {
  CHECK_THROWS_AS(subset_sum_exact({3}, 2), std::invalid_argument);   // element too big
  CHECK_THROWS_AS(subset_sum_exact({0, 0}, 2), std::invalid_argument);  // total too small
  CHECK_THROWS_AS(subset_sum_exact({}, 0), std::invalid_argument);
}

TEST_CASE("greedy selection agrees with the feasibility oracle at desk scale") {
  for_each_multiset(5, 2, [](const exponent_multiset& ms) {
    for (std::size_t target = 0; target < 5; ++target) {
      bool pre = !ms.empty() && *ms.rbegin() <= target && power_sum(ms) >= pow2(target);
      if (!pre) continue;
      CHECK(oracles::dp_subset_sum_feasible(ms, target));
      exponent_multiset chosen = subset_sum_exact(ms, target);
      CHECK(power_sum(chosen) == pow2(target));
      CHECK(is_submultiset(chosen, ms));
    }
  });
}

TEST_CASE("occupancy_table counts class members") {
  occupancy_table t = occupancy_table::of_code(code{"a", "ba"});
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(2, 2) == 0);
  CHECK(t.at(3, 0) == 0);
  occupancy_table full = occupancy_table::of_code(code{"aa", "ab", "ba", "bb"});
  CHECK(full.at(2, 2) == 1);
  CHECK(full.at(2, 1) == 2);
  CHECK(full.at(2, 0) == 1);
  CHECK(occupancy_table::of_code(code{}).rows().empty());
}

TEST_CASE("available_words lists the free words in lex order") {
  CHECK(available_words(code{"b"}, 1) == std::vector<word>{word("a")});
  CHECK(available_words(code{"a"}, 1) == std::vector<word>{word("b")});
  CHECK(available_words(code{"a", "ba"}, 2) == std::vector<word>{word("bb")});
  CHECK(available_words(code{}, 1) == std::vector<word>{word("a"), word("b")});
  CHECK(available_words(code{}, 2) ==
        std::vector<word>{word("aa"), word("ab"), word("ba"), word("bb")});
  CHECK(available_words(code{"a", "b"}, 2).empty());
}

TEST_CASE("available_words preconditions") {
  CHECK_THROWS_AS(available_words(code{"a", "ab"}, 2), std::invalid_argument);
  CHECK_THROWS_AS(available_words(code{"aa"}, 1), std::invalid_argument);
}

TEST_CASE("add_word_step worked examples") {
  step_result r1 = add_word_step(code{}, 1, 1);
  CHECK(r1.result == code{"a"});
  REQUIRE(r1.trace.actions.size() == 1);
  CHECK(r1.trace.actions[0].op == trace_action::kind::subset_sum);
  CHECK(r1.trace.actions[0].exponents == std::vector<std::size_t>{1});

  step_result r2 = add_word_step(code{"a"}, 0, 2);
  CHECK(r2.result == code{"a", "bb"});
  REQUIRE(r2.trace.actions.size() == 1);
  CHECK(r2.trace.actions[0].op == trace_action::kind::add_b_run);

  step_result r3 = add_word_step(code{"a"}, 1, 2);
  CHECK(r3.result == code{"a", "ba"});
  CHECK(r3.trace.actions[0].op == trace_action::kind::subset_sum);
  CHECK(r3.trace.actions[0].added == std::vector<word>{word("ba")});
}

TEST_CASE("add_word_step extends a missing shorter word when free words overshoot") {
  // free length-2 words are aa and ab; aa carries 2^2, too heavy for 2^1, so
  // the missing length-1 word a is extended to ab instead
  step_result r = add_word_step(code{"b"}, 1, 2);
  CHECK(r.result == code{"b", "ab"});
  REQUIRE(r.trace.actions.size() == 1);
  CHECK(r.trace.actions[0].op == trace_action::kind::missing_word_extension);
  CHECK(r.trace.actions[0].m == 1);
  CHECK(r.trace.actions[0].j == 1);
  CHECK(r.trace.actions[0].added == std::vector<word>{word("ab")});
}

TEST_CASE("add_word_step shifts a vacancy when the window classes are full") {
  // length-2 classes at exponents 0 and 1 are full; the step trades ab and ba
  // for aa, reopening exponent 1 for the extension abb
  step_result r = add_word_step(code{"ab", "ba", "bb"}, 1, 3);
  CHECK(r.result == code{"aa", "bb", "abb"});
  REQUIRE(r.trace.actions.size() == 2);
  CHECK(r.trace.actions[0].op == trace_action::kind::vacancy_shift);
  CHECK(r.trace.actions[0].removed == std::vector<word>{word("ab"), word("ba")});
  CHECK(r.trace.actions[0].added == std::vector<word>{word("aa")});
  CHECK(r.trace.actions[1].op == trace_action::kind::missing_word_extension);
  CHECK(replay_trace(code{"ab", "ba", "bb"}, r.trace) == r.result);
}

TEST_CASE("add_word_step preconditions") {
  CHECK_THROWS_AS(add_word_step(code{"a", "ab"}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(add_word_step(code{"aa"}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_word_step(code{}, 2, 1), std::invalid_argument);
}

TEST_CASE("add_word_step fails honestly when the free weight cannot cover the word") {
  CHECK_THROWS_AS(add_word_step(code{"a", "b"}, 0, 1), construct_failure);
  try {
    add_word_step(code{"a", "b"}, 0, 1);
  } catch (const construct_failure& e) {
    CHECK(std::string(e.what()).find("free weight") != std::string::npos);
    CHECK(e.trace.actions.empty());
  }
}

TEST_CASE("add_word_step keeps the step contract wherever it succeeds") {
  std::vector<code> seeds;
  seeds.push_back(code{});
  enumerate_codes(2, 2, code_filter::prefix_free,
                  [&](const code& c) { seeds.push_back(c); });
  for (const auto& d : seeds) {
    for (std::size_t m = std::max<std::size_t>(d.max_length(), 1); m <= 3; ++m) {
      for (std::size_t e = 0; e <= m; ++e) {
        length_profile want = power_profile(d);
        want.add(m, pow2(e));
        try {
          step_result r = add_word_step(d, e, m);
          CHECK(is_prefix_free(r.result));
          CHECK(power_profile(r.result) == want);
          CHECK(replay_trace(d, r.trace) == r.result);
          CHECK(r.trace.length == m);
          CHECK(r.trace.exponent == e);
        } catch (const construct_failure&) {
          // legitimate only when no prefix-free code realizes the profile
          CHECK_FALSE(prefixify_oracle(want, want.lengths()).has_value());
        }
      }
    }
  }
}

TEST_CASE("replay_trace applies removals before additions") {
  step_trace tr;
  tr.actions.push_back({trace_action::kind::vacancy_shift, 2, 2,
                        {word("aa")}, {word("ab"), word("ba")}, {}});
  CHECK(replay_trace(code{"ab", "ba"}, tr) == code{"aa"});
  CHECK_THROWS_AS(replay_trace(code{}, tr), std::invalid_argument);
}

TEST_CASE("prefixify returns prefix-free inputs unchanged") {
  prefixify_result r = prefixify(code{"a", "ba", "bb"});
  CHECK(r.result == code{"a", "ba", "bb"});
  CHECK(r.traces.empty());
  CHECK(prefixify(code{"b"}).result == code{"b"});
}

TEST_CASE("prefixify rewrites the suffix code {a, ab}") {
  prefixify_result r = prefixify(code{"a", "ab"});
  CHECK(r.result == code{"a", "ba"});
  REQUIRE(r.traces.size() == 2);
  code replayed;
  for (const auto& tr : r.traces) replayed = replay_trace(replayed, tr);
  CHECK(replayed == r.result);
}

TEST_CASE("prefixify rejects bad inputs") {
  CHECK_THROWS_AS(prefixify(code{}), std::invalid_argument);
  CHECK_THROWS_AS(prefixify(code{"a", "ab", "ba"}), std::invalid_argument);
}

TEST_CASE("prefixify preserves the profile over every small decodable code") {
  enumerate_codes(3, 3, code_filter::decodable, [](const code& c) {
    prefixify_result r = prefixify(c);
    CHECK(is_prefix_free(r.result));
    CHECK(power_profile(r.result) == power_profile(c));
    code replayed;
    for (const auto& tr : r.traces) replayed = replay_trace(replayed, tr);
    if (!r.traces.empty()) CHECK(replayed == r.result);
  });
}

TEST_CASE("prefixify handles the classic 16-word code") {
  const code c = builtin_code("shor");
  prefixify_result r = prefixify(c);
  CHECK(is_prefix_free(r.result));
  CHECK(power_profile(r.result) == power_profile(c));
  CHECK(sardinas_patterson(r.result).decodable);
  REQUIRE(r.traces.size() == 16);
  code replayed;
  for (const auto& tr : r.traces) replayed = replay_trace(replayed, tr);
  CHECK(replayed == r.result);

  // determinism pins for the recorded construction path: the fold visits the
  // words in a fixed order and step 16 is known to need the complete search
  CHECK(r.result.size() == 21);
  std::size_t fallbacks = 0;
  for (const auto& tr : r.traces) {
    for (const auto& act : tr.actions) {
      if (act.op == trace_action::kind::oracle_fallback) ++fallbacks;
    }
  }
  CHECK(fallbacks == 1);
}

TEST_CASE("prefixify_oracle on worked profiles") {
  std::optional<code> r1 =
      prefixify_oracle(length_profile({{1, mpz_class(2)}, {2, mpz_class(2)}}), {1, 2});
  REQUIRE(r1.has_value());
  CHECK(*r1 == code{"a", "ba"});

  std::optional<code> r2 = prefixify_oracle(length_profile({{1, mpz_class(1)}}), {1});
  REQUIRE(r2.has_value());
  CHECK(*r2 == code{"b"});

  CHECK_FALSE(prefixify_oracle(length_profile({{1, mpz_class(4)}}), {1}).has_value());
  CHECK(prefixify_oracle(length_profile(), {}) == code{});
}

TEST_CASE("prefixify_oracle validates its arguments") {
  CHECK_THROWS_AS(prefixify_oracle(length_profile({{1, mpz_class(1)}}), {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(prefixify_oracle(length_profile({{1, mpz_class(1)}}), {2}),
                  std::invalid_argument);
}

TEST_CASE("prefixify_oracle finds a code for every decodable profile") {
  enumerate_codes(3, 3, code_filter::decodable, [](const code& c) {
    const length_profile target = power_profile(c);
    std::optional<code> got = prefixify_oracle(target, target.lengths());
    REQUIRE(got.has_value());
    CHECK(is_prefix_free(*got));
    CHECK(power_profile(*got) == target);
  });
}

TEST_CASE("code_from_lengths produces the canonical code") {
  CHECK(code_from_lengths({1, 2, 2}) == code{"a", "ba", "bb"});
  CHECK(code_from_lengths({1, 1}) == code{"a", "b"});
  CHECK(code_from_lengths({2, 2, 2, 2}) == code{"aa", "ab", "ba", "bb"});
  CHECK(code_from_lengths({1, 3}) == code{"a", "baa"});
}

TEST_CASE("code_from_lengths rejects Kraft violations and bad lengths") {
  CHECK_THROWS_AS(code_from_lengths({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(code_from_lengths({1, 2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(code_from_lengths({}), std::invalid_argument);
  CHECK_THROWS_AS(code_from_lengths({0}), std::invalid_argument);
}
