#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcode/metrics.hpp"
#include "symcode/words.hpp"

namespace symcode {

using exponent_multiset = std::multiset<std::size_t>;

// Exact power-of-two selection: a sub-multiset of `exponents` whose powers of
// two sum to exactly 2^target. Greedy from the largest exponent down; the
// remainder always stays a multiple of the next power considered, so the
// greedy cannot strand itself.
// pre: every element <= target; the total sum >= 2^target
exponent_multiset subset_sum_exact(const exponent_multiset& exponents, std::size_t target);

// w_m(j): how many code words of length m carry exactly j a's
class occupancy_table {
public:
  static occupancy_table of_code(const code& c);

  std::size_t at(std::size_t m, std::size_t j) const;
  const std::map<std::size_t, std::map<std::size_t, std::size_t>>& rows() const { return rows_; }

private:
  std::map<std::size_t, std::map<std::size_t, std::size_t>> rows_;
};

// Length-len binary words with no code-word prefix, sorted lexicographically.
// pre: is_prefix_free(d); max word length of d <= len
std::vector<word> available_words(const code& d, std::size_t len);

struct trace_action {
  enum class kind { add_b_run, subset_sum, missing_word_extension, vacancy_shift, oracle_fallback };
  kind op{};
  std::size_t m = 0;                   // class length (extension and shift actions)
  std::size_t j = 0;                   // class a-count
  std::vector<word> added;
  std::vector<word> removed;
  std::vector<std::size_t> exponents;  // subset_sum selection
};

std::string_view trace_action_name(trace_action::kind k);

struct step_trace {
  std::size_t length = 0;    // M
  std::size_t exponent = 0;  // e
  std::vector<trace_action> actions;
};

// Applies a recorded step to the code it was recorded against.
code replay_trace(const code& pre, const step_trace& trace);

struct construct_failure : std::runtime_error {
  explicit construct_failure(const std::string& what, step_trace trace = {})
      : std::runtime_error(what), trace(std::move(trace)) {}
  step_trace trace;
};

struct step_result {
  code result;
  step_trace trace;
};

// One fold step: grow d so the power profile gains exactly 2^exponent at key
// `length` while staying prefix-free. Falls back to a complete search when
// the direct moves cannot finish; throws construct_failure when no prefix-free
// code realizes the target profile at all.
// pre: is_prefix_free(d); max word length of d <= length; exponent <= length
step_result add_word_step(const code& d, std::size_t exponent, std::size_t length);

struct prefixify_result {
  code result;
  std::vector<step_trace> traces;
};

// Folds the words of c in (length, lex) order through add_word_step, starting
// from the empty code: the result is prefix-free with the same power profile.
// Prefix-free inputs come back unchanged.
// pre: c uniquely decodable (checked; rejected otherwise)
prefixify_result prefixify(const code& c);

// Complete backtracking search for a prefix-free code realizing the target
// profile. Availability of a word class depends only on how many words of
// each shorter class were chosen, so searching over per-class counts and
// realizing them with lexicographically least words loses no solutions.
// Returns the first solution in that fixed order, or nullopt.
// pre: lengths equals the key set of target
std::optional<code> prefixify_oracle(const length_profile& target,
                                     const std::set<std::size_t>& lengths);

// Lexicographically canonical prefix-free code with the given word lengths.
// pre: lengths nonempty, all positive, Kraft sum <= 1
code code_from_lengths(const std::multiset<std::size_t>& lengths);

}  // namespace symcode
