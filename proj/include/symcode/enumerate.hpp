#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "symcode/trees.hpp"
#include "symcode/words.hpp"

namespace symcode {

enum class code_filter { all, decodable, prefix_free };

code_filter parse_code_filter(std::string_view name);  // "all" | "decodable" | "prefix-free"
std::string_view filter_name(code_filter f);
bool passes_filter(const code& c, code_filter f);

// Deterministic universe of candidate codes: the nonempty subsets of at most
// max_words words drawn from the 2^(max_len+1) - 2 nonempty words of length
// <= max_len, ordered by subset size and then by lexicographic combination
// rank over the (length, lex) word order. Random access by index lets sweeps
// split the range across threads.
class code_universe {
public:
  code_universe(std::size_t max_words, std::size_t max_len);

  std::uint64_t subset_count() const { return total_; }
  code subset_at(std::uint64_t index) const;
  const std::vector<word>& vocabulary() const { return vocab_; }

private:
  std::uint64_t choose(std::size_t n, std::size_t k) const;

  std::vector<word> vocab_;
  std::vector<std::vector<std::uint64_t>> pascal_;
  std::vector<std::uint64_t> offsets_;  // offsets_[s]: first index of the size-(s+1) block
  std::size_t max_words_ = 0;
  std::uint64_t total_ = 0;
};

// Streams filtered codes in universe order through `yield`; returns the count
// yielded. Iterates with a plain combination odometer, independently of
// code_universe's unranking.
std::uint64_t enumerate_codes(std::size_t max_words, std::size_t max_len, code_filter f,
                              const std::function<void(const code&)>& yield);

// One tree per symmetric canonical form of depth <= max_depth, deterministic
// order, each form exactly once.
std::vector<tree> enumerate_symmetric_trees(std::size_t max_depth);

}  // namespace symcode
