#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symcode/words.hpp"

namespace symcode {

// Two distinct factorizations of the same string into code words.
struct ud_witness {
  word ambiguous;
  std::vector<word> left;
  std::vector<word> right;

  // Both sides concatenate to `ambiguous`, differ as sequences, and use only
  // words of c.
  bool validates(const code& c) const;
};

struct ud_verdict {
  bool decodable = false;
  std::optional<ud_witness> witness;  // present iff not decodable
};

// pre: c nonempty
ud_verdict sardinas_patterson(const code& c);

// Exhaustive verdict over all strings of length <= bound. Returns the
// shortest witness when one exists within the bound (ties broken by the
// lexicographically least ambiguous string).
// pre: c nonempty, bound >= max word length
ud_verdict brute_force_ud(const code& c, std::size_t bound);

// (number of distinct nonempty proper suffixes of c-words + 1) * max word
// length: past this length the suffix process has cycled, so agreement up to
// it settles decodability outright.
std::size_t suffix_state_bound(const code& c);

}  // namespace symcode
