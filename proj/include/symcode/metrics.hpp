#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "symcode/words.hpp"

namespace symcode {

mpz_class pow2(std::size_t e);
mpz_class pow3(std::size_t e);
mpz_class binomial(std::size_t n, std::size_t k);

bool is_prefix_free(const code& c);

// sum over words of 2^-|w|, exact
mpq_class kraft_sum(const code& c);

// sum over words of 3^-|w| * 2^(count of a), exact
mpq_class weighted_ternary_sum(const code& c);

// "n/d", or just "n" when d == 1
std::string rational_str(const mpq_class& q);

// P_k = sum over words of length k of 2^(count of a). Keys are exactly the
// lengths present; values are positive.
class length_profile {
public:
  length_profile() = default;
  explicit length_profile(std::map<std::size_t, mpz_class> entries);

  void add(std::size_t length, const mpz_class& amount);

  const std::map<std::size_t, mpz_class>& entries() const { return entries_; }
  mpz_class at(std::size_t length) const;  // 0 when absent
  mpz_class total() const;

  std::set<std::size_t> lengths() const;
  std::string str() const;  // "{1: 2, 2: 3}"

  bool operator==(const length_profile&) const = default;

private:
  std::map<std::size_t, mpz_class> entries_;
};

length_profile power_profile(const code& c);

using parikh_pair = std::pair<std::size_t, std::size_t>;  // (count of a, count of b)
std::multiset<parikh_pair> parikh_signature(const code& c);
bool commutatively_equivalent(const code& c1, const code& c2);

code builtin_code(std::string_view name);  // recognizes "shor"

}  // namespace symcode
