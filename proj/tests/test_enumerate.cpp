#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symcode/decodability.hpp"
#include "symcode/enumerate.hpp"
#include "symcode/metrics.hpp"

using namespace symcode;

TEST_CASE("filter parsing and names") {
  CHECK(parse_code_filter("all") == code_filter::all);
  CHECK(parse_code_filter("decodable") == code_filter::decodable);
  CHECK(parse_code_filter("prefix-free") == code_filter::prefix_free);
  CHECK_THROWS_AS(parse_code_filter("bogus"), std::invalid_argument);
  CHECK(filter_name(code_filter::decodable) == "decodable");
  CHECK(parse_code_filter(filter_name(code_filter::prefix_free)) == code_filter::prefix_free);
}

TEST_CASE("passes_filter matches the underlying predicates") {
  CHECK(passes_filter(code{"a", "ab"}, code_filter::all));
  CHECK(passes_filter(code{"a", "ab"}, code_filter::decodable));
  CHECK_FALSE(passes_filter(code{"a", "ab"}, code_filter::prefix_free));
  CHECK_FALSE(passes_filter(code{"a", "ab", "ba"}, code_filter::decodable));
  CHECK(passes_filter(code{"a", "ba"}, code_filter::prefix_free));
}

TEST_CASE("the universe vocabulary is every nonempty word in length-lex order") {
  code_universe u(2, 2);
  CHECK(u.vocabulary() == std::vector<word>{word("a"), word("b"), word("aa"), word("ab"),
                                            word("ba"), word("bb")});
}

TEST_CASE("subset_count adds the binomials") {
  CHECK(code_universe(2, 1).subset_count() == 2 + 1);       // C(2,1) + C(2,2)
  CHECK(code_universe(1, 1).subset_count() == 2);
  CHECK(code_universe(3, 2).subset_count() == 6 + 15 + 20);
  mpz_class expected = binomial(30, 1) + binomial(30, 2) + binomial(30, 3) + binomial(30, 4);
  CHECK(mpz_class(static_cast<unsigned long>(code_universe(4, 4).subset_count())) == expected);
}

TEST_CASE("subset_at visits each code once, in enumeration order") {
  code_universe u(3, 2);
  std::vector<code> by_rank;
  for (std::uint64_t i = 0; i < u.subset_count(); ++i) by_rank.push_back(u.subset_at(i));

  std::vector<code> streamed;
  enumerate_codes(3, 2, code_filter::all, [&](const code& c) { streamed.push_back(c); });

  CHECK(by_rank == streamed);
  std::set<std::string> distinct;
  for (const code& c : by_rank) {
    std::string key;
    for (const word& w : c) key += w.str() + ' ';
    CHECK(distinct.insert(key).second);
  }
  CHECK_THROWS_AS(u.subset_at(u.subset_count()), std::out_of_range);
}

TEST_CASE("enumerate_codes applies the filter and returns the count") {
  std::vector<code> pf;
  std::uint64_t n = enumerate_codes(2, 1, code_filter::prefix_free,
                                    [&](const code& c) { pf.push_back(c); });
  CHECK(n == 3);
  CHECK(pf == std::vector<code>{code{"a"}, code{"b"}, code{"a", "b"}});

  CHECK(enumerate_codes(1, 1, code_filter::all, [](const code&) {}) == 2);
  CHECK(enumerate_codes(1, 2, code_filter::all, [](const code&) {}) == 6);
}

TEST_CASE("decodable counts agree with a per-instance check") {
  std::uint64_t streamed = 0;
  std::uint64_t independent = 0;
  enumerate_codes(3, 2, code_filter::all, [&](const code& c) {
    if (brute_force_ud(c, suffix_state_bound(c) + c.max_length()).decodable) ++independent;
  });
  streamed = enumerate_codes(3, 2, code_filter::decodable, [](const code&) {});
  CHECK(streamed == independent);
  CHECK(streamed == 27);  // regression pin
}

TEST_CASE("enumerate_symmetric_trees hits the recursion counts") {
  for (std::size_t d = 0; d <= 3; ++d) {
    CHECK(enumerate_symmetric_trees(d).size() == oracles::count_symmetric_forms(d));
  }
  CHECK(enumerate_symmetric_trees(0).size() == 1);
  CHECK(enumerate_symmetric_trees(1).size() == 4);
  CHECK(enumerate_symmetric_trees(2).size() == 25);
  CHECK(enumerate_symmetric_trees(3).size() == 676);
}

TEST_CASE("enumerated trees are symmetric, within depth, pairwise non-isomorphic") {
  for (std::size_t d = 0; d <= 2; ++d) {
    std::set<std::string> forms;
    for (const auto& t : enumerate_symmetric_trees(d)) {
      CHECK(is_symmetric(t));
      CHECK(t.depth() <= d);
      CHECK(forms.insert(canonical_form(t)).second);
    }
  }
}

TEST_CASE("depth-1 symmetric trees are exactly the four shapes") {
  std::set<std::string> forms;
  for (const auto& t : enumerate_symmetric_trees(1)) forms.insert(canonical_form(t));
  CHECK(forms == std::set<std::string>{"()", "(())", "(()())", "(()()())"});
}
