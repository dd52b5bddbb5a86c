#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symcode/construct.hpp"
#include "symcode/correspondence.hpp"
#include "symcode/enumerate.hpp"
#include "symcode/trees.hpp"

using namespace symcode;

namespace {

tree make(std::set<std::string> verts) { return tree::from_vertices(std::move(verts)); }

}  // namespace

TEST_CASE("from_vertices validates the path set") {
  CHECK(make({""}).vertex_count() == 1);
  CHECK(make({"", "0", "1", "2"}).vertex_count() == 4);
  CHECK_THROWS_AS(make({}), std::invalid_argument);
  CHECK_THROWS_AS(make({"0"}), std::invalid_argument);          // missing root
  CHECK_THROWS_AS(make({"", "1"}), std::invalid_argument);      // skipped sibling 0
  CHECK_THROWS_AS(make({"", "0", "2"}), std::invalid_argument); // skipped sibling 1
  CHECK_THROWS_AS(make({"", "00"}), std::invalid_argument);     // orphan
  CHECK_THROWS_AS(make({"", "3"}), std::invalid_argument);      // branching > 3
  CHECK_THROWS_AS(make({"", "a"}), std::invalid_argument);      // bad character
}

TEST_CASE("invalid_reason explains, valid sets pass silently") {
  CHECK_FALSE(invalid_reason({"", "0"}).has_value());
  CHECK(invalid_reason({"0"}).has_value());
  CHECK(invalid_reason({"", "1"}).has_value());
}

TEST_CASE("child_count, is_leaf, depth") {
  tree t = make({"", "0", "1", "10"});
  CHECK(t.child_count("") == 2);
  CHECK(t.child_count("0") == 0);
  CHECK(t.is_leaf("0"));
  CHECK_FALSE(t.is_leaf(""));
  CHECK(t.depth() == 2);
  CHECK(tree{}.depth() == 0);
}

TEST_CASE("subtree re-roots") {
  tree t = make({"", "0", "1", "2", "20"});
  CHECK(subtree(t, "") == t);
  CHECK(subtree(t, "2") == make({"", "0"}));
  CHECK(subtree(t, "0") == tree{});
  CHECK_THROWS_AS(subtree(t, "9"), std::invalid_argument);
}

TEST_CASE("canonical forms of the smallest trees") {
  CHECK(canonical_form(tree{}) == "()");
  CHECK(canonical_form(make({"", "0"})) == "(())");
  CHECK(canonical_form(make({"", "0", "1"})) == "(()())");
}

TEST_CASE("canonical_form ignores child order") {
  // leaf-then-chain vs chain-then-leaf
  tree x = make({"", "0", "1", "10"});
  tree y = make({"", "0", "1", "00"});
  CHECK(x != y);
  CHECK(canonical_form(x) == canonical_form(y));
}

TEST_CASE("canonical_form equality is exactly brute-force isomorphism") {
  const auto all = oracles::all_ordered_trees(7);
  CHECK(all.size() == 162);
  std::vector<std::string> forms;
  forms.reserve(all.size());
  for (const auto& t : all) forms.push_back(canonical_form(t));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      CHECK((forms[i] == forms[j]) == oracles::isomorphic_brute(all[i], all[j]));
    }
  }
}

TEST_CASE("is_symmetric on hand-built trees") {
  CHECK(is_symmetric(tree{}));
  CHECK(is_symmetric(make({"", "0"})));
  CHECK(is_symmetric(make({"", "0", "1"})));
  CHECK_FALSE(is_symmetric(make({"", "0", "1", "10"})));  // pair leaf/chain not isomorphic
  CHECK(is_symmetric(make({"", "0", "1", "00", "10"})));
  CHECK(is_symmetric(make({"", "0", "1", "2"})));
  CHECK(is_symmetric(make({"", "0", "1", "2", "20"})));   // pair (0,1), odd child 2 a chain
  // three pairwise non-isomorphic children: leaf, chain, pair
  CHECK_FALSE(is_symmetric(make({"", "0", "1", "2", "10", "20", "21"})));
}

TEST_CASE("leaf_counts groups leaves by depth") {
  CHECK(leaf_counts(tree{}) == leaf_count_vector{{0, mpz_class(1)}});
  CHECK(leaf_counts(make({"", "0", "1"})) == leaf_count_vector{{1, mpz_class(2)}});
  CHECK(leaf_counts(make({"", "0", "1", "2", "20", "21"})) ==
        leaf_count_vector{{1, mpz_class(2)}, {2, mpz_class(2)}});
}

TEST_CASE("extend_to_depth grows leaves into full ternary subtrees") {
  CHECK(leaf_counts(extend_to_depth(tree{}, 2)) == leaf_count_vector{{2, mpz_class(9)}});
  CHECK(leaf_counts(extend_to_depth(make({"", "0"}), 2)) == leaf_count_vector{{2, mpz_class(3)}});
  tree deep = make({"", "0", "1"});
  CHECK(extend_to_depth(deep, 1) == deep);
  CHECK_THROWS_AS(extend_to_depth(deep, 0), std::invalid_argument);
}

TEST_CASE("extension multiplies each leaf class by a power of three") {
  for (const auto& t : enumerate_symmetric_trees(2)) {
    const std::size_t m = 3;
    leaf_count_vector grown = leaf_counts(extend_to_depth(t, m));
    REQUIRE(grown.size() == 1);
    mpz_class expected = 0;
    for (const auto& [k, n] : leaf_counts(t)) expected += n * pow3(m - k);
    CHECK(grown.at(m) == expected);
  }
}

TEST_CASE("classify_children splits pair and odd child") {
  auto roles = classify_children(make({"", "0", "1", "2", "20"}));
  REQUIRE(roles.at("").iso_pair.has_value());
  CHECK(*roles.at("").iso_pair == std::pair<int, int>{0, 1});
  CHECK(*roles.at("").solo == 2);
  CHECK(*roles.at("2").solo == 0);
  CHECK_FALSE(roles.at("2").iso_pair.has_value());

  auto triple = classify_children(make({"", "0", "1", "2"}));
  CHECK(*triple.at("").iso_pair == std::pair<int, int>{0, 1});
  CHECK(*triple.at("").solo == 2);

  // pair must take the two isomorphic children even when the odd one is first
  auto mixed = classify_children(make({"", "0", "1", "2", "00", "10", "11", "20", "21"}));
  CHECK(*mixed.at("").iso_pair == std::pair<int, int>{1, 2});
  CHECK(*mixed.at("").solo == 0);

  CHECK_THROWS_AS(classify_children(make({"", "0", "1", "10"})), std::invalid_argument);
}

TEST_CASE("complement_leaves on the worked examples") {
  // code {b}: root with one child; the free length-1 word is a
  CHECK(complement_leaves(make({"", "0"}), 1) == std::vector<word>{word("a")});
  // code {a}: root with the isomorphic pair; the free word is b
  CHECK(complement_leaves(make({"", "0", "1"}), 1) == std::vector<word>{word("b")});
  // a root leaf plays the empty word, whose extensions are all occupied
  CHECK(complement_leaves(tree{}, 2).empty());
  // code {a, ba}: only bb remains free at length 2
  CHECK(complement_leaves(make({"", "0", "1", "2", "20", "21"}), 2) ==
        std::vector<word>{word("bb")});
}

TEST_CASE("complement_leaves equals available_words through the correspondence") {
  enumerate_codes(3, 3, code_filter::prefix_free, [](const code& c) {
    const tree t = code_to_tree(c).shape;
    for (std::size_t m = c.max_length(); m <= c.max_length() + 1; ++m) {
      if (m == 0) continue;
      CHECK(complement_leaves(t, m) == available_words(c, m));
    }
  });
}

TEST_CASE("complement_leaves rejects misuse") {
  CHECK_THROWS_AS(complement_leaves(make({"", "0", "1", "10"}), 2), std::invalid_argument);
  CHECK_THROWS_AS(complement_leaves(make({"", "0", "1"}), 0), std::invalid_argument);
}
