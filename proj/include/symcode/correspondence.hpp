#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcode/trees.hpp"
#include "symcode/words.hpp"

namespace symcode {

enum class ternary_symbol { a, a_inv, b };

symbol project(ternary_symbol s);                        // a, a_inv -> a; b -> b
word project(const std::vector<ternary_symbol>& w);
std::string ternary_str(ternary_symbol s);               // "a", "a-", "b"

struct labeled_tree {
  tree shape;
  std::map<std::string, ternary_symbol> labels;  // every vertex except the root
};

// Fans each code word out into its sign lifts: an 'a' branches into an a and
// an a_inv child, a 'b' adds a single b child. Leaves at depth k number
// sum over length-k words of 2^(count of a).
// pre: is_prefix_free(c); the empty code gives the single-vertex tree
labeled_tree code_to_tree(const code& c);

// Inverse direction: labels the isomorphic pair a/a_inv and the odd child b,
// then projects root-to-leaf label paths.
// pre: is_symmetric(t), t has at least 2 vertices
code tree_to_code(const tree& t);

}  // namespace symcode
