#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symcode/words.hpp"

namespace symcode {

// Rooted tree with branching factor <= 3, stored as the prefix-closed set of
// child-index paths over {'0','1','2'}; the root is the empty path. Children
// of a vertex are numbered consecutively from 0.
class tree {
public:
  tree() : verts_{""} {}

  static tree from_vertices(std::set<std::string> verts);

  bool contains(const std::string& v) const { return verts_.count(v) != 0; }
  std::size_t vertex_count() const { return verts_.size(); }

  std::size_t child_count(const std::string& v) const {
    std::size_t n = 0;
    while (n < 3 && contains(v + static_cast<char>('0' + n))) ++n;
    return n;
  }
  bool is_leaf(const std::string& v) const { return !contains(v + '0'); }

  std::size_t depth() const;

  const std::set<std::string>& vertices() const { return verts_; }

  bool operator==(const tree&) const = default;

private:
  std::set<std::string> verts_;
};

// why-invalid message, or nullopt when verts is a valid vertex set
std::optional<std::string> invalid_reason(const std::set<std::string>& verts);

// the subtree rooted at v, re-rooted (v becomes the empty path)
tree subtree(const tree& t, const std::string& v);

// AHU form: "(" + child forms in sorted order + ")"; equal forms mean
// isomorphic trees
std::string canonical_form(const tree& t);

// every vertex with exactly 2 children has isomorphic child subtrees, and
// every vertex with 3 children has at least one isomorphic pair among them
bool is_symmetric(const tree& t);

using leaf_count_vector = std::map<std::size_t, mpz_class>;  // depth -> count

leaf_count_vector leaf_counts(const tree& t);

// grows every leaf of depth < m into a full ternary subtree reaching depth m
// pre: depth(t) <= m
tree extend_to_depth(const tree& t, std::size_t m);

// Per-vertex split of the children into the isomorphic pair and the odd one
// out. One child is the odd one; two children are the pair; with three
// pairwise-isomorphic children the pair takes the two smallest indices.
// Throws std::invalid_argument when the tree is not symmetric.
struct child_roles {
  std::optional<std::pair<int, int>> iso_pair;
  std::optional<int> solo;
};
std::map<std::string, child_roles> classify_children(const tree& t);

// Binary words of length m whose walk down t (an 'a' follows one of the pair
// branches, a 'b' follows the odd branch) falls off the tree before standing
// on a leaf: when t encodes a prefix-free code these are exactly the length-m
// words with no code-word prefix. Sorted lexicographically.
// pre: is_symmetric(t), depth(t) <= m
std::vector<word> complement_leaves(const tree& t, std::size_t m);

}  // namespace symcode
