#include "symcode/correspondence.hpp"

#include <functional>
#include <stdexcept>

#include "symcode/metrics.hpp"

namespace symcode {

symbol project(ternary_symbol s) {
  return s == ternary_symbol::b ? symbol::b : symbol::a;
}

word project(const std::vector<ternary_symbol>& w) {
  word out;
  for (ternary_symbol s : w) out = out + project(s);
  return out;
}

std::string ternary_str(ternary_symbol s) {
  switch (s) {
    case ternary_symbol::a: return "a";
    case ternary_symbol::a_inv: return "a-";
    case ternary_symbol::b: return "b";
  }
  throw std::logic_error("ternary_str: bad symbol");
}

labeled_tree code_to_tree(const code& c) {
  if (!is_prefix_free(c)) throw std::invalid_argument("code_to_tree: code is not prefix-free");

  std::set<std::string> verts;
  std::map<std::string, ternary_symbol> labels;

  // p is live when it is a prefix of some code word; the least word >= p in
  // lexicographic order is then an extension of p
  auto live = [&c](const word& p) {
    auto it = c.words().lower_bound(p);
    return it != c.words().end() && p.is_prefix_of(*it);
  };

  std::function<void(const std::string&, const word&)> build = [&](const std::string& v,
                                                                   const word& prefix) {
    verts.insert(v);
    word pa = prefix + symbol::a;
    word pb = prefix + symbol::b;
    char next = '0';
    if (live(pa)) {
      labels.emplace(v + '0', ternary_symbol::a);
      build(v + '0', pa);
      labels.emplace(v + '1', ternary_symbol::a_inv);
      build(v + '1', pa);
      next = '2';
    }
    if (live(pb)) {
      labels.emplace(v + next, ternary_symbol::b);
      build(v + next, pb);
    }
  };
  build("", word());

  return {tree::from_vertices(std::move(verts)), std::move(labels)};
}

code tree_to_code(const tree& t) {
  if (t.vertex_count() < 2) {
    throw std::invalid_argument("tree_to_code: tree must have at least 2 vertices");
  }
  auto roles = classify_children(t);  // throws when not symmetric

  std::set<word> words;
  std::function<void(const std::string&, const word&)> walk = [&](const std::string& v,
                                                                  const word& w) {
    if (t.is_leaf(v)) {
      words.insert(w);  // the pair branches project to the same word
      return;
    }
    const child_roles& r = roles.at(v);
    if (r.iso_pair) {
      walk(v + static_cast<char>('0' + r.iso_pair->first), w + symbol::a);
      walk(v + static_cast<char>('0' + r.iso_pair->second), w + symbol::a);
    }
    if (r.solo) {
      walk(v + static_cast<char>('0' + *r.solo), w + symbol::b);
    }
  };
  walk("", word());

  return code(words);
}

}  // namespace symcode
