#include "symcode/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "symcode/metrics.hpp"

namespace symcode {

namespace {

// canonical form of every subtree, computed bottom-up
std::map<std::string, std::string> all_forms(const tree& t) {
  std::vector<const std::string*> order;
  order.reserve(t.vertex_count());
  for (const auto& v : t.vertices()) order.push_back(&v);
  std::sort(order.begin(), order.end(),
            [](const std::string* x, const std::string* y) { return x->size() > y->size(); });

  std::map<std::string, std::string> form;
  for (const std::string* v : order) {
    std::vector<std::string> child_forms;
    for (std::size_t i = 0, n = t.child_count(*v); i < n; ++i) {
      child_forms.push_back(form.at(*v + static_cast<char>('0' + i)));
    }
    std::sort(child_forms.begin(), child_forms.end());
    std::string f = "(";
    for (const auto& cf : child_forms) f += cf;
    f += ")";
    form.emplace(*v, std::move(f));
  }
  return form;
}

child_roles roles_from_forms(const tree& t, const std::string& v,
                             const std::map<std::string, std::string>& form) {
  std::size_t n = t.child_count(v);
  child_roles r;
  auto f = [&](int i) -> const std::string& { return form.at(v + static_cast<char>('0' + i)); };
  if (n == 1) {
    r.solo = 0;
  } else if (n == 2) {
    if (f(0) != f(1)) {
      throw std::invalid_argument("tree is not symmetric: vertex \"" + v +
                                  "\" has two non-isomorphic children");
    }
    r.iso_pair = {0, 1};
  } else if (n == 3) {
    if (f(0) == f(1)) {
      r.iso_pair = {0, 1};
      r.solo = 2;
    } else if (f(0) == f(2)) {
      r.iso_pair = {0, 2};
      r.solo = 1;
    } else if (f(1) == f(2)) {
      r.iso_pair = {1, 2};
      r.solo = 0;
    } else {
      throw std::invalid_argument("tree is not symmetric: vertex \"" + v +
                                  "\" has three pairwise non-isomorphic children");
    }
  }
  return r;
}

}  // namespace

tree tree::from_vertices(std::set<std::string> verts) {
  if (auto why = invalid_reason(verts)) throw std::invalid_argument("tree: " + *why);
  tree t;
  t.verts_ = std::move(verts);
  return t;
}

std::size_t tree::depth() const {
  std::size_t d = 0;
  for (const auto& v : verts_) d = std::max(d, v.size());
  return d;
}

std::optional<std::string> invalid_reason(const std::set<std::string>& verts) {
  if (verts.count("") == 0) return "missing root (empty path)";
  for (const auto& v : verts) {
    if (v.empty()) continue;
    char last = v.back();
    if (last != '0' && last != '1' && last != '2') {
      return "path \"" + v + "\" uses a child index outside 0..2";
    }
    std::string parent = v.substr(0, v.size() - 1);
    if (verts.count(parent) == 0) return "path \"" + v + "\" has no parent";
    // children are numbered consecutively from 0
    if (last != '0' && verts.count(parent + static_cast<char>(last - 1)) == 0) {
      return "path \"" + v + "\" skips a sibling index";
    }
  }
  return std::nullopt;
}

tree subtree(const tree& t, const std::string& v) {
  if (!t.contains(v)) throw std::invalid_argument("subtree: no vertex \"" + v + "\"");
  std::set<std::string> verts;
  for (const auto& u : t.vertices()) {
    if (u.size() >= v.size() && u.compare(0, v.size(), v) == 0) {
      verts.insert(u.substr(v.size()));
    }
  }
  return tree::from_vertices(std::move(verts));
}

std::string canonical_form(const tree& t) { return all_forms(t).at(""); }

bool is_symmetric(const tree& t) {
  auto form = all_forms(t);
  for (const auto& v : t.vertices()) {
    std::size_t n = t.child_count(v);
    if (n < 2) continue;
    auto f = [&](int i) -> const std::string& { return form.at(v + static_cast<char>('0' + i)); };
    if (n == 2 && f(0) != f(1)) return false;
    if (n == 3 && f(0) != f(1) && f(0) != f(2) && f(1) != f(2)) return false;
  }
  return true;
}

leaf_count_vector leaf_counts(const tree& t) {
  leaf_count_vector out;
  for (const auto& v : t.vertices()) {
    if (t.is_leaf(v)) out[v.size()] += 1;
  }
  return out;
}

tree extend_to_depth(const tree& t, std::size_t m) {
  if (t.depth() > m) throw std::invalid_argument("extend_to_depth: tree deeper than target");
  std::set<std::string> verts = t.vertices();
  std::function<void(const std::string&, std::size_t)> grow = [&](const std::string& v,
                                                                  std::size_t remaining) {
    if (remaining == 0) return;
    for (char c : {'0', '1', '2'}) {
      verts.insert(v + c);
      grow(v + c, remaining - 1);
    }
  };
  for (const auto& v : t.vertices()) {
    if (t.is_leaf(v)) grow(v, m - v.size());
  }
  return tree::from_vertices(std::move(verts));
}

std::map<std::string, child_roles> classify_children(const tree& t) {
  auto form = all_forms(t);
  std::map<std::string, child_roles> out;
  for (const auto& v : t.vertices()) {
    if (!t.is_leaf(v)) out.emplace(v, roles_from_forms(t, v, form));
  }
  return out;
}

std::vector<word> complement_leaves(const tree& t, std::size_t m) {
  if (t.depth() > m) throw std::invalid_argument("complement_leaves: tree deeper than target");
  auto roles = classify_children(t);

  std::vector<word> out;
  std::string prefix;

  std::function<void(std::size_t)> emit_all = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(word(prefix));
      return;
    }
    for (char c : {'a', 'b'}) {
      prefix.push_back(c);
      emit_all(remaining - 1);
      prefix.pop_back();
    }
  };

  std::function<void(const std::string&)> walk = [&](const std::string& v) {
    if (t.is_leaf(v)) return;  // a code word ends here: every extension is occupied
    // an internal vertex at depth m would contradict depth(t) <= m
    const child_roles& r = roles.at(v);
    for (char c : {'a', 'b'}) {
      std::optional<int> next =
          (c == 'a') ? (r.iso_pair ? std::optional<int>(r.iso_pair->first) : std::nullopt)
                     : r.solo;
      prefix.push_back(c);
      if (next) {
        walk(v + static_cast<char>('0' + *next));
      } else {
        emit_all(m - prefix.size());  // fell off the tree: the whole subcube is free
      }
      prefix.pop_back();
    }
  };
  walk("");

  // cross-check against the extension identity: the free weight at depth m is
  // what full ternary growth of the complement would contribute
  mpz_class free_weight = 0;
  for (const auto& w : out) free_weight += pow2(w.count_a());
  mpz_class expected = pow3(m);
  for (const auto& [k, n] : leaf_counts(t)) expected -= n * pow3(m - k);
  if (free_weight != expected) {
    throw std::logic_error("complement_leaves: free weight " + free_weight.get_str() +
                           " disagrees with leaf-count identity " + expected.get_str());
  }
  return out;  // lexicographic: the walk tries 'a' before 'b' at every depth
}

}  // namespace symcode
