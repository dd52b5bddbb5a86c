#include "symcode/decodability.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symcode {

namespace {

word concat(const std::vector<word>& ws) {
  word out;
  for (const auto& w : ws) out = out + w;
  return out;
}

// invariant: concat(left) == concat(right) + suffix, and left/right start
// with two distinct code words
struct derivation {
  std::vector<word> left;
  std::vector<word> right;
};

}  // namespace

bool ud_witness::validates(const code& c) const {
  if (left.empty() || right.empty() || left == right) return false;
  for (const auto& w : left) {
    if (!c.contains(w)) return false;
  }
  for (const auto& w : right) {
    if (!c.contains(w)) return false;
  }
  return !ambiguous.empty() && concat(left) == ambiguous && concat(right) == ambiguous;
}

ud_verdict sardinas_patterson(const code& c) {
  if (c.empty()) throw std::invalid_argument("sardinas_patterson: empty code");

  using level_map = std::map<word, derivation>;  // dangling suffix -> first derivation

  level_map current;
  for (const auto& shorter : c) {
    for (const auto& longer : c) {
      if (shorter.is_proper_prefix_of(longer)) {
        current.emplace(longer.suffix_from(shorter.size()), derivation{{longer}, {shorter}});
      }
    }
  }

  std::set<std::vector<word>> seen;
  while (!current.empty()) {
    // a dangling suffix that is itself a code word closes two factorizations
    for (const auto& [s, d] : current) {
      if (c.contains(s)) {
        ud_witness w;
        w.left = d.left;
        w.right = d.right;
        w.right.push_back(s);
        w.ambiguous = concat(w.left);
        return {false, std::move(w)};
      }
    }

    std::vector<word> key;
    key.reserve(current.size());
    for (const auto& [s, d] : current) key.push_back(s);
    if (!seen.insert(std::move(key)).second) break;  // suffix set repeats: no new danger

    level_map next;
    for (const auto& [s, d] : current) {
      for (const auto& cw : c) {
        if (s.is_proper_prefix_of(cw)) {
          // cw = s u: right + cw now overshoots left by u, so the roles swap
          derivation nd;
          nd.left = d.right;
          nd.left.push_back(cw);
          nd.right = d.left;
          next.emplace(cw.suffix_from(s.size()), std::move(nd));
        } else if (cw.is_proper_prefix_of(s)) {
          // s = cw u: right absorbs cw and still trails by u
          derivation nd;
          nd.left = d.left;
          nd.right = d.right;
          nd.right.push_back(cw);
          next.emplace(s.suffix_from(cw.size()), std::move(nd));
        }
      }
    }
    current = std::move(next);
  }
  return {true, std::nullopt};
}

std::size_t suffix_state_bound(const code& c) {
  if (c.empty()) throw std::invalid_argument("suffix_state_bound: empty code");
  std::set<word> suffixes;
  for (const auto& w : c) {
    for (std::size_t i = 1; i + 1 <= w.size(); ++i) suffixes.insert(w.suffix_from(i));
  }
  return (suffixes.size() + 1) * c.max_length();
}

namespace {

// deterministic automaton over {a, b} recognizing membership in C+, built by
// subset construction from word positions; every string maps to exactly one
// state, so path counting counts distinct strings
struct factor_dfa {
  std::vector<std::array<int, 2>> next;  // -1: dead
  std::vector<bool> accepting;
  int start = 0;
};

factor_dfa build_factor_dfa(const code& c) {
  // NFA states: 0 is the word boundary; each word w contributes positions
  // 1..|w|-1 numbered consecutively
  std::vector<const word*> ws;
  for (const auto& w : c.words()) ws.push_back(&w);
  std::vector<int> base(ws.size());
  int states = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    base[i] = states;
    states += static_cast<int>(ws[i]->size()) - 1;
  }

  auto nfa_step = [&](const std::set<int>& from, char ch) {
    std::set<int> to;
    auto advance = [&](std::size_t wi, std::size_t pos) {
      const word& w = *ws[wi];
      if (to_char(w.at(pos)) != ch) return;
      if (pos + 1 == w.size()) {
        to.insert(0);
      } else {
        to.insert(base[wi] + static_cast<int>(pos));
      }
    };
    for (int s : from) {
      if (s == 0) {
        for (std::size_t wi = 0; wi < ws.size(); ++wi) advance(wi, 0);
      } else {
        // find the word owning this position
        std::size_t wi = ws.size() - 1;
        while (base[wi] > s) --wi;
        advance(wi, static_cast<std::size_t>(s - base[wi]) + 1);
      }
    }
    return to;
  };

  factor_dfa dfa;
  std::map<std::set<int>, int> ids;
  std::vector<std::set<int>> todo;
  ids.emplace(std::set<int>{0}, 0);
  todo.push_back({0});
  dfa.next.push_back({-1, -1});
  dfa.accepting.push_back(true);  // start only matters for the empty string, never counted
  for (std::size_t qi = 0; qi < todo.size(); ++qi) {
    std::set<int> q = todo[qi];
    for (int si = 0; si < 2; ++si) {
      std::set<int> r = nfa_step(q, si == 0 ? 'a' : 'b');
      if (r.empty()) continue;
      auto [it, fresh] = ids.emplace(r, static_cast<int>(todo.size()));
      if (fresh) {
        todo.push_back(r);
        dfa.next.push_back({-1, -1});
        dfa.accepting.push_back(r.count(0) != 0);
      }
      dfa.next[qi][si] = it->second;
    }
  }
  return dfa;
}

}  // namespace

ud_verdict brute_force_ud(const code& c, std::size_t bound) {
  if (c.empty()) throw std::invalid_argument("brute_force_ud: empty code");
  if (bound < c.max_length()) {
    throw std::invalid_argument("brute_force_ud: bound below max word length");
  }

  // route 1: factorization sequences per total length
  std::vector<mpz_class> seq(bound + 1);
  seq[0] = 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const auto& w : c) {
      if (w.size() <= n) seq[n] += seq[n - w.size()];
    }
  }

  // route 2: distinct factorizable strings per length
  factor_dfa dfa = build_factor_dfa(c);
  std::vector<mpz_class> cnt(dfa.next.size());
  cnt[dfa.start] = 1;

  std::size_t mismatch = 0;
  bool found = false;
  for (std::size_t n = 1; n <= bound && !found; ++n) {
    std::vector<mpz_class> nxt(dfa.next.size());
    for (std::size_t s = 0; s < cnt.size(); ++s) {
      if (cnt[s] == 0) continue;
      for (int si = 0; si < 2; ++si) {
        int t = dfa.next[s][si];
        if (t >= 0) nxt[t] += cnt[s];
      }
    }
    cnt = std::move(nxt);
    mpz_class distinct = 0;
    for (std::size_t s = 0; s < cnt.size(); ++s) {
      if (dfa.accepting[s]) distinct += cnt[s];
    }
    // every factorizable string carries at least one sequence, so sequences
    // exceed strings exactly when some string factors twice
    if (seq[n] != distinct) {
      mismatch = n;
      found = true;
    }
  }
  if (!found) return {true, std::nullopt};

  // minimal ambiguous length found: enumerate every factorization sequence of
  // that total length and collect the collisions
  std::vector<char> reach(mismatch + 1, 0);
  reach[0] = 1;
  for (std::size_t r = 1; r <= mismatch; ++r) {
    for (const auto& w : c) {
      if (w.size() <= r && reach[r - w.size()]) reach[r] = 1;
    }
  }

  std::map<std::string, std::vector<word>> first_seen;
  std::map<std::string, std::pair<std::vector<word>, std::vector<word>>> collisions;
  std::string cur;
  std::vector<word> seq_words;
  std::function<void()> rec = [&]() {
    if (cur.size() == mismatch) {
      auto [it, fresh] = first_seen.emplace(cur, seq_words);
      if (!fresh && collisions.find(cur) == collisions.end()) {
        collisions.emplace(cur, std::make_pair(it->second, seq_words));
      }
      return;
    }
    if (!reach[mismatch - cur.size()]) return;
    for (const auto& w : c) {
      if (cur.size() + w.size() > mismatch) continue;
      cur += w.str();
      seq_words.push_back(w);
      rec();
      seq_words.pop_back();
      cur.resize(cur.size() - w.size());
    }
  };
  rec();

  if (collisions.empty()) {
    throw std::logic_error("brute_force_ud: counting mismatch without a collision");
  }
  const auto& [amb, facts] = *collisions.begin();  // lexicographically least
  ud_witness w;
  w.ambiguous = word(amb);
  w.left = facts.first;
  w.right = facts.second;
  return {false, std::move(w)};
}

}  // namespace symcode
