#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcode {

enum class symbol : char { a = 'a', b = 'b' };

constexpr char to_char(symbol s) { return static_cast<char>(s); }

// A finite word over {a, b}. Comparison is plain string comparison, which is
// the tie-break order used everywhere: a < b, and a proper prefix sorts
// before its extensions.
class word {
public:
  word() = default;

  explicit word(std::string_view text) : text_(text) {
    for (char ch : text_) {
      if (ch != 'a' && ch != 'b') {
        throw std::invalid_argument(std::string("word: invalid symbol '") + ch + "'");
      }
    }
  }

  static word repeated(symbol s, std::size_t n) {
    word w;
    w.text_.assign(n, to_char(s));
    return w;
  }

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }

  symbol at(std::size_t i) const { return static_cast<symbol>(text_.at(i)); }

  std::size_t count(symbol s) const {
    return static_cast<std::size_t>(std::count(text_.begin(), text_.end(), to_char(s)));
  }
  std::size_t count_a() const { return count(symbol::a); }

  // Includes equality.
  bool is_prefix_of(const word& w) const {
    return text_.size() <= w.text_.size() && w.text_.compare(0, text_.size(), text_) == 0;
  }
  bool is_proper_prefix_of(const word& w) const {
    return text_.size() < w.text_.size() && is_prefix_of(w);
  }

  word prefix(std::size_t len) const {
    word w;
    w.text_ = text_.substr(0, len);
    return w;
  }
  word suffix_from(std::size_t pos) const {
    word w;
    w.text_ = text_.substr(pos);
    return w;
  }

  word operator+(const word& rhs) const {
    word w;
    w.text_ = text_ + rhs.text_;
    return w;
  }
  word operator+(symbol s) const {
    word w;
    w.text_ = text_ + to_char(s);
    return w;
  }

  const std::string& str() const { return text_; }

  auto operator<=>(const word&) const = default;

private:
  std::string text_;
};

inline std::size_t count_occurrences(const word& w, symbol s) { return w.count(s); }

// (length, lex) key: the processing order of the prefixification fold and of
// enumeration universes.
struct by_length_then_lex {
  bool operator()(const word& x, const word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// A finite set of distinct nonempty words. The empty code is a legal value
// (construction folds grow codes from nothing); operations that need a
// nonempty code check that themselves.
class code {
public:
  code() = default;

  code(std::initializer_list<std::string_view> ws) {
    for (auto s : ws) insert(word(s));
  }

  explicit code(const std::set<word>& ws) {
    for (const auto& w : ws) insert(w);
  }

  void insert(const word& w) {
    if (w.empty()) throw std::invalid_argument("code: empty word not allowed");
    if (!words_.insert(w).second) {
      throw std::invalid_argument("code: duplicate word " + w.str());
    }
  }

  void erase(const word& w) {
    if (words_.erase(w) == 0) {
      throw std::invalid_argument("code: cannot erase absent word " + w.str());
    }
  }

  bool contains(const word& w) const { return words_.count(w) != 0; }

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& w : words_) m = std::max(m, w.size());
    return m;
  }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }
  const std::set<word>& words() const { return words_; }

  bool operator==(const code&) const = default;

private:
  std::set<word> words_;  // lexicographic order
};

inline std::vector<word> sorted_by_length(const code& c) {
  std::vector<word> out(c.begin(), c.end());
  std::stable_sort(out.begin(), out.end(), by_length_then_lex{});
  return out;
}

}  // namespace symcode
