#include "symcode/enumerate.hpp"

#include <stdexcept>

#include "symcode/decodability.hpp"
#include "symcode/metrics.hpp"

namespace symcode {

namespace {

std::vector<word> vocabulary_words(std::size_t max_len) {
  std::vector<word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> level = {""};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> next;
      for (const auto& s : level) {
        next.push_back(s + 'a');
        next.push_back(s + 'b');
      }
      level = std::move(next);
    }
    for (const auto& s : level) out.push_back(word(s));
  }
  return out;  // (length, lex) order by construction
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::invalid_argument("code_universe: subset count overflows 64 bits");
  }
  return r;
}

}  // namespace

code_filter parse_code_filter(std::string_view name) {
  if (name == "all") return code_filter::all;
  if (name == "decodable") return code_filter::decodable;
  if (name == "prefix-free") return code_filter::prefix_free;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

std::string_view filter_name(code_filter f) {
  switch (f) {
    case code_filter::all: return "all";
    case code_filter::decodable: return "decodable";
    case code_filter::prefix_free: return "prefix-free";
  }
  throw std::logic_error("filter_name: bad filter");
}

bool passes_filter(const code& c, code_filter f) {
  switch (f) {
    case code_filter::all: return true;
    case code_filter::decodable: return sardinas_patterson(c).decodable;
    case code_filter::prefix_free: return is_prefix_free(c);
  }
  throw std::logic_error("passes_filter: bad filter");
}

code_universe::code_universe(std::size_t max_words, std::size_t max_len) {
  if (max_words == 0 || max_len == 0) {
    throw std::invalid_argument("code_universe: bounds must be positive");
  }
  vocab_ = vocabulary_words(max_len);
  max_words_ = std::min(max_words, vocab_.size());

  std::size_t n = vocab_.size();
  pascal_.assign(n + 1, std::vector<std::uint64_t>(max_words_ + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    pascal_[i][0] = 1;
    for (std::size_t k = 1; k <= max_words_ && k <= i; ++k) {
      pascal_[i][k] = checked_add(pascal_[i - 1][k - 1], i >= 1 ? pascal_[i - 1][k] : 0);
    }
  }

  offsets_.assign(max_words_ + 1, 0);
  for (std::size_t s = 1; s <= max_words_; ++s) {
    offsets_[s - 1] = total_;
    total_ = checked_add(total_, choose(n, s));
  }
  offsets_[max_words_] = total_;
}

std::uint64_t code_universe::choose(std::size_t n, std::size_t k) const {
  if (k > max_words_ || n >= pascal_.size()) throw std::logic_error("choose: out of table");
  return k > n ? 0 : pascal_[n][k];
}

code code_universe::subset_at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("subset_at: index beyond the universe");
  std::size_t s = 1;
  while (index >= offsets_[s]) ++s;
  std::uint64_t rank = index - offsets_[s - 1];

  // lexicographic combination unranking over vocabulary positions
  std::size_t n = vocab_.size();
  code out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t remaining = s - i;
    while (true) {
      std::uint64_t block = choose(n - next - 1, remaining - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    out.insert(vocab_[next]);
    ++next;
  }
  return out;
}

std::uint64_t enumerate_codes(std::size_t max_words, std::size_t max_len, code_filter f,
                              const std::function<void(const code&)>& yield) {
  std::vector<word> vocab = vocabulary_words(max_len);
  std::size_t n = vocab.size();
  std::uint64_t count = 0;
  for (std::size_t s = 1; s <= std::min(max_words, n); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      code c;
      for (std::size_t i : idx) c.insert(vocab[i]);
      if (passes_filter(c, f)) {
        ++count;
        yield(c);
      }
      // advance the combination odometer
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == n - (s - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return count;
}

std::vector<tree> enumerate_symmetric_trees(std::size_t max_depth) {
  auto attach = [](std::set<std::string>& verts, char index, const tree& child) {
    std::string root(1, index);
    verts.insert(root);
    for (const auto& v : child.vertices()) verts.insert(root + v);
  };

  std::vector<tree> cur = {tree{}};
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<tree> next = {tree{}};
    for (const auto& t : cur) {  // one child: the odd branch alone
      std::set<std::string> verts = {""};
      attach(verts, '0', t);
      next.push_back(tree::from_vertices(std::move(verts)));
    }
    for (const auto& t : cur) {  // the isomorphic pair alone
      std::set<std::string> verts = {""};
      attach(verts, '0', t);
      attach(verts, '1', t);
      next.push_back(tree::from_vertices(std::move(verts)));
    }
    for (const auto& t : cur) {  // pair plus odd branch, pair first
      for (const auto& s : cur) {
        std::set<std::string> verts = {""};
        attach(verts, '0', t);
        attach(verts, '1', t);
        attach(verts, '2', s);
        next.push_back(tree::from_vertices(std::move(verts)));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace symcode
