#include "symcode/metrics.hpp"

#include <sstream>
#include <stdexcept>

namespace symcode {

mpz_class pow2(std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

mpz_class pow3(std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return r;
}

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_prefix_free(const code& c) {
  // In lexicographic order a prefix is immediately followed by its least
  // extension, so adjacent pairs suffice.
  const word* prev = nullptr;
  for (const auto& w : c) {
    if (prev != nullptr && prev->is_proper_prefix_of(w)) return false;
    prev = &w;
  }
  return true;
}

mpq_class kraft_sum(const code& c) {
  mpq_class sum = 0;
  for (const auto& w : c) {
    mpq_class term(1, 1);
    term /= mpq_class(pow2(w.size()));
    sum += term;
  }
  return sum;
}

mpq_class weighted_ternary_sum(const code& c) {
  mpq_class sum = 0;
  for (const auto& w : c) {
    mpq_class term(pow2(w.count_a()));
    term /= mpq_class(pow3(w.size()));
    sum += term;
  }
  return sum;
}

std::string rational_str(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();  // raw (num, den) constructions arrive unreduced
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

length_profile::length_profile(std::map<std::size_t, mpz_class> entries)
    : entries_(std::move(entries)) {
  for (const auto& [k, v] : entries_) {
    if (v <= 0) throw std::invalid_argument("length_profile: entry for length " +
                                            std::to_string(k) + " must be positive");
  }
}

void length_profile::add(std::size_t length, const mpz_class& amount) {
  if (amount <= 0) throw std::invalid_argument("length_profile: amount must be positive");
  entries_[length] += amount;
}

mpz_class length_profile::at(std::size_t length) const {
  auto it = entries_.find(length);
  return it == entries_.end() ? mpz_class(0) : it->second;
}

mpz_class length_profile::total() const {
  mpz_class t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

std::set<std::size_t> length_profile::lengths() const {
  std::set<std::size_t> out;
  for (const auto& [k, v] : entries_) out.insert(k);
  return out;
}

std::string length_profile::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << k << ": " << v.get_str();
  }
  os << "}";
  return os.str();
}

length_profile power_profile(const code& c) {
  length_profile p;
  for (const auto& w : c) p.add(w.size(), pow2(w.count_a()));
  return p;
}

std::multiset<parikh_pair> parikh_signature(const code& c) {
  std::multiset<parikh_pair> sig;
  for (const auto& w : c) sig.insert({w.count_a(), w.count(symbol::b)});
  return sig;
}

bool commutatively_equivalent(const code& c1, const code& c2) {
  return parikh_signature(c1) == parikh_signature(c2);
}

code builtin_code(std::string_view name) {
  if (name == "shor") {
    // 16 words: three b-positions interleaved with runs of a.
    auto add_family = [](code& c, std::size_t head, std::initializer_list<std::size_t> tails) {
      for (std::size_t t : tails) {
        c.insert(word::repeated(symbol::a, head) + word::repeated(symbol::b, 1) +
                 word::repeated(symbol::a, t));
      }
    };
    code c;
    add_family(c, 0, {0, 1, 7, 13, 14});
    add_family(c, 3, {0, 2, 4, 6});
    add_family(c, 8, {0, 2, 4, 6});
    add_family(c, 11, {0, 1, 2});
    return c;
  }
  throw std::invalid_argument("builtin_code: unknown name '" + std::string(name) + "'");
}

}  // namespace symcode
