#include "symcode/construct.hpp"

#include <algorithm>
#include <functional>

#include "symcode/decodability.hpp"

namespace symcode {

namespace {

// Collects the lexicographically least `limit` words of length len that avoid
// every chosen prefix and extend into no chosen word; a_count, when set,
// constrains the number of a's.
std::size_t collect_free_words(const code& d, std::size_t len, std::optional<std::size_t> a_count,
                               std::size_t limit, std::vector<word>& out) {
  if ((a_count && *a_count > len) || limit == 0) return 0;
  std::size_t found = 0;
  std::string cur;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t a_left) -> bool {
    if (pos == len) {
      word u(cur);
      auto it = d.words().lower_bound(u);
      if (it != d.words().end() && u.is_prefix_of(*it)) return false;  // u extends into d
      out.push_back(std::move(u));
      return ++found == limit;
    }
    std::size_t rem = len - pos;
    for (char ch : {'a', 'b'}) {
      if (a_count) {
        if (ch == 'a' && a_left == 0) continue;
        if (ch == 'b' && a_left == rem) continue;  // all remaining slots owe an a
      }
      cur.push_back(ch);
      if (!d.contains(word(cur)) && rec(pos + 1, ch == 'a' && a_count ? a_left - 1 : a_left)) {
        return true;
      }
      cur.pop_back();
    }
    return false;
  };
  rec(0, a_count.value_or(0));
  return found;
}

std::optional<word> least_free_word(const code& d, std::size_t len,
                                    std::optional<std::size_t> a_count) {
  std::vector<word> out;
  if (collect_free_words(d, len, a_count, 1, out) == 0) return std::nullopt;
  return out.front();
}

std::optional<word> least_missing_slot_free(const code& d, std::size_t m, std::size_t j) {
  return least_free_word(d, m, j);
}

bool postcondition_holds(const code& before, const code& after, std::size_t e, std::size_t M) {
  if (!is_prefix_free(after)) return false;
  length_profile want = power_profile(before);
  want.add(M, pow2(e));
  return power_profile(after) == want;
}

std::set<std::size_t> lengths_of(const code& c) {
  std::set<std::size_t> out;
  for (const auto& w : c) out.insert(w.size());
  return out;
}

// the window of shorter-class exponents j at length m that can be padded out
// to an (e, M) word: u a^(e-j) b^(M-m-(e-j)) needs e-j <= M-m and j <= min(m, e)
std::optional<std::pair<std::size_t, std::size_t>> shift_window(std::size_t m, std::size_t e,
                                                                std::size_t M) {
  std::size_t hi = std::min(m, e);
  std::size_t lo = (e > M - m) ? e - (M - m) : 0;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

void extend_missing(code& c, std::size_t m, std::size_t j, std::size_t e, std::size_t M,
                    const word& u, std::vector<trace_action>& into) {
  word added = u + word::repeated(symbol::a, e - j) + word::repeated(symbol::b, (M - m) - (e - j));
  c.insert(added);
  trace_action act;
  act.op = trace_action::kind::missing_word_extension;
  act.m = m;
  act.j = j;
  act.added = {added};
  into.push_back(act);
}

// cases that follow the direct construction; returns false when they cannot
// finish and the complete fallback must take over
bool direct_step(const code& d, const std::vector<word>& avail, std::size_t e, std::size_t M,
                code& out, std::vector<trace_action>& acts) {
  // case 1: a zero-exponent word is a pure b run
  if (e == 0) {
    word target = word::repeated(symbol::b, M);
    if (!std::binary_search(avail.begin(), avail.end(), target)) return false;
    out = d;
    out.insert(target);
    trace_action act;
    act.op = trace_action::kind::add_b_run;
    act.added = {target};
    acts.push_back(act);
    return true;
  }

  // case 2: every free word fits under the target exponent, so an exact
  // selection of free words adds up to 2^e
  std::size_t max_exp = 0;
  for (const auto& w : avail) max_exp = std::max(max_exp, w.count_a());
  if (max_exp <= e) {
    exponent_multiset exps;
    for (const auto& w : avail) exps.insert(w.count_a());
    exponent_multiset chosen = subset_sum_exact(exps, e);
    std::map<std::size_t, std::size_t> need;
    for (std::size_t x : chosen) need[x]++;
    trace_action act;
    act.op = trace_action::kind::subset_sum;
    act.exponents.assign(chosen.begin(), chosen.end());
    out = d;
    for (const auto& w : avail) {
      auto it = need.find(w.count_a());
      if (it != need.end() && it->second > 0) {
        out.insert(w);
        act.added.push_back(w);
        --it->second;
      }
    }
    for (const auto& [exp, left] : need) {
      if (left != 0) throw std::logic_error("add_word_step: selection outran the free classes");
    }
    acts.push_back(act);
    return true;
  }

  // case 3: extend a missing shorter word; if every in-window class is full,
  // walk a higher vacancy down by trading two words of the class below for
  // one word of the class above (the length-m profile share is unchanged:
  // 2 * 2^(j-1) = 2^j)
  code work = d;
  occupancy_table occ = occupancy_table::of_code(work);

  for (std::size_t m : lengths_of(work)) {
    auto win = shift_window(m, e, M);
    if (!win) continue;
    for (std::size_t j = win->second + 1; j-- > win->first;) {
      if (mpz_class(static_cast<unsigned long>(occ.at(m, j))) >= binomial(m, j)) continue;
      if (auto u = least_missing_slot_free(work, m, j)) {
        extend_missing(work, m, j, e, M, *u, acts);
        out = work;
        return true;
      }
    }
  }

  mpz_class shift_cap = 0;
  for (std::size_t m : lengths_of(work)) shift_cap += pow2(m);
  std::size_t shifts_done = 0;

  for (std::size_t m : lengths_of(work)) {
    auto win = shift_window(m, e, M);
    if (!win) continue;
    std::size_t e_top = win->second;
    for (std::size_t j_start = e_top + 1; j_start <= m; ++j_start) {
      if (mpz_class(static_cast<unsigned long>(occ.at(m, j_start))) >= binomial(m, j_start)) {
        continue;
      }
      if (!least_missing_slot_free(work, m, j_start)) continue;

      code scratch = work;
      std::vector<trace_action> chain;
      bool good = true;
      for (std::size_t level = j_start; level > e_top && good; --level) {
        std::vector<word> row;
        for (const auto& w : scratch) {
          if (w.size() == m && w.count_a() == level - 1) row.push_back(w);
        }
        if (row.size() < 2) {
          good = false;
          break;
        }
        word del_lo = row[row.size() - 2];
        word del_hi = row[row.size() - 1];
        scratch.erase(del_lo);
        scratch.erase(del_hi);
        auto u = least_missing_slot_free(scratch, m, level);
        if (!u) {
          good = false;
          break;
        }
        scratch.insert(*u);
        trace_action act;
        act.op = trace_action::kind::vacancy_shift;
        act.m = m;
        act.j = level;
        act.removed = {del_lo, del_hi};
        act.added = {*u};
        chain.push_back(act);
        if (mpz_class(static_cast<unsigned long>(++shifts_done)) > shift_cap) {
          good = false;
          break;
        }
      }
      if (!good) continue;
      auto u = least_missing_slot_free(scratch, m, e_top);
      if (!u) continue;  // the chain's last trade freed this class, but stay defensive
      extend_missing(scratch, m, e_top, e, M, *u, chain);
      for (const auto& act : chain) acts.push_back(act);
      out = scratch;
      return true;
    }
  }
  return false;
}

}  // namespace

exponent_multiset subset_sum_exact(const exponent_multiset& exponents, std::size_t target) {
  mpz_class goal = pow2(target);
  mpz_class total = 0;
  for (std::size_t n : exponents) {
    if (n > target) {
      throw std::invalid_argument("subset_sum_exact: element 2^" + std::to_string(n) +
                                  " exceeds target 2^" + std::to_string(target));
    }
    total += pow2(n);
  }
  if (total < goal) {
    throw std::invalid_argument("subset_sum_exact: total " + total.get_str() +
                                " below target 2^" + std::to_string(target));
  }

  exponent_multiset chosen;
  mpz_class sum = 0;
  for (auto it = exponents.rbegin(); it != exponents.rend() && sum < goal; ++it) {
    if (sum + pow2(*it) <= goal) {
      sum += pow2(*it);
      chosen.insert(*it);
    }
  }
  if (sum != goal) {
    throw std::logic_error("subset_sum_exact: greedy missed an attainable target");
  }
  return chosen;
}

occupancy_table occupancy_table::of_code(const code& c) {
  occupancy_table t;
  for (const auto& w : c) t.rows_[w.size()][w.count_a()]++;
  return t;
}

std::size_t occupancy_table::at(std::size_t m, std::size_t j) const {
  auto it = rows_.find(m);
  if (it == rows_.end()) return 0;
  auto jt = it->second.find(j);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<word> available_words(const code& d, std::size_t len) {
  if (!is_prefix_free(d)) throw std::invalid_argument("available_words: code is not prefix-free");
  if (d.max_length() > len) {
    throw std::invalid_argument("available_words: length below max word length");
  }
  std::vector<word> out;
  std::string cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == len) {
      out.push_back(word(cur));
      return;
    }
    for (char ch : {'a', 'b'}) {
      cur.push_back(ch);
      if (!d.contains(word(cur))) rec();  // a prefix in d occupies the whole subcube
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::string_view trace_action_name(trace_action::kind k) {
  switch (k) {
    case trace_action::kind::add_b_run: return "add_b_run";
    case trace_action::kind::subset_sum: return "subset_sum";
    case trace_action::kind::missing_word_extension: return "missing_word_extension";
    case trace_action::kind::vacancy_shift: return "vacancy_shift";
    case trace_action::kind::oracle_fallback: return "oracle_fallback";
  }
  throw std::logic_error("trace_action_name: bad kind");
}

code replay_trace(const code& pre, const step_trace& trace) {
  code cur = pre;
  for (const auto& act : trace.actions) {
    for (const auto& w : act.removed) cur.erase(w);
    for (const auto& w : act.added) cur.insert(w);
  }
  return cur;
}

step_result add_word_step(const code& d, std::size_t exponent, std::size_t length) {
  if (!is_prefix_free(d)) throw std::invalid_argument("add_word_step: code is not prefix-free");
  if (d.max_length() > length) {
    throw std::invalid_argument("add_word_step: length below max word length");
  }
  if (exponent > length) throw std::invalid_argument("add_word_step: exponent exceeds length");

  step_trace trace;
  trace.length = length;
  trace.exponent = exponent;

  std::vector<word> avail = available_words(d, length);

  // Free weight at the target depth depends only on the profile of d; for a
  // uniquely decodable source it always covers the incoming word.
  mpz_class budget = 0;
  for (const auto& w : avail) budget += pow2(w.count_a());
  if (budget < pow2(exponent)) {
    throw construct_failure("add_word_step: free weight " + budget.get_str() + " at length " +
                                std::to_string(length) + " cannot cover 2^" +
                                std::to_string(exponent),
                            trace);
  }

  code result;
  std::vector<trace_action> acts;
  bool ok = direct_step(d, avail, exponent, length, result, acts) &&
            postcondition_holds(d, result, exponent, length);

  if (ok) {
    trace.actions = std::move(acts);
    return {std::move(result), std::move(trace)};
  }

  // complete fallback: re-solve the whole profile from scratch
  length_profile target = power_profile(d);
  target.add(length, pow2(exponent));
  auto sol = prefixify_oracle(target, target.lengths());
  if (!sol) {
    throw construct_failure(
        "add_word_step: no prefix-free code realizes profile " + target.str(), trace);
  }
  trace_action act;
  act.op = trace_action::kind::oracle_fallback;
  act.removed.assign(d.begin(), d.end());
  act.added.assign(sol->begin(), sol->end());
  trace.actions.push_back(std::move(act));
  result = *sol;
  if (!postcondition_holds(d, result, exponent, length)) {
    throw construct_failure("add_word_step: fallback result violates the step contract", trace);
  }
  return {std::move(result), std::move(trace)};
}

prefixify_result prefixify(const code& c) {
  if (c.empty()) throw std::invalid_argument("prefixify: empty code");
  ud_verdict verdict = sardinas_patterson(c);
  if (!verdict.decodable) {
    throw std::invalid_argument("prefixify: code is not uniquely decodable");
  }
  if (is_prefix_free(c)) return {c, {}};

  prefixify_result out;
  for (const auto& w : sorted_by_length(c)) {
    step_result step = add_word_step(out.result, w.count_a(), w.size());
    out.result = std::move(step.result);
    out.traces.push_back(std::move(step.trace));
  }
  return out;
}

std::optional<code> prefixify_oracle(const length_profile& target,
                                     const std::set<std::size_t>& lengths) {
  if (target.lengths() != lengths) {
    throw std::invalid_argument("prefixify_oracle: lengths must equal the profile keys");
  }
  for (std::size_t k : lengths) {
    if (k == 0) throw std::invalid_argument("prefixify_oracle: zero length");
  }
  if (lengths.empty()) return code{};

  std::vector<std::size_t> levels(lengths.begin(), lengths.end());
  code picked;

  // counted availability of class (k, j) under the chosen words: the blocked
  // subcubes of distinct chosen words are disjoint because picked stays
  // prefix-free
  auto avail_count = [&picked](std::size_t k, std::size_t j) {
    mpz_class n = binomial(k, j);
    for (const auto& u : picked) {
      if (u.size() <= k && j >= u.count_a()) {
        n -= binomial(k - u.size(), j - u.count_a());
      }
    }
    return n;
  };

  auto realize_class = [&picked](std::size_t k, std::size_t j, std::size_t n,
                                 std::vector<word>& into) {
    std::vector<word> got;
    if (collect_free_words(picked, k, j, n, got) != n) {
      throw std::logic_error("prefixify_oracle: counted class ran dry");
    }
    for (const auto& w : got) {
      picked.insert(w);
      into.push_back(w);
    }
  };

  std::function<bool(std::size_t)> solve = [&](std::size_t li) -> bool {
    if (li == levels.size()) return true;
    std::size_t k = levels[li];

    std::vector<mpz_class> av(k + 1);
    for (std::size_t j = 0; j <= k; ++j) av[j] = avail_count(k, j);
    std::vector<mpz_class> lowsum(k + 2);
    for (std::size_t j = 0; j <= k; ++j) lowsum[j + 1] = lowsum[j] + av[j] * pow2(j);

    std::vector<std::size_t> counts(k + 1, 0);

    std::function<bool(int, const mpz_class&)> pick = [&](int j, const mpz_class& rem) -> bool {
      if (j < 0) {
        if (rem != 0) return false;
        std::vector<word> added;
        for (std::size_t jj = k + 1; jj-- > 0;) {
          if (counts[jj] > 0) realize_class(k, jj, counts[jj], added);
        }
        if (solve(li + 1)) return true;
        for (const auto& w : added) picked.erase(w);
        return false;
      }
      mpz_class nmax = rem / pow2(static_cast<std::size_t>(j));
      if (nmax > av[j]) nmax = av[j];
      for (mpz_class n = nmax; n >= 0; --n) {
        mpz_class rem2 = rem - n * pow2(static_cast<std::size_t>(j));
        if (rem2 > lowsum[j]) break;  // shrinking n only widens the gap
        if (!n.fits_ulong_p()) {
          throw std::logic_error("prefixify_oracle: class count exceeds machine range");
        }
        counts[j] = n.get_ui();
        if (pick(j - 1, rem2)) return true;
      }
      counts[j] = 0;
      return false;
    };

    return pick(static_cast<int>(k), target.at(k));
  };

  if (!solve(0)) return std::nullopt;
  return picked;
}

code code_from_lengths(const std::multiset<std::size_t>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("code_from_lengths: empty length multiset");
  std::size_t lmax = *lengths.rbegin();
  mpz_class scaled = 0;
  for (std::size_t l : lengths) {
    if (l == 0) throw std::invalid_argument("code_from_lengths: zero length");
    scaled += pow2(lmax - l);
  }
  if (scaled > pow2(lmax)) {
    throw std::invalid_argument("code_from_lengths: Kraft sum exceeds 1");
  }

  code out;
  for (std::size_t l : lengths) {
    auto w = least_free_word(out, l, std::nullopt);
    if (!w) throw std::logic_error("code_from_lengths: no free word despite the Kraft bound");
    out.insert(*w);
  }
  return out;
}

}  // namespace symcode
