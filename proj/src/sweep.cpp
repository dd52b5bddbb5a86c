#include "symcode/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symcode/construct.hpp"
#include "symcode/correspondence.hpp"
#include "symcode/decodability.hpp"
#include "symcode/metrics.hpp"
#include "symcode/trees.hpp"

namespace symcode {

namespace {

std::string instance_str(const code& c) {
  std::string out;
  for (const auto& w : c) {
    if (!out.empty()) out += ' ';
    out += w.str();
  }
  return out;
}

unsigned long long small_weight(std::size_t count_a) {
  if (count_a > 62) throw std::invalid_argument("recheck route supports word lengths up to 62");
  return 1ULL << count_a;
}

// ---- primary routes ----

std::optional<std::string> check_kraft(const code& c) {
  mpq_class k = kraft_sum(c);
  if (k <= 1) return std::nullopt;
  return "kraft_sum " + rational_str(k) + " exceeds 1";
}

std::optional<std::string> check_lemma1(const code& c) {
  mpq_class t = weighted_ternary_sum(c);
  if (t > 1) return "weighted_ternary_sum " + rational_str(t) + " exceeds 1";
  return check_kraft(c);
}

std::optional<std::string> check_theorem1(const code& c) {
  labeled_tree lt = code_to_tree(c);
  if (!is_symmetric(lt.shape)) return "fanned-out tree is not symmetric";
  leaf_count_vector lc = leaf_counts(lt.shape);
  length_profile prof = power_profile(c);
  if (lc != prof.entries()) {
    return "leaf counts disagree with the power profile";
  }
  code back = tree_to_code(lt.shape);
  if (!(back == c)) return "projection does not return the original code";
  return std::nullopt;
}

std::optional<std::string> check_theorem2(const code& c) {
  try {
    prefixify_result res = prefixify(c);
    if (!is_prefix_free(res.result)) return "result is not prefix-free";
    if (!(power_profile(res.result) == power_profile(c))) {
      return "result profile " + power_profile(res.result).str() + " differs from " +
             power_profile(c).str();
    }
    return std::nullopt;
  } catch (const construct_failure& e) {
    return std::string("construction failed: ") + e.what();
  }
}

std::optional<std::string> check_sp_vs_brute(const code& c) {
  ud_verdict sp = sardinas_patterson(c);
  ud_verdict bf = brute_force_ud(c, suffix_state_bound(c));
  if (sp.decodable != bf.decodable) {
    return std::string("verdicts disagree: sardinas_patterson says ") +
           (sp.decodable ? "decodable" : "ambiguous") + ", brute force says " +
           (bf.decodable ? "decodable" : "ambiguous");
  }
  if (!sp.decodable) {
    if (!sp.witness || !sp.witness->validates(c)) return "sardinas_patterson witness invalid";
    if (!bf.witness || !bf.witness->validates(c)) return "brute force witness invalid";
  }
  return std::nullopt;
}

// ---- independent recheck routes ----

std::optional<std::string> recheck_kraft(const code& c) {
  // integer arithmetic only: sum of 2^(lmax - |w|) against 2^lmax
  std::size_t lmax = c.max_length();
  mpz_class scaled = 0;
  for (const auto& w : c) scaled += pow2(lmax - w.size());
  if (scaled > pow2(lmax)) return "scaled Kraft numerator exceeds the unit bound";
  return std::nullopt;
}

std::optional<std::string> recheck_lemma1(const code& c) {
  std::size_t lmax = c.max_length();
  mpz_class scaled = 0;
  for (const auto& w : c) scaled += pow3(lmax - w.size()) * pow2(w.count_a());
  if (scaled > pow3(lmax)) return "scaled ternary numerator exceeds the unit bound";
  return recheck_kraft(c);
}

std::optional<std::string> recheck_theorem1(const code& c) {
  // explicit sign lift: every a picks one of two signs, so a word of length k
  // contributes 2^(count of a) distinct alphabet paths of length k
  std::set<std::string> paths;
  for (const auto& w : c) {
    std::size_t na = w.count_a();
    if (na > 62) throw std::invalid_argument("recheck route supports up to 62 a's per word");
    for (unsigned long long mask = 0; mask < (1ULL << na); ++mask) {
      std::string p;
      std::size_t ai = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.at(i) == symbol::a) {
          p += ((mask >> ai) & 1ULL) ? '-' : '+';
          ++ai;
        } else {
          p += 'b';
        }
      }
      for (std::size_t l = 1; l <= p.size(); ++l) paths.insert(p.substr(0, l));
    }
  }

  std::set<std::string> verts = {""};
  std::function<void(const std::string&, const std::string&)> conv =
      [&](const std::string& ap, const std::string& ip) {
        int idx = 0;
        for (char ch : {'+', '-', 'b'}) {
          std::string child = ap + ch;
          if (paths.count(child) != 0) {
            std::string cip = ip + static_cast<char>('0' + idx);
            verts.insert(cip);
            conv(child, cip);
            ++idx;
          }
        }
      };
  conv("", "");
  tree lift = tree::from_vertices(std::move(verts));

  labeled_tree produced = code_to_tree(c);
  if (canonical_form(lift) != canonical_form(produced.shape)) {
    return "sign lift is not isomorphic to the fanned-out tree";
  }

  std::map<std::size_t, unsigned long long> expect;
  for (const auto& w : c) expect[w.size()] += small_weight(w.count_a());
  leaf_count_vector lc = leaf_counts(lift);
  if (lc.size() != expect.size()) return "lift leaf depths differ from word lengths";
  for (const auto& [k, n] : expect) {
    auto it = lc.find(k);
    if (it == lc.end() || it->second != mpz_class(static_cast<unsigned long>(n))) {
      return "lift leaf count at depth " + std::to_string(k) + " differs";
    }
  }

  if (!(tree_to_code(lift) == c)) return "projection of the lift differs from the code";
  return std::nullopt;
}

std::optional<std::string> recheck_theorem2(const code& c) {
  try {
    prefixify_result res = prefixify(c);
    const code& r = res.result;
    for (const auto& x : r) {
      for (const auto& y : r) {
        if (!(x == y) && x.is_prefix_of(y)) {
          return "prefix pair " + x.str() + " < " + y.str() + " in the result";
        }
      }
    }
    std::map<std::size_t, unsigned long long> want, got;
    for (const auto& w : c) want[w.size()] += small_weight(w.count_a());
    for (const auto& w : r) got[w.size()] += small_weight(w.count_a());
    if (want != got) return "machine-integer profiles disagree";
    return std::nullopt;
  } catch (const construct_failure& e) {
    return std::string("construction failed on recheck: ") + e.what();
  }
}

std::optional<std::string> recheck_sp_vs_brute(const code& c) {
  ud_verdict sp = sardinas_patterson(c);
  ud_verdict bf = brute_force_ud(c, suffix_state_bound(c) + c.max_length());
  if (sp.decodable != bf.decodable) return "verdicts disagree beyond the settled bound";
  if (!sp.decodable) {
    if (!sp.witness || !sp.witness->validates(c)) return "sardinas_patterson witness invalid";
    if (!bf.witness || !bf.witness->validates(c)) return "brute force witness invalid";
  }
  return std::nullopt;
}

struct property_impl {
  code_filter filter;
  std::optional<std::string> (*check)(const code&);
  std::optional<std::string> (*recheck)(const code&);
};

property_impl impl_for(sweep_property p) {
  switch (p) {
    case sweep_property::kraft_forward:
      return {code_filter::decodable, check_kraft, recheck_kraft};
    case sweep_property::lemma1:
      return {code_filter::decodable, check_lemma1, recheck_lemma1};
    case sweep_property::theorem1_roundtrip:
      return {code_filter::prefix_free, check_theorem1, recheck_theorem1};
    case sweep_property::theorem2:
      return {code_filter::decodable, check_theorem2, recheck_theorem2};
    case sweep_property::sp_vs_bruteforce:
      return {code_filter::all, check_sp_vs_brute, recheck_sp_vs_brute};
  }
  throw std::logic_error("impl_for: bad property");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// visits every universe subset in order, independent of subset_at's unranking
void odometer_walk(std::size_t max_words, std::size_t max_len,
                   const std::function<void(std::uint64_t, const code&)>& visit) {
  code_universe uni(1, max_len);  // reuse the vocabulary construction only
  const std::vector<word>& vocab = uni.vocabulary();
  std::size_t n = vocab.size();
  std::uint64_t index = 0;
  for (std::size_t s = 1; s <= std::min(max_words, n); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      code c;
      for (std::size_t i : idx) c.insert(vocab[i]);
      visit(index++, c);
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == n - (s - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

sweep_report run_impl(sweep_property p, std::size_t max_words, std::size_t max_len,
                      const sweep_options& opts, bool use_parallel) {
  property_impl impl = impl_for(p);
  code_universe uni(max_words, max_len);
  const std::uint64_t total = uni.subset_count();

  sweep_report rep;
  rep.property = std::string(property_name(p));
  rep.max_words = max_words;
  rep.max_len = max_len;
  rep.candidates = total;

  auto t0 = std::chrono::steady_clock::now();

  std::vector<sweep_failure> fails;
  std::uint64_t checked = 0;

#ifdef _OPENMP
  if (use_parallel) {
#pragma omp parallel
    {
      std::vector<sweep_failure> local;
      std::uint64_t local_checked = 0;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long i = 0; i < static_cast<long long>(total); ++i) {
        code c = uni.subset_at(static_cast<std::uint64_t>(i));
        if (!passes_filter(c, impl.filter)) continue;
        ++local_checked;
        if (auto f = impl.check(c)) {
          local.push_back({static_cast<std::uint64_t>(i), instance_str(c), *f, false});
        }
      }
#pragma omp critical
      {
        checked += local_checked;
        fails.insert(fails.end(), local.begin(), local.end());
      }
    }
  } else
#endif
  {
    (void)use_parallel;
    odometer_walk(max_words, max_len, [&](std::uint64_t i, const code& c) {
      if (!passes_filter(c, impl.filter)) return;
      ++checked;
      if (auto f = impl.check(c)) fails.push_back({i, instance_str(c), *f, false});
    });
  }

  std::sort(fails.begin(), fails.end(),
            [](const sweep_failure& x, const sweep_failure& y) { return x.index < y.index; });

  // deterministic sample through the independent route
  std::uint64_t rechecked = 0;
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(opts.recheck_fraction * 10000.0 + 0.5);
  std::vector<sweep_failure> recheck_fails;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (splitmix64(opts.recheck_seed ^ i) % 10000 >= threshold) continue;
    code c = uni.subset_at(i);
    if (!passes_filter(c, impl.filter)) continue;
    ++rechecked;
    if (auto f = impl.recheck(c)) recheck_fails.push_back({i, instance_str(c), *f, true});
  }
  fails.insert(fails.end(), recheck_fails.begin(), recheck_fails.end());

  rep.checked = checked;
  rep.rechecked = rechecked;
  rep.failures = std::move(fails);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

sweep_property parse_sweep_property(std::string_view name) {
  if (name == "kraft_forward") return sweep_property::kraft_forward;
  if (name == "lemma1") return sweep_property::lemma1;
  if (name == "theorem1_roundtrip") return sweep_property::theorem1_roundtrip;
  if (name == "theorem2") return sweep_property::theorem2;
  if (name == "sp_vs_bruteforce") return sweep_property::sp_vs_bruteforce;
  throw std::invalid_argument("unknown sweep property '" + std::string(name) + "'");
}

std::string_view property_name(sweep_property p) {
  switch (p) {
    case sweep_property::kraft_forward: return "kraft_forward";
    case sweep_property::lemma1: return "lemma1";
    case sweep_property::theorem1_roundtrip: return "theorem1_roundtrip";
    case sweep_property::theorem2: return "theorem2";
    case sweep_property::sp_vs_bruteforce: return "sp_vs_bruteforce";
  }
  throw std::logic_error("property_name: bad property");
}

code_filter property_filter(sweep_property p) { return impl_for(p).filter; }

sweep_report run_sweep(sweep_property p, std::size_t max_words, std::size_t max_len,
                       const sweep_options& opts) {
  return run_impl(p, max_words, max_len, opts, opts.parallel);
}

sweep_report run_sweep_serial(sweep_property p, std::size_t max_words, std::size_t max_len,
                              const sweep_options& opts) {
  return run_impl(p, max_words, max_len, opts, false);
}

}  // namespace symcode
