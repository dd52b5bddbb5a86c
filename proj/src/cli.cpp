#include "symcode/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "symcode/construct.hpp"
#include "symcode/correspondence.hpp"
#include "symcode/decodability.hpp"
#include "symcode/io.hpp"
#include "symcode/metrics.hpp"
#include "symcode/sweep.hpp"

namespace symcode {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct code_input {
  std::string file;
  std::string builtin;

  code load() const {
    if (!builtin.empty()) return builtin_code(builtin);
    return load_code_file(file);
  }
};

void attach_code_input(CLI::App* cmd, code_input& in) {
  auto* file = cmd->add_option("file", in.file, "code file, one word per line");
  auto* builtin = cmd->add_option("--builtin", in.builtin, "named built-in code (shor)");
  file->excludes(builtin);
  builtin->excludes(file);
}

void require_code_input(const code_input& in) {
  if (in.file.empty() && in.builtin.empty()) {
    throw CLI::ValidationError("input", "give a code file or --builtin NAME");
  }
}

std::string witness_lines(const ud_witness& w) {
  auto join = [](const std::vector<word>& ws) {
    std::string s;
    for (const auto& x : ws) {
      if (!s.empty()) s += " . ";
      s += x.str();
    }
    return s;
  };
  return "ambiguous string: " + w.ambiguous.str() + "\n  factorization 1: " + join(w.left) +
         "\n  factorization 2: " + join(w.right) + "\n";
}

int cmd_check(const code_input& in, std::ostream& out) {
  code c = in.load();
  out << "words: " << c.size() << "\n";
  out << "max length: " << c.max_length() << "\n";
  out << "prefix-free: " << (is_prefix_free(c) ? "yes" : "no") << "\n";
  out << "kraft_sum: " << rational_str(kraft_sum(c)) << "\n";
  out << "weighted_ternary_sum: " << rational_str(weighted_ternary_sum(c)) << "\n";
  out << "power_profile: " << power_profile(c).str() << "\n";
  ud_verdict v = sardinas_patterson(c);
  out << "uniquely decodable: " << (v.decodable ? "yes" : "no") << "\n";
  if (!v.decodable) {
    out << witness_lines(*v.witness);
    return exit_failed;
  }
  return exit_ok;
}

int cmd_tree(const std::string& file, const std::string& format, std::ostream& out,
             std::ostream& err) {
  code c = load_code_file(file);
  if (!is_prefix_free(c)) {
    err << "error: code is not prefix-free; only prefix-free codes fan out to a tree\n";
    return exit_failed;
  }
  labeled_tree lt = code_to_tree(c);
  if (format == "json") {
    out << tree_to_json(lt).dump(2) << "\n";
  } else {
    out << export_dot(lt);
  }
  return exit_ok;
}

int cmd_to_code(const std::string& file, std::ostream& out, std::ostream& err) {
  std::ifstream f(file);
  if (!f) throw parse_error("cannot open " + file);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  tree t = tree_from_json(j);
  code c;
  try {
    c = tree_to_code(t);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  out << format_code(c);
  return exit_ok;
}

int cmd_prefixify(const code_input& in, const std::string& trace_file, bool verify,
                  std::ostream& out, std::ostream& err) {
  code c = in.load();
  ud_verdict v = sardinas_patterson(c);
  if (!v.decodable) {
    err << "error: code is not uniquely decodable\n" << witness_lines(*v.witness);
    return exit_failed;
  }

  prefixify_result res;
  try {
    res = prefixify(c);
  } catch (const construct_failure& e) {
    err << "error: construction failed: " << e.what() << "\n";
    return exit_failed;
  }

  if (!trace_file.empty()) {
    std::ofstream tf(trace_file);
    if (!tf) throw parse_error("cannot open " + trace_file + " for writing");
    tf << trace_jsonl(res.traces);
  }

  out << "# prefixify: input " << c.size() << " words, output " << res.result.size()
      << " words\n";
  out << format_code(res.result);
  out << "# power_profile: " << power_profile(res.result).str() << "\n";

  if (verify) {
    bool pf = is_prefix_free(res.result);
    bool same_profile = power_profile(res.result) == power_profile(c);
    bool replay_ok = true;
    if (!is_prefix_free(c)) {  // identity results carry no trace to replay
      code replayed;
      for (const auto& t : res.traces) replayed = replay_trace(replayed, t);
      replay_ok = replayed == res.result;
    }
    out << "# verify prefix-free: " << (pf ? "pass" : "FAIL") << "\n";
    out << "# verify profile preserved: " << (same_profile ? "pass" : "FAIL") << "\n";
    out << "# verify trace replay: " << (replay_ok ? "pass" : "FAIL") << "\n";
    if (!pf || !same_profile || !replay_ok) return exit_failed;
  }
  return exit_ok;
}

int cmd_enumerate(std::size_t max_words, std::size_t max_len, const std::string& filter,
                  bool count_only, std::ostream& out) {
  code_filter f = parse_code_filter(filter);
  std::uint64_t n = enumerate_codes(max_words, max_len, f, [&](const code& c) {
    if (count_only) return;
    std::string line;
    for (const auto& w : c) {
      if (!line.empty()) line += ' ';
      line += w.str();
    }
    out << line << "\n";
  });
  if (count_only) out << n << "\n";
  return exit_ok;
}

int cmd_sweep(const std::string& property, std::size_t max_words, std::size_t max_len,
              bool serial, std::ostream& out) {
  sweep_property p = parse_sweep_property(property);
  sweep_report rep = serial ? run_sweep_serial(p, max_words, max_len)
                            : run_sweep(p, max_words, max_len);
  out << sweep_report_json(rep).dump(2) << "\n";
  return rep.passed() ? exit_ok : exit_failed;
}

int cmd_subset_sum(std::size_t target, const std::string& exponents_csv, std::ostream& out,
                   std::ostream& err) {
  exponent_multiset exps;
  std::stringstream ss(exponents_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--exponents", "expected a comma-separated list of integers");
    }
    if (pos != item.size()) {
      throw CLI::ValidationError("--exponents", "expected a comma-separated list of integers");
    }
    exps.insert(static_cast<std::size_t>(v));
  }
  if (exps.empty()) {
    throw CLI::ValidationError("--exponents", "expected at least one exponent");
  }

  exponent_multiset chosen;
  try {
    chosen = subset_sum_exact(exps, target);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  std::string line;
  for (std::size_t x : chosen) {
    if (!line.empty()) line += ',';
    line += std::to_string(x);
  }
  out << "selected exponents: " << line << "\n";
  mpz_class sum = 0;
  for (std::size_t x : chosen) sum += pow2(x);
  out << "sum: " << sum.get_str() << " = 2^" << target << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for binary codes and symmetric 3-ary trees"};
  app.name("symcode");
  app.require_subcommand(1);

  code_input check_in;
  auto* check = app.add_subcommand("check", "decodability verdict, exact sums and profile");
  attach_code_input(check, check_in);

  std::string tree_file;
  std::string tree_format = "dot";
  auto* tree_cmd = app.add_subcommand("tree", "fan a prefix-free code out into its tree");
  tree_cmd->add_option("file", tree_file, "code file")->required();
  tree_cmd->add_option("--format", tree_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string tocode_file;
  auto* tocode = app.add_subcommand("to-code", "project a symmetric tree back to a code");
  tocode->add_option("file", tocode_file, "tree JSON file")->required();

  code_input pfx_in;
  std::string pfx_trace;
  bool pfx_verify = false;
  auto* pfx = app.add_subcommand("prefixify", "rebuild the code prefix-free, same profile");
  attach_code_input(pfx, pfx_in);
  pfx->add_option("--trace", pfx_trace, "write the step trace as JSON lines");
  pfx->add_flag("--verify", pfx_verify, "re-verify the result and the trace");

  std::size_t enum_words = 0, enum_len = 0;
  std::string enum_filter = "all";
  bool enum_count = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "stream candidate codes in canonical order");
  enum_cmd->add_option("--max-words", enum_words, "largest code size")->required();
  enum_cmd->add_option("--max-len", enum_len, "largest word length")->required();
  enum_cmd->add_option("--filter", enum_filter, "all, decodable or prefix-free")
      ->check(CLI::IsMember({"all", "decodable", "prefix-free"}));
  enum_cmd->add_flag("--count-only", enum_count, "print only the count");

  std::string sweep_prop;
  std::size_t sweep_words = 0, sweep_len = 0;
  bool sweep_serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive property check, JSON report");
  sweep_cmd->add_option("--property", sweep_prop, "property to sweep")
      ->required()
      ->check(CLI::IsMember({"kraft_forward", "lemma1", "theorem1_roundtrip", "theorem2",
                             "sp_vs_bruteforce"}));
  sweep_cmd->add_option("--max-words", sweep_words, "largest code size")->required();
  sweep_cmd->add_option("--max-len", sweep_len, "largest word length")->required();
  sweep_cmd->add_flag("--serial", sweep_serial, "use the serial reference kernel");

  std::size_t ss_target = 0;
  std::string ss_exps;
  auto* ss_cmd = app.add_subcommand("subset-sum", "exact power-of-two selection demo");
  ss_cmd->add_option("--target", ss_target, "target exponent N for 2^N")->required();
  ss_cmd->add_option("--exponents", ss_exps, "comma-separated exponent multiset")->required();

  std::vector<const char*> argv;
  argv.push_back("symcode");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    int rc = app.exit(e, help, help);
    out << help.str();
    return rc == 0 ? exit_ok : exit_usage;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return exit_usage;
  }

  try {
    if (check->parsed()) {
      require_code_input(check_in);
      return cmd_check(check_in, out);
    }
    if (tree_cmd->parsed()) return cmd_tree(tree_file, tree_format, out, err);
    if (tocode->parsed()) return cmd_to_code(tocode_file, out, err);
    if (pfx->parsed()) {
      require_code_input(pfx_in);
      return cmd_prefixify(pfx_in, pfx_trace, pfx_verify, out, err);
    }
    if (enum_cmd->parsed()) {
      return cmd_enumerate(enum_words, enum_len, enum_filter, enum_count, out);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep_prop, sweep_words, sweep_len, sweep_serial, out);
    }
    if (ss_cmd->parsed()) return cmd_subset_sum(ss_target, ss_exps, out, err);
    err << "error: no subcommand\n";
    return exit_usage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const construct_failure& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace symcode
