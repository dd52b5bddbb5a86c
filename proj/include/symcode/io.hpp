#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symcode/construct.hpp"
#include "symcode/correspondence.hpp"
#include "symcode/sweep.hpp"
#include "symcode/trees.hpp"
#include "symcode/words.hpp"

namespace symcode {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word-per-line format: lines starting with '#' and blank lines are ignored;
// duplicate words and symbols outside {a, b} are errors, as is an empty code.
code parse_code_text(std::string_view text);
code load_code_file(const std::filesystem::path& path);
std::string format_code(const code& c);  // one word per line

nlohmann::json tree_to_json(const tree& t);
nlohmann::json tree_to_json(const labeled_tree& lt);

// Accepts the recursive {"children": [...]} shape; "label" fields are ignored.
tree tree_from_json(const nlohmann::json& j);

std::string export_dot(const tree& t);
std::string export_dot(const labeled_tree& lt);

nlohmann::json sweep_report_json(const sweep_report& r);

// one action per line: {"step", "length", "exponent", "action", ...}
std::string trace_jsonl(const std::vector<step_trace>& traces);

}  // namespace symcode
