#include "symcode/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace symcode {

code parse_code_text(std::string_view text) {
  code out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;

    try {
      out.insert(word(line));
    } catch (const std::invalid_argument& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (out.empty()) throw parse_error("no words in input");
  return out;
}

code load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_text(buf.str());
}

std::string format_code(const code& c) {
  std::string out;
  for (const auto& w : c) {
    out += w.str();
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::json tree_json_impl(const tree& t, const std::string& v,
                              const std::map<std::string, ternary_symbol>* labels) {
  nlohmann::json node = nlohmann::json::object();
  if (labels != nullptr && !v.empty()) {
    node["label"] = ternary_str(labels->at(v));
  }
  nlohmann::json children = nlohmann::json::array();
  for (std::size_t i = 0, n = t.child_count(v); i < n; ++i) {
    children.push_back(tree_json_impl(t, v + static_cast<char>('0' + i), labels));
  }
  if (!children.empty()) node["children"] = std::move(children);
  return node;
}

}  // namespace

nlohmann::json tree_to_json(const tree& t) { return tree_json_impl(t, "", nullptr); }

nlohmann::json tree_to_json(const labeled_tree& lt) {
  return tree_json_impl(lt.shape, "", &lt.labels);
}

tree tree_from_json(const nlohmann::json& j) {
  std::set<std::string> verts;
  std::function<void(const nlohmann::json&, const std::string&)> walk =
      [&](const nlohmann::json& node, const std::string& v) {
        if (!node.is_object()) throw parse_error("tree node must be a JSON object");
        verts.insert(v);
        if (!node.contains("children")) return;
        const nlohmann::json& children = node.at("children");
        if (!children.is_array()) throw parse_error("\"children\" must be an array");
        if (children.size() > 3) throw parse_error("a vertex may have at most 3 children");
        for (std::size_t i = 0; i < children.size(); ++i) {
          walk(children[i], v + static_cast<char>('0' + i));
        }
      };
  walk(j, "");
  try {
    return tree::from_vertices(std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

namespace {

std::string dot_impl(const tree& t, const std::map<std::string, ternary_symbol>* labels) {
  std::ostringstream os;
  os << "digraph tree {\n";
  for (const auto& v : t.vertices()) {
    os << "  \"o" << v << "\";\n";
  }
  for (const auto& v : t.vertices()) {
    if (v.empty()) continue;
    os << "  \"o" << v.substr(0, v.size() - 1) << "\" -> \"o" << v << "\"";
    if (labels != nullptr) os << " [label=\"" << ternary_str(labels->at(v)) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const tree& t) { return dot_impl(t, nullptr); }

std::string export_dot(const labeled_tree& lt) { return dot_impl(lt.shape, &lt.labels); }

nlohmann::json sweep_report_json(const sweep_report& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["max_words"] = r.max_words;
  j["max_len"] = r.max_len;
  j["candidates"] = r.candidates;
  j["checked"] = r.checked;
  j["rechecked"] = r.rechecked;
  j["passed"] = r.passed();
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) {
    fails.push_back({{"index", f.index},
                     {"instance", f.instance},
                     {"detail", f.detail},
                     {"recheck", f.from_recheck}});
  }
  j["failures"] = std::move(fails);
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string trace_jsonl(const std::vector<step_trace>& traces) {
  std::string out;
  for (std::size_t si = 0; si < traces.size(); ++si) {
    const step_trace& t = traces[si];
    for (const auto& act : t.actions) {
      nlohmann::json j;
      j["step"] = si + 1;
      j["length"] = t.length;
      j["exponent"] = t.exponent;
      j["action"] = std::string(trace_action_name(act.op));
      if (act.op == trace_action::kind::missing_word_extension ||
          act.op == trace_action::kind::vacancy_shift) {
        j["m"] = act.m;
        j["j"] = act.j;
      }
      if (act.op == trace_action::kind::subset_sum) j["exponents"] = act.exponents;
      nlohmann::json added = nlohmann::json::array();
      for (const auto& w : act.added) added.push_back(w.str());
      j["added"] = std::move(added);
      if (!act.removed.empty()) {
        nlohmann::json removed = nlohmann::json::array();
        for (const auto& w : act.removed) removed.push_back(w.str());
        j["removed"] = std::move(removed);
      }
      out += j.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace symcode
