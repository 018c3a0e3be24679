#include "qhmt/qhspec/report_io.hpp"

#include <json.hpp>

#include "qhmt/errors.hpp"

namespace qhmt::qhspec {

namespace {

std::string clean(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\t' || c == '\r') c = ' ';
  return s;
}

void text_check(std::string& out, const Check& c, int depth) {
  out.append(2 * depth, ' ');
  out += to_string(c.status);
  out += '\t' + clean(c.name);
  if (c.value) out += "\tvalue=" + clean(*c.value);
  if (c.witness) out += "\twitness=" + clean(*c.witness);
  out += '\n';
  for (const Check& k : c.children) text_check(out, k, depth + 1);
}

Status status_from(const std::string& s, std::size_t line) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "info") return Status::Info;
  throw SyntaxError(line, 1, "unknown status '" + s + "'");
}

nlohmann::ordered_json to_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  if (c.value) j["value"] = *c.value;
  if (c.witness) j["witness"] = *c.witness;
  j["children"] = nlohmann::ordered_json::array();
  for (const Check& k : c.children) j["children"].push_back(to_json(k));
  return j;
}

Check from_json(const nlohmann::json& j) {
  Check c;
  c.name = j.at("name").get<std::string>();
  c.status = status_from(j.at("status").get<std::string>(), 0);
  if (j.contains("value")) c.value = j["value"].get<std::string>();
  if (j.contains("witness")) c.witness = j["witness"].get<std::string>();
  if (j.contains("children"))
    for (const auto& k : j["children"]) c.children.push_back(from_json(k));
  return c;
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out = "report\t" + clean(r.title) + '\n';
  for (const Check& c : r.checks) text_check(out, c, 0);
  out += std::string("result\t") + (r.passed() ? "pass" : "fail") + '\n';
  return out;
}

Report parse_text(std::string_view text) {
  Report r;
  std::vector<Check*> stack;  // stack[d] is the last check at depth d
  std::size_t number = 0;
  std::size_t pos = 0;
  bool ended = false;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++number;
    if (line.empty()) continue;
    if (ended) throw SyntaxError(number, 1, "text after result line");
    std::size_t indent = line.find_first_not_of(' ');
    if (indent == std::string_view::npos || indent % 2 != 0) throw SyntaxError(number, 1, "bad indentation");
    std::vector<std::string> fields;
    std::string_view rest = line.substr(indent);
    for (;;) {
      std::size_t tab = rest.find('\t');
      fields.emplace_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (number == 1) {
      if (fields.size() != 2 || fields[0] != "report") throw SyntaxError(number, 1, "expected 'report<TAB>title'");
      r.title = fields[1];
      continue;
    }
    if (indent == 0 && fields[0] == "result") {
      ended = true;
      continue;
    }
    if (fields.size() < 2) throw SyntaxError(number, indent + 1, "expected status and name");
    Check c;
    c.status = status_from(fields[0], number);
    c.name = fields[1];
    for (std::size_t k = 2; k < fields.size(); ++k) {
      if (fields[k].rfind("value=", 0) == 0)
        c.value = fields[k].substr(6);
      else if (fields[k].rfind("witness=", 0) == 0)
        c.witness = fields[k].substr(8);
      else
        throw SyntaxError(number, indent + 1, "unknown field '" + fields[k] + "'");
    }
    std::size_t depth = indent / 2;
    if (depth > stack.size()) throw SyntaxError(number, 1, "indentation skips a level");
    stack.resize(depth);
    std::vector<Check>& siblings = depth == 0 ? r.checks : stack.back()->children;
    siblings.push_back(std::move(c));
    stack.push_back(&siblings.back());
  }
  if (number == 0) throw SyntaxError(1, 1, "empty report");
  if (!ended) throw SyntaxError(number, 1, "missing result line");
  return r;
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) j["checks"].push_back(to_json(c));
  return j.dump(2) + '\n';
}

Report parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(0, 0, e.what());
  }
  Report r;
  try {
    r.title = j.at("title").get<std::string>();
    for (const auto& c : j.at("checks")) r.checks.push_back(from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(e.what());
  }
  return r;
}

}  // namespace qhmt::qhspec
