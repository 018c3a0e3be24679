#include "qhmt/report.hpp"

#include <algorithm>

namespace qhmt {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Info:
      return "info";
  }
  return "?";
}

bool Check::passed() const {
  if (status == Status::Fail) return false;
  return std::all_of(children.begin(), children.end(), [](const Check& c) { return c.passed(); });
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Check make_check(std::string name, bool ok, std::optional<std::string> value, std::optional<std::string> witness) {
  Check c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.value = std::move(value);
  c.witness = std::move(witness);
  return c;
}

Check& Report::add(std::string name, bool ok, std::optional<std::string> value, std::optional<std::string> witness) {
  checks.push_back(make_check(std::move(name), ok, std::move(value), std::move(witness)));
  return checks.back();
}

Check& Report::info(std::string name, std::string value) {
  Check c;
  c.name = std::move(name);
  c.status = Status::Info;
  c.value = std::move(value);
  checks.push_back(std::move(c));
  return checks.back();
}

}  // namespace qhmt
