#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qhmt {

enum class Status { Pass, Fail, Info };
std::string to_string(Status s);

// One named check; value and witness are exact strings.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::optional<std::string> value;
  std::optional<std::string> witness;
  std::vector<Check> children;

  bool passed() const;  // no failure in the subtree
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  Check& add(std::string name, bool ok, std::optional<std::string> value = std::nullopt,
             std::optional<std::string> witness = std::nullopt);
  Check& info(std::string name, std::string value);
};

Check make_check(std::string name, bool ok, std::optional<std::string> value = std::nullopt,
                 std::optional<std::string> witness = std::nullopt);

}  // namespace qhmt
