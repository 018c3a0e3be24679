#pragma once

#include <string>
#include <string_view>

#include "qhmt/report.hpp"

namespace qhmt::qhspec {

// Text form, one check per line, children indented by two spaces:
//   report<TAB>title
//   pass<TAB>name[<TAB>value=...][<TAB>witness=...]
//   result<TAB>pass|fail
// Newlines and tabs inside values are replaced by spaces.
std::string render_text(const Report& r);
Report parse_text(std::string_view text);

// {"title": ..., "passed": bool, "checks": [{"name", "status", "value"?, "witness"?, "children"}]}
std::string render_json(const Report& r);
Report parse_json(std::string_view text);

}  // namespace qhmt::qhspec
