#pragma once

#include <string>

namespace qhmt {

enum class Side { Left, Right };

inline std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

}  // namespace qhmt
