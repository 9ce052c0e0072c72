#pragma once

#include <string>

#include "csvout.hpp"

namespace eigenstrata::tools {

// line plot of every column against column 0; columns whose name starts
// with "sim" are drawn as steps in grey
std::string render_svg(const Table& t, const std::string& title);

}  // namespace eigenstrata::tools
