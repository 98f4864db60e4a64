#pragma once

#include <string>

#include "gentlekit/homotopy.hpp"
#include "gentlekit/strings.hpp"

namespace gentlekit {

/// Zigzag pictures of strings and homotopy strings: nodes are walk
/// vertices, arrows follow the module maps; homotopy strings are laid out
/// with the degree on the vertical axis.
std::string string_to_dot(const GentleQuiver& q, const StringWord& w);
std::string string_to_svg(const GentleQuiver& q, const StringWord& w);
std::string homotopy_to_dot(const GentleQuiver& q, const HomotopyString& h);
std::string homotopy_to_svg(const GentleQuiver& q, const HomotopyString& h);

}  // namespace gentlekit
