#pragma once

// Text grammar for ring elements and ideals, shared by the CLI and fixtures.
//   QuadInt : "a+b*t", "-(2+5*t)", "t^2" / "t2", alias "sqrt5" = -1+2*t
//   GaussInt: "a+b*i"
//   ideal   : "full:m" or "principal:b,c"

#include "polyred/rings/gaussint.hpp"
#include "polyred/rings/quadint.hpp"

#include <string_view>

namespace polyred {

QuadInt parse_quadint(std::string_view text);
GaussInt parse_gaussint(std::string_view text);
GaussIdeal parse_ideal(std::string_view text);

}  // namespace polyred
