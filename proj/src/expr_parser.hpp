#pragma once

#include <array>
#include <string>

#include "p3d/poly.hpp"

namespace p3d::detail {

// Slots 0..3 hold the coefficients of dx_0..dx_3, slot 4 the scalar part.
using LinearExpr = std::array<Poly, kNumVars + 1>;

LinearExpr parse_expression(const std::string& text, bool allow_differentials);

}  // namespace p3d::detail
