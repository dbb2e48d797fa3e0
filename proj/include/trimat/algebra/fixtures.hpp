#pragma once

#include "trimat/algebra/bimodule.hpp"

namespace trimat::fixtures {

/// k[t]/(t^n) with basis 1, t, …, t^{n-1}.
Algebra truncated_polynomial(std::size_t n, const std::string& var, Field field = Field::rationals());

/// F1 = k[x]/(x²).
Algebra f1(Field field = Field::rationals());
/// F2 = k[y]/(y³).
Algebra f2(Field field = Field::rationals());
/// F3 = k as an F1-F2-bimodule with x and y acting as zero.
Bimodule f3(Field field = Field::rationals());
/// F4 = path algebra of 1 → 2, basis (e_1, e_2, a).
Algebra f4(Field field = Field::rationals());
/// F5 = the simple right F2-module.
RightModule f5(Field field = Field::rationals());

/// Kronecker quiver 1 ⇉ 2.
Algebra kronecker(Field field = Field::rationals());
/// 1 ⇄ 2 with both compositions zero.
Algebra two_cycle_zero(Field field = Field::rationals());

}  // namespace trimat::fixtures
