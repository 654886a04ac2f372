#pragma once

#include "tristrip/polynomial.hpp"

namespace tristrip {

// The canonical polynomial u with tricomi_apply(u) == x^n y^m.
// See src/particular.cpp for the closed-form coefficients.
BiPoly monomial_inverse(unsigned n, unsigned m);

// Linear extension of monomial_inverse: tricomi_apply(result) == rhs.
BiPoly particular_solution(const BiPoly& rhs);

}  // namespace tristrip
