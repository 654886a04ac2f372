#pragma once

#include "tristrip/basis.hpp"
#include "tristrip/polynomial.hpp"
#include "tristrip/strip.hpp"

#include <cstddef>

namespace tristrip {

// Find u with  y u_xx + u_yy = rhs  in the strip,
//              u(x, lower) = lower_data(x),  u(x, upper) = upper_data(x).
struct DirichletProblem {
    BiPoly rhs;
    UniPoly lower_data{Var::X};
    UniPoly upper_data{Var::X};
    Strip strip{Rational(0), Rational(1)};
};

// Residuals are always recomputed from the reported solution by direct
// substitution, never assumed: pde_residual = T(solution) - rhs, and the
// boundary residuals are the traces minus the prescribed data.
struct SolutionReport {
    BiPoly solution;
    BiPoly particular_part;
    BiPoly homogeneous_part;
    BiPoly pde_residual;
    UniPoly lower_residual{Var::X};
    UniPoly upper_residual{Var::X};

    bool residuals_vanish() const {
        return pde_residual.is_zero() && lower_residual.is_zero() &&
               upper_residual.is_zero();
    }
};

// Exact closed-form solution; all report residuals are identically zero.
SolutionReport solve(const DirichletProblem& problem);

// Report for an externally supplied candidate. particular_part is set to the
// candidate and homogeneous_part to zero.
SolutionReport verify(const DirichletProblem& problem, const BiPoly& candidate);

// Dimension of { P : total degree <= max_degree, T(P) == 0, both boundary
// traces == 0 }, computed by exact elimination. Zero for every strip, which
// is what makes the solver's answer the unique polynomial solution.
std::size_t kernel_dimension(const Strip& strip, unsigned max_degree);

}  // namespace tristrip
