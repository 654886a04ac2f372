#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reference_tables.hpp"
#include "support.hpp"

#include "tristrip/solver.hpp"

#include <random>

using namespace tristrip;

namespace {

DirichletProblem worked_problem(const Strip& strip) {
    return {reference::example_rhs(), UniPoly(Var::X), UniPoly(Var::X), strip};
}

}  // namespace

TEST_CASE("worked problem on elliptic strips") {
    for (const Rational& b : {Rational(1), Rational(2)}) {
        const SolutionReport report = solve(worked_problem(Strip(Rational(0), b)));
        CHECK(report.solution == reference::elliptic_example_solution(b));
        CHECK(report.particular_part == reference::example_particular());
        CHECK(report.solution == report.particular_part + report.homogeneous_part);
        CHECK(report.residuals_vanish());
    }
}

TEST_CASE("worked problem on symmetric strips") {
    for (const Rational& a : {Rational(1), Rational(2)}) {
        const SolutionReport report = solve(worked_problem(Strip(-a, a)));
        CHECK(report.solution == reference::symmetric_example_solution(a));
        CHECK(report.particular_part == reference::example_particular());
        CHECK(report.residuals_vanish());
    }
}

TEST_CASE("zero problem has the zero solution") {
    const SolutionReport report = solve({BiPoly(), UniPoly(Var::X), UniPoly(Var::X),
                                         Strip(Rational(-1), Rational(1))});
    CHECK(report.solution.is_zero());
    CHECK(report.particular_part.is_zero());
    CHECK(report.homogeneous_part.is_zero());
    CHECK(report.residuals_vanish());
}

TEST_CASE("pure boundary problem reproduces the harmonic lift") {
    const Strip strip(Rational(0), Rational(1));
    const DirichletProblem problem{BiPoly(), UniPoly(Var::X, {{3, 1}}), UniPoly(Var::X),
                                   strip};
    const SolutionReport report = solve(problem);
    CHECK(report.particular_part.is_zero());
    CHECK(report.solution == harmonic_lift(strip, Side::Lower, 3));
    CHECK(report.residuals_vanish());
}

TEST_CASE("verify accepts the printed solution and reports honest residuals") {
    const Strip strip(Rational(0), Rational(2));
    const DirichletProblem problem = worked_problem(strip);
    const BiPoly good = reference::elliptic_example_solution(Rational(2));

    SolutionReport report = verify(problem, good);
    CHECK(report.residuals_vanish());
    CHECK(report.solution == good);
    CHECK(report.particular_part == good);
    CHECK(report.homogeneous_part.is_zero());

    // Shifting the candidate by a constant moves only the boundary residuals.
    report = verify(problem, good + BiPoly(Rational(1)));
    CHECK(report.pde_residual.is_zero());
    CHECK(report.lower_residual == UniPoly(Var::X, {{0, 1}}));
    CHECK(report.upper_residual == UniPoly(Var::X, {{0, 1}}));

    // A particular solution with no boundary correction fails only at the top.
    report = verify(problem, reference::example_particular());
    CHECK(report.pde_residual.is_zero());
    CHECK(report.lower_residual.is_zero());  // all terms vanish at y = 0
    CHECK_FALSE(report.upper_residual.is_zero());

    // Wrong operator image shows up in the pde residual.
    report = verify(problem, reference::inverse_x5y7());
    CHECK(report.pde_residual ==
          BiPoly::monomial(1, 5, 7) - reference::example_rhs());
}

TEST_CASE("residuals agree with pointwise evaluation") {
    std::mt19937 rng(160493);
    for (int round = 0; round < 40; ++round) {
        const Strip strip = testing::random_strip(rng);
        const DirichletProblem problem{testing::random_bipoly(rng, 6, 4),
                                       testing::random_unipoly(rng, Var::X, 5, 3),
                                       testing::random_unipoly(rng, Var::X, 5, 3), strip};
        const BiPoly candidate = testing::random_bipoly(rng, 6, 4);
        const SolutionReport report = verify(problem, candidate);
        const Rational x0 = testing::random_rational(rng, 5, 3);
        const Rational y0 = testing::random_rational(rng, 5, 3);
        CHECK(evaluate(report.pde_residual, x0, y0) ==
              evaluate(tricomi_apply(candidate), x0, y0) - evaluate(problem.rhs, x0, y0));
        CHECK(evaluate(report.lower_residual, x0) ==
              evaluate(candidate, x0, strip.lower()) - evaluate(problem.lower_data, x0));
        CHECK(evaluate(report.upper_residual, x0) ==
              evaluate(candidate, x0, strip.upper()) - evaluate(problem.upper_data, x0));
    }
}

TEST_CASE("solve then verify closes on random problems") {
    std::mt19937 rng(20250101);
    for (int round = 0; round < 60; ++round) {
        const Strip strip = testing::random_strip(rng);
        const DirichletProblem problem{testing::random_bipoly(rng, 8, 6),
                                       testing::random_unipoly(rng, Var::X, 8, 5),
                                       testing::random_unipoly(rng, Var::X, 8, 5), strip};
        const SolutionReport report = solve(problem);
        CHECK(report.residuals_vanish());
        CHECK(report.solution == report.particular_part + report.homogeneous_part);
        CHECK(testing::canonical(report.solution));
        const SolutionReport recheck = verify(problem, report.solution);
        CHECK(recheck.residuals_vanish());
    }
}

TEST_CASE("superposition of problems") {
    std::mt19937 rng(8675309);
    for (int round = 0; round < 25; ++round) {
        const Strip strip = testing::random_strip(rng);
        const DirichletProblem p1{testing::random_bipoly(rng, 6, 4),
                                  testing::random_unipoly(rng, Var::X, 6, 4),
                                  testing::random_unipoly(rng, Var::X, 6, 4), strip};
        const DirichletProblem p2{testing::random_bipoly(rng, 6, 4),
                                  testing::random_unipoly(rng, Var::X, 6, 4),
                                  testing::random_unipoly(rng, Var::X, 6, 4), strip};
        const DirichletProblem sum{p1.rhs + p2.rhs, p1.lower_data + p2.lower_data,
                                   p1.upper_data + p2.upper_data, strip};
        CHECK(solve(sum).solution == solve(p1).solution + solve(p2).solution);
    }
}

TEST_CASE("kernel of the constrained operator is trivial") {
    CHECK(kernel_dimension(Strip(Rational(-1), Rational(1)), 8) == 0);
    CHECK(kernel_dimension(Strip(Rational(0), Rational(1)), 8) == 0);
    CHECK(kernel_dimension(Strip(Rational(-2), Rational(3)), 6) == 0);
    CHECK(kernel_dimension(Strip(Rational(1, 2), Rational(7, 3)), 7) == 0);
    CHECK(kernel_dimension(Strip(Rational(-5), Rational(-2)), 6) == 0);
    CHECK(kernel_dimension(Strip(Rational(-1), Rational(1)), 0) == 0);
    CHECK(kernel_dimension(Strip(Rational(-1), Rational(1)), 1) == 0);
}

TEST_CASE("kernel stays trivial on random strips") {
    std::mt19937 rng(5553535);
    for (int round = 0; round < 15; ++round) {
        const Strip strip = testing::random_strip(rng);
        CHECK(kernel_dimension(strip, 6) == 0);
    }
}
