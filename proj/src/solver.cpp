#include "tristrip/solver.hpp"

#include "tristrip/particular.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tristrip {

SolutionReport verify(const DirichletProblem& problem, const BiPoly& candidate) {
    SolutionReport report;
    report.solution = candidate;
    report.particular_part = candidate;
    report.pde_residual = tricomi_apply(candidate) - problem.rhs;
    report.lower_residual =
        substitute_y(candidate, problem.strip.lower()) - problem.lower_data;
    report.upper_residual =
        substitute_y(candidate, problem.strip.upper()) - problem.upper_data;
    return report;
}

SolutionReport solve(const DirichletProblem& problem) {
    const BiPoly particular = particular_solution(problem.rhs);

    // Boundary data left over after subtracting the particular part gets
    // matched term by term with lifts of x^n from each side.
    const UniPoly lower_gap =
        problem.lower_data - substitute_y(particular, problem.strip.lower());
    const UniPoly upper_gap =
        problem.upper_data - substitute_y(particular, problem.strip.upper());

    BasisFamily lower_family(problem.strip, Side::Lower);
    BasisFamily upper_family(problem.strip, Side::Upper);
    BiPoly homogeneous;
    for (const auto& [n, c] : lower_gap.terms())
        homogeneous += c * harmonic_lift(lower_family, n);
    for (const auto& [n, c] : upper_gap.terms())
        homogeneous += c * harmonic_lift(upper_family, n);

    SolutionReport report = verify(problem, particular + homogeneous);
    report.particular_part = particular;
    report.homogeneous_part = homogeneous;
    return report;
}

std::size_t kernel_dimension(const Strip& strip, unsigned max_degree) {
    // Unknowns: coefficients c_{ij} of x^i y^j with i + j <= max_degree.
    std::vector<Exponents> columns;
    std::map<Exponents, std::size_t> column_of;
    for (unsigned i = 0; i <= max_degree; ++i)
        for (unsigned j = 0; i + j <= max_degree; ++j) {
            column_of[{i, j}] = columns.size();
            columns.push_back({i, j});
        }
    const std::size_t ncols = columns.size();

    std::vector<std::vector<Rational>> rows;

    // T(P) == 0: one row per monomial of the image. x^i y^j contributes
    // i(i-1) to monomial (i-2, j+1) and j(j-1) to (i, j-2).
    std::map<Exponents, std::vector<Rational>> image_rows;
    auto image_row = [&](Exponents e) -> std::vector<Rational>& {
        auto& row = image_rows[e];
        if (row.empty()) row.assign(ncols, Rational());
        return row;
    };
    for (const auto& [e, col] : column_of) {
        if (e.x >= 2)
            image_row({e.x - 2, e.y + 1})[col] +=
                Rational(static_cast<long>(e.x) * (e.x - 1));
        if (e.y >= 2)
            image_row({e.x, e.y - 2})[col] +=
                Rational(static_cast<long>(e.y) * (e.y - 1));
    }
    for (auto& [e, row] : image_rows) rows.push_back(std::move(row));

    // Both boundary traces == 0: for each x-power i, sum_j c_{ij} y0^j = 0.
    for (const Rational& y0 : {strip.lower(), strip.upper()})
        for (unsigned i = 0; i <= max_degree; ++i) {
            std::vector<Rational> row(ncols);
            for (unsigned j = 0; i + j <= max_degree; ++j)
                row[column_of[{i, j}]] = pow(y0, j);
            rows.push_back(std::move(row));
        }

    // Exact Gaussian elimination; the kernel dimension is ncols - rank.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return ncols - rank;
}

}  // namespace tristrip
