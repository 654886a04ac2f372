#include "tristrip/airy.hpp"
#include "tristrip/basis.hpp"
#include "tristrip/expr_io.hpp"
#include "tristrip/particular.hpp"
#include "tristrip/polynomial.hpp"
#include "tristrip/solver.hpp"
#include "tristrip/strip.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace tristrip;

// Exit codes: 0 success, 2 parse error, 3 invalid domain or grid,
// 4 numeric range exceeded, 5 internal self-check failure.
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitRange = 4;
constexpr int kExitInternal = 5;

struct CliFailure {
    int code;
    std::string message;
};

PolyFormat parse_format(const std::string& name) {
    if (name == "text") return PolyFormat::Text;
    if (name == "json") return PolyFormat::Json;
    if (name == "latex") return PolyFormat::LaTeX;
    throw CliFailure{kExitParse, "unknown format '" + name + "' (text, json, latex)"};
}

BiPoly parse_poly_arg(const std::string& text, const std::string& input, const char* what) {
    if (input != "text" && input != "json")
        throw CliFailure{kExitParse, "unknown input format '" + input + "' (text, json)"};
    // Keep the unset "0" defaults meaningful when the input format is json.
    if (input == "json" && text == "0") return BiPoly();
    ParseResult r = input == "json" ? parse_bipoly_json(text) : parse_bipoly(text);
    if (const auto* err = std::get_if<ParseError>(&r))
        throw CliFailure{kExitParse, std::string(what) + ": " + err->message()};
    return std::get<BiPoly>(std::move(r));
}

UniPoly parse_boundary_arg(const std::string& text, const std::string& input, const char* what) {
    const BiPoly p = parse_poly_arg(text, input, what);
    if (p.degree(Var::Y) > 0)
        throw CliFailure{kExitParse, std::string(what) + ": boundary data may use x only"};
    return substitute_y(p, Rational(0));
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    const auto r = Rational::from_string(text);
    if (!r) throw CliFailure{kExitParse, std::string(what) + ": expected a rational like -3/2"};
    return *r;
}

Strip make_strip(const std::string& a_text, const std::string& b_text) {
    const Rational a = parse_rational_arg(a_text, "--a");
    const Rational b = parse_rational_arg(b_text, "--b");
    try {
        return Strip(a, b);
    } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitDomain, e.what()};
    }
}

nlohmann::json poly_json(const BiPoly& p) {
    return nlohmann::json::parse(format_bipoly(p, PolyFormat::Json));
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct SolveOpts {
    std::string rhs = "0";
    std::string phi = "0";
    std::string psi = "0";
    std::string a, b;
    std::string format = "text";
    std::string input = "text";
};

int run_solve(const SolveOpts& o) {
    const Strip strip = make_strip(o.a, o.b);
    DirichletProblem problem{parse_poly_arg(o.rhs, o.input, "--rhs"),
                             parse_boundary_arg(o.phi, o.input, "--phi"),
                             parse_boundary_arg(o.psi, o.input, "--psi"), strip};
    const SolutionReport report = solve(problem);
    if (!report.residuals_vanish())
        throw CliFailure{kExitInternal, "self-check failed: residuals do not vanish"};

    const PolyFormat style = parse_format(o.format);
    if (style == PolyFormat::Json) {
        nlohmann::json doc;
        doc["solution"] = poly_json(report.solution);
        doc["particular"] = poly_json(report.particular_part);
        doc["homogeneous"] = poly_json(report.homogeneous_part);
        doc["residuals"] = {{"pde", poly_json(report.pde_residual)},
                            {"lower", poly_json(report.lower_residual.to_bipoly())},
                            {"upper", poly_json(report.upper_residual.to_bipoly())}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "solution = " << format_bipoly(report.solution, style) << "\n";
        std::cout << "particular = " << format_bipoly(report.particular_part, style) << "\n";
        std::cout << "homogeneous = " << format_bipoly(report.homogeneous_part, style) << "\n";
        std::cout << "pde_residual = " << format_bipoly(report.pde_residual, style) << "\n";
        std::cout << "lower_residual = " << format_unipoly(report.lower_residual, style) << "\n";
        std::cout << "upper_residual = " << format_unipoly(report.upper_residual, style) << "\n";
    }
    return 0;
}

struct ParticularOpts {
    std::string rhs;
    std::string format = "text";
    std::string input = "text";
};

int run_particular(const ParticularOpts& o) {
    const BiPoly rhs = parse_poly_arg(o.rhs, o.input, "--rhs");
    const BiPoly part = particular_solution(rhs);
    if (!(tricomi_apply(part) == rhs))
        throw CliFailure{kExitInternal, "self-check failed: operator image differs from rhs"};
    const PolyFormat style = parse_format(o.format);
    if (style == PolyFormat::Json) {
        nlohmann::json doc;
        doc["particular"] = poly_json(part);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "particular = " << format_bipoly(part, style) << "\n";
    }
    return 0;
}

struct BasisOpts {
    std::string a, b;
    std::string side = "lower";
    unsigned count = 1;
    bool lift = false;
    std::string format = "text";
};

int run_basis(const BasisOpts& o) {
    const Strip strip = make_strip(o.a, o.b);
    if (o.side != "lower" && o.side != "upper")
        throw CliFailure{kExitParse, "unknown side '" + o.side + "' (lower, upper)"};
    if (o.count == 0) throw CliFailure{kExitDomain, "--count must be at least 1"};
    const Side side = o.side == "lower" ? Side::Lower : Side::Upper;
    BasisFamily family = build_family(strip, side, o.count - 1);

    const char* family_name = side == Side::Lower ? "p" : "q";
    const char* lift_name = side == Side::Lower ? "u" : "v";
    const PolyFormat style = parse_format(o.format);
    if (style == PolyFormat::Json) {
        nlohmann::json doc;
        doc["side"] = o.side;
        doc["family"] = nlohmann::json::array();
        for (std::size_t m = 0; m < o.count; ++m)
            doc["family"].push_back(poly_json(family.poly(m).to_bipoly()));
        if (o.lift) {
            doc["lifts"] = nlohmann::json::array();
            for (unsigned n = 0; n < o.count; ++n)
                doc["lifts"].push_back(poly_json(harmonic_lift(family, n)));
        }
        std::cout << doc.dump() << "\n";
    } else {
        for (std::size_t m = 0; m < o.count; ++m)
            std::cout << family_name << "[" << 2 * m
                      << "] = " << format_unipoly(family.poly(m), style) << "\n";
        if (o.lift)
            for (unsigned n = 0; n < o.count; ++n)
                std::cout << lift_name << "[" << n
                          << "] = " << format_bipoly(harmonic_lift(family, n), style) << "\n";
    }
    return 0;
}

struct EigenOpts {
    double a = 1.0;
    std::size_t count = 1;
    std::string format = "text";
};

int run_eigen(const EigenOpts& o) {
    if (o.format != "text" && o.format != "json")
        throw CliFailure{kExitParse, "unknown format '" + o.format + "' (text, json)"};
    const std::vector<Eigenvalue> values = find_eigenvalues(o.a, o.count);
    if (o.format == "json") {
        nlohmann::json doc;
        doc["half_width"] = o.a;
        doc["eigenvalues"] = nlohmann::json::array();
        for (std::size_t k = 0; k < values.size(); ++k)
            doc["eigenvalues"].push_back(
                {{"index", k + 1}, {"mu", values[k].mu}, {"residual", values[k].residual}});
        std::cout << doc.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < values.size(); ++k)
            std::cout << "mu[" << k + 1 << "] = " << fmt_double(values[k].mu)
                      << "  residual = " << fmt_double(values[k].residual) << "\n";
    }
    return 0;
}

struct SampleOpts {
    std::string rhs = "0";
    std::string phi = "0";
    std::string psi = "0";
    std::string a, b;
    unsigned mode_index = 0;
    double mode_c1 = 1.0;
    double mode_c2 = 0.0;
    std::string xmin, xmax, ymin, ymax;
    std::size_t nx = 2;
    std::size_t ny = 2;
    std::string out;
    std::string input = "text";
};

int run_sample(const SampleOpts& o) {
    const Strip strip = make_strip(o.a, o.b);
    DirichletProblem problem{parse_poly_arg(o.rhs, o.input, "--rhs"),
                             parse_boundary_arg(o.phi, o.input, "--phi"),
                             parse_boundary_arg(o.psi, o.input, "--psi"), strip};
    const SolutionReport report = solve(problem);
    if (!report.residuals_vanish())
        throw CliFailure{kExitInternal, "self-check failed: residuals do not vanish"};

    std::optional<Eigenmode> mode;
    if (o.mode_index >= 1) {
        if (!strip.is_symmetric())
            throw CliFailure{kExitDomain, "--mode-index requires a strip symmetric about y = 0"};
        const double half_width = strip.upper().to_double();
        const std::vector<Eigenvalue> values = find_eigenvalues(half_width, o.mode_index);
        mode = Eigenmode{values.back().mu, half_width, o.mode_c1, o.mode_c2};
    }

    const Rational x_min = parse_rational_arg(o.xmin, "--xmin");
    const Rational x_max = parse_rational_arg(o.xmax, "--xmax");
    const Rational y_min = parse_rational_arg(o.ymin, "--ymin");
    const Rational y_max = parse_rational_arg(o.ymax, "--ymax");
    if (!(x_min < x_max) || !(y_min < y_max))
        throw CliFailure{kExitDomain, "grid extents must satisfy xmin < xmax and ymin < ymax"};
    if (o.nx < 2 || o.ny < 2)
        throw CliFailure{kExitDomain, "grid needs at least 2 nodes per direction"};

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw CliFailure{kExitDomain, "cannot open output file '" + o.out + "'"};
    }
    std::ostream& os = o.out.empty() ? std::cout : file;

    // Grid nodes are exact rationals; the polynomial part is evaluated
    // exactly and only converted to double at the end.
    os << "x,y,u\n";
    const Rational x_span = x_max - x_min;
    const Rational y_span = y_max - y_min;
    const long nx_gap = static_cast<long>(o.nx) - 1;
    const long ny_gap = static_cast<long>(o.ny) - 1;
    for (std::size_t j = 0; j < o.ny; ++j) {
        const Rational y = y_min + y_span * Rational(static_cast<long>(j), ny_gap);
        for (std::size_t i = 0; i < o.nx; ++i) {
            const Rational x = x_min + x_span * Rational(static_cast<long>(i), nx_gap);
            double u = evaluate(report.solution, x, y).to_double();
            if (mode) u += eigenmode_value(*mode, x.to_double(), y.to_double());
            os << fmt_double(x.to_double()) << "," << fmt_double(y.to_double()) << ","
               << fmt_double(u) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial solver for y u_xx + u_yy = P(x, y) in a strip"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "solve the Dirichlet problem exactly");
    solve_cmd->add_option("--rhs", solve_opts.rhs, "right-hand side polynomial in x, y");
    solve_cmd->add_option("--phi", solve_opts.phi, "boundary data on y = a (polynomial in x)");
    solve_cmd->add_option("--psi", solve_opts.psi, "boundary data on y = b (polynomial in x)");
    solve_cmd->add_option("--a", solve_opts.a, "lower boundary height (rational)")->required();
    solve_cmd->add_option("--b", solve_opts.b, "upper boundary height (rational)")->required();
    solve_cmd->add_option("--format", solve_opts.format, "output format: text, json, latex");
    solve_cmd->add_option("--input", solve_opts.input, "expression input format: text, json");

    ParticularOpts part_opts;
    auto* part_cmd = app.add_subcommand("particular", "invert the operator on a polynomial");
    part_cmd->add_option("--rhs", part_opts.rhs, "right-hand side polynomial in x, y")->required();
    part_cmd->add_option("--format", part_opts.format, "output format: text, json, latex");
    part_cmd->add_option("--input", part_opts.input, "expression input format: text, json");

    BasisOpts basis_opts;
    auto* basis_cmd = app.add_subcommand("basis", "print boundary basis polynomials");
    basis_cmd->add_option("--a", basis_opts.a, "lower boundary height (rational)")->required();
    basis_cmd->add_option("--b", basis_opts.b, "upper boundary height (rational)")->required();
    basis_cmd->add_option("--side", basis_opts.side, "which boundary: lower, upper");
    basis_cmd->add_option("--count", basis_opts.count, "number of family entries");
    basis_cmd->add_flag("--lift", basis_opts.lift, "also print the x^n lifts");
    basis_cmd->add_option("--format", basis_opts.format, "output format: text, json, latex");

    EigenOpts eigen_opts;
    auto* eigen_cmd = app.add_subcommand("eigen", "eigenvalues of the symmetric-strip problem");
    eigen_cmd->add_option("--a", eigen_opts.a, "strip half-width")->required();
    eigen_cmd->add_option("--count", eigen_opts.count, "how many eigenvalues");
    eigen_cmd->add_option("--format", eigen_opts.format, "output format: text, json");

    SampleOpts sample_opts;
    auto* sample_cmd = app.add_subcommand("sample", "evaluate solution plus optional mode on a grid (CSV)");
    sample_cmd->add_option("--rhs", sample_opts.rhs, "right-hand side polynomial in x, y");
    sample_cmd->add_option("--phi", sample_opts.phi, "boundary data on y = a");
    sample_cmd->add_option("--psi", sample_opts.psi, "boundary data on y = b");
    sample_cmd->add_option("--a", sample_opts.a, "lower boundary height (rational)")->required();
    sample_cmd->add_option("--b", sample_opts.b, "upper boundary height (rational)")->required();
    sample_cmd->add_option("--mode-index", sample_opts.mode_index,
                           "add the k-th eigenmode (0 = none; symmetric strips only)");
    sample_cmd->add_option("--mode-c1", sample_opts.mode_c1, "sin coefficient of the mode");
    sample_cmd->add_option("--mode-c2", sample_opts.mode_c2, "cos coefficient of the mode");
    sample_cmd->add_option("--xmin", sample_opts.xmin, "grid x lower bound (rational)")->required();
    sample_cmd->add_option("--xmax", sample_opts.xmax, "grid x upper bound (rational)")->required();
    sample_cmd->add_option("--ymin", sample_opts.ymin, "grid y lower bound (rational)")->required();
    sample_cmd->add_option("--ymax", sample_opts.ymax, "grid y upper bound (rational)")->required();
    sample_cmd->add_option("--nx", sample_opts.nx, "grid nodes along x")->required();
    sample_cmd->add_option("--ny", sample_opts.ny, "grid nodes along y")->required();
    sample_cmd->add_option("--out", sample_opts.out, "output CSV path (default stdout)");
    sample_cmd->add_option("--input", sample_opts.input, "expression input format: text, json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts);
        if (part_cmd->parsed()) return run_particular(part_opts);
        if (basis_cmd->parsed()) return run_basis(basis_opts);
        if (eigen_cmd->parsed()) return run_eigen(eigen_opts);
        if (sample_cmd->parsed()) return run_sample(sample_opts);
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRange;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
