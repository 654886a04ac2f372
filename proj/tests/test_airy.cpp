#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tristrip/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace tristrip;

namespace {

// Reference values computed independently with 40-digit arithmetic.
constexpr double kAi0 = 0.3550280538878172392600631860041831763980;
constexpr double kBi0 = 0.6149266274460007351509223690936135535947;
constexpr double kAip0 = -0.2588194037928067984051835601892039634793;
constexpr double kBip0 = 0.4482883573538263579148237103988283908668;
constexpr double kAi1 = 0.1352924163128814155241474235154663061749;
constexpr double kAi2 = 0.03492413042327437913532208079180760976106;
constexpr double kBi2 = 3.298094999978214710280604425223452422004;
constexpr double kAiNeg2 = 0.2274074282016855759919244360378737994608;
constexpr double kBiNeg2 = -0.4123025879563984880832340546114610420345;
constexpr double kAi12 = 1.393184688875360839049034503195532280649e-13;
constexpr double kBi12 = 329807225829.0741761847681118236194749777;
constexpr double kAiNeg12 = -0.06655517505437312947418966235959652630787;
constexpr double kBiNeg12 = -0.2957199120780730567294575143568261300122;

// First zeros of the cross product on a unit half-width strip.
const std::vector<double> kUnitRoots = {2.340667730470651869, 4.087953379707197255,
                                        5.520559834545529378, 6.786708090082720430,
                                        7.944133587120872141};

bool close_rel(double got, double want, double rel) {
    return std::abs(got - want) <= rel * std::abs(want);
}

}  // namespace

TEST_CASE("airy values at the origin and small arguments") {
    const AiryDerivs d0 = airy_eval_derivs(0.0);
    CHECK(close_rel(d0.ai, kAi0, 1e-14));
    CHECK(close_rel(d0.bi, kBi0, 1e-14));
    CHECK(close_rel(d0.ai_prime, kAip0, 1e-14));
    CHECK(close_rel(d0.bi_prime, kBip0, 1e-14));

    CHECK(close_rel(airy_eval(1.0).ai, kAi1, 1e-13));
    CHECK(close_rel(airy_eval(2.0).ai, kAi2, 1e-13));
    CHECK(close_rel(airy_eval(2.0).bi, kBi2, 1e-13));
    CHECK(close_rel(airy_eval(-2.0).ai, kAiNeg2, 1e-13));
    CHECK(close_rel(airy_eval(-2.0).bi, kBiNeg2, 1e-13));
}

TEST_CASE("airy values at the edge of the range keep 10 digits") {
    CHECK(close_rel(airy_eval(12.0).ai, kAi12, 1e-10));
    CHECK(close_rel(airy_eval(12.0).bi, kBi12, 1e-10));
    CHECK(close_rel(airy_eval(-12.0).ai, kAiNeg12, 1e-10));
    CHECK(close_rel(airy_eval(-12.0).bi, kBiNeg12, 1e-10));
}

TEST_CASE("wronskian stays at 1/pi across the range") {
    const double inv_pi = 1.0 / std::acos(-1.0);
    for (const double z : {-12.0, -7.5, -2.0, -0.5, 0.0, 0.5, 2.0, 7.5, 12.0}) {
        const AiryDerivs d = airy_eval_derivs(z);
        const double w = d.ai * d.bi_prime - d.ai_prime * d.bi;
        CHECK(std::abs(w - inv_pi) <= 1e-10);
    }
}

TEST_CASE("airy range errors") {
    CHECK_THROWS_AS(airy_eval(12.000001), RangeError);
    CHECK_THROWS_AS(airy_eval(-12.000001), RangeError);
    CHECK_THROWS_AS(airy_eval(std::nan("")), RangeError);
    CHECK_NOTHROW(airy_eval(12.0));
    CHECK_NOTHROW(airy_eval(-12.0));
}

TEST_CASE("cross product basics") {
    CHECK(cross_product(0.0, 1.0) == 0.0);
    CHECK(std::abs(cross_product(kUnitRoots[0], 1.0)) < 1e-9);
    // Positive just past zero, by the series expansion 2 mu / pi.
    CHECK(cross_product(0.05, 1.0) > 0.0);
    CHECK_THROWS_AS(cross_product(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(cross_product(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cross_product(13.0, 1.0), RangeError);
}

TEST_CASE("cross product depends only on mu times half-width") {
    for (const double mu_a : {0.7, 1.9, 3.3, 6.1}) {
        const double w1 = cross_product(mu_a, 1.0);
        const double w2 = cross_product(mu_a / 2.0, 2.0);
        const double w4 = cross_product(mu_a * 4.0, 0.25);
        CHECK(std::abs(w1 - w2) <= 1e-12 * std::max(1.0, std::abs(w1)));
        CHECK(std::abs(w1 - w4) <= 1e-12 * std::max(1.0, std::abs(w1)));
    }
}

TEST_CASE("eigenvalues on the unit strip match the reference roots") {
    const std::vector<Eigenvalue> values = find_eigenvalues(1.0, 5);
    REQUIRE(values.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
        INFO("root ", k + 1);
        CHECK(std::abs(values[k].mu - kUnitRoots[k]) <= 1e-6);
        CHECK(values[k].half_width == 1.0);
    }
    for (std::size_t k = 1; k < 5; ++k) CHECK(values[k].mu > values[k - 1].mu);
}

TEST_CASE("eigenvalue residuals are tiny relative to the bracket scale") {
    const std::vector<Eigenvalue> values = find_eigenvalues(1.0, 5);
    for (const Eigenvalue& ev : values) {
        // Reconstruct the scan bracket around the root and its scale.
        double scale = 0.0;
        for (int i = 0; i <= 8; ++i) {
            const double mu = ev.mu - 0.05 + i * 0.0125;
            if (mu <= 0) continue;
            scale = std::max(scale, std::abs(cross_product(mu, 1.0)));
        }
        CHECK(std::abs(ev.residual) <= 1e-10 * scale);
        CHECK(std::abs(cross_product(ev.mu, 1.0)) == std::abs(ev.residual));
    }
}

TEST_CASE("eigenvalues scale inversely with the half-width") {
    const std::vector<Eigenvalue> unit = find_eigenvalues(1.0, 3);
    for (const double a : {0.5, 2.0, 3.0}) {
        const std::vector<Eigenvalue> scaled = find_eigenvalues(a, 3);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(scaled[k].mu * a - unit[k].mu) <= 1e-8);
    }
}

TEST_CASE("eigenvalue search errors") {
    CHECK_THROWS_AS(find_eigenvalues(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(-1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_eigenvalues(1.0, 50), RangeError);
}

TEST_CASE("eigenmode vanishes identically on the lower boundary") {
    const Eigenvalue ev = find_eigenvalues(1.0, 1).front();
    const Eigenmode mode{ev.mu, 1.0, 0.8, -0.6};
    for (const double x : {-3.0, -1.0, 0.0, 0.2, 5.0})
        CHECK(eigenmode_value(mode, x, -1.0) == 0.0);
}

TEST_CASE("eigenmode is small on the upper boundary at an eigenvalue") {
    const Eigenvalue ev = find_eigenvalues(1.0, 1).front();
    const Eigenmode mode{ev.mu, 1.0, 1.0, 1.0};
    for (const double x : {-2.0, 0.0, 0.7, 1.9})
        CHECK(std::abs(eigenmode_value(mode, x, 1.0)) <= 1e-8);
}

TEST_CASE("eigenmode is nontrivial inside the strip") {
    const Eigenvalue ev = find_eigenvalues(1.0, 1).front();
    const Eigenmode mode{ev.mu, 1.0, 1.0, 1.0};
    double peak = 0.0;
    for (int i = 0; i <= 20; ++i)
        peak = std::max(peak, std::abs(eigenmode_value(mode, -1.0 + 0.1 * i, 0.0)));
    CHECK(peak > 1e-2);
}

TEST_CASE("zero-amplitude mode evaluates to zero") {
    const Eigenmode mode{2.5, 1.0, 0.0, 0.0};
    CHECK(eigenmode_value(mode, 0.3, 0.4) == 0.0);
    const GridSpec grid{-1.0, 1.0, -0.9, 0.9, 9, 9};
    CHECK(eigenmode_residual(mode, grid) == 0.0);
}

TEST_CASE("eigenmode evaluation guards") {
    const Eigenmode mode{2.5, 1.0, 1.0, 0.0};
    CHECK_THROWS_AS(eigenmode_value(mode, 0.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(eigenmode_residual(mode, GridSpec{-1, 1, -2, 2, 9, 9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eigenmode_residual(mode, GridSpec{-1, 1, -0.5, 0.5, 2, 9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eigenmode_residual(mode, GridSpec{1, -1, -0.5, 0.5, 9, 9}),
                    std::invalid_argument);
}

TEST_CASE("finite-difference residual converges at second order") {
    const Eigenvalue ev = find_eigenvalues(1.0, 1).front();
    const Eigenmode mode{ev.mu, 1.0, 1.0, 1.0};
    const double r1 = eigenmode_residual(mode, GridSpec{-1.0, 1.0, -0.9, 0.9, 33, 33});
    const double r2 = eigenmode_residual(mode, GridSpec{-1.0, 1.0, -0.9, 0.9, 65, 65});
    const double r3 = eigenmode_residual(mode, GridSpec{-1.0, 1.0, -0.9, 0.9, 129, 129});
    CHECK(r1 > r2);
    CHECK(r2 > r3);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.12));
    CHECK(r2 / r3 == doctest::Approx(4.0).epsilon(0.12));
}

TEST_CASE("precision digits default") {
    // The suite runs without TRISTRIP_PRECISION set, so the default applies.
    CHECK(precision_digits() >= 10);
}
