#include "tristrip/airy.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tristrip {

namespace {

class Mp {
public:
    explicit Mp(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    ~Mp() { mpfr_clear(v); }
    mpfr_t v;
};

int read_precision_env() {
    const char* env = std::getenv("TRISTRIP_PRECISION");
    if (env == nullptr) return 30;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 10 || v > 10000) return 30;
    return static_cast<int>(v);
}

// Both Maclaurin sums below reach a largest term of order exp(+zeta) with
// zeta = (2/3)|z|^{3/2} while the Ai result is of order exp(-zeta), so about
// 2*zeta/ln(10) leading digits cancel. Pad the working precision so the
// result still carries comfortably more than 10 significant digits.
int digits_needed(double z) {
    const double az = std::abs(z);
    return 14 + static_cast<int>(std::ceil((4.0 / 3.0) * az * std::sqrt(az) / std::log(10.0)));
}

// Sums t_0 + t_1 + ... with t_{k+1} = t_k * z3 / ((3k + d1)(3k + d2)).
// Denominators grow quadratically while |z3| <= 1728 in the supported range,
// so the tail decays factorially once 3k passes |z|^{3/2}.
void sum_series(mpfr_t out, const mpfr_t t0, const mpfr_t z3, unsigned d1, unsigned d2) {
    const mpfr_prec_t prec = mpfr_get_prec(out);
    Mp term(prec), tail_bound(prec);
    mpfr_set(out, t0, MPFR_RNDN);
    mpfr_set(term.v, t0, MPFR_RNDN);
    for (unsigned k = 0; k < 100000; ++k) {
        mpfr_mul(term.v, term.v, z3, MPFR_RNDN);
        mpfr_div_ui(term.v, term.v, (3 * k + d1) * (3 * k + d2), MPFR_RNDN);
        mpfr_add(out, out, term.v, MPFR_RNDN);
        if (k < 25) continue;
        // stop once |term| <= max(1, |out|) * 2^-(prec+8)
        mpfr_abs(tail_bound.v, out, MPFR_RNDN);
        if (mpfr_cmp_ui(tail_bound.v, 1) < 0) mpfr_set_ui(tail_bound.v, 1, MPFR_RNDN);
        mpfr_mul_2si(tail_bound.v, tail_bound.v, -(prec + 8), MPFR_RNDN);
        if (mpfr_cmpabs(term.v, tail_bound.v) <= 0) break;
    }
}

// Ai(0), Ai'(0), Bi(0), Bi'(0) from gamma-function values:
//   Ai(0) = 3^-2/3 / G(2/3)   Ai'(0) = -3^-1/3 / G(1/3)
//   Bi(0) = 3^-1/6 / G(2/3)   Bi'(0) =  3^+1/6 / G(1/3)
void origin_values(mpfr_prec_t prec, mpfr_t ai0, mpfr_t aip0, mpfr_t bi0, mpfr_t bip0) {
    Mp g13(prec), g23(prec), root3(prec), root6(prec), t(prec);
    mpfr_set_ui(t.v, 1, MPFR_RNDN);
    mpfr_div_ui(t.v, t.v, 3, MPFR_RNDN);
    mpfr_gamma(g13.v, t.v, MPFR_RNDN);
    mpfr_set_ui(t.v, 2, MPFR_RNDN);
    mpfr_div_ui(t.v, t.v, 3, MPFR_RNDN);
    mpfr_gamma(g23.v, t.v, MPFR_RNDN);
    mpfr_set_ui(t.v, 3, MPFR_RNDN);
    mpfr_rootn_ui(root3.v, t.v, 3, MPFR_RNDN);   // 3^(1/3)
    mpfr_sqrt(root6.v, root3.v, MPFR_RNDN);      // 3^(1/6)

    mpfr_mul(t.v, root3.v, root3.v, MPFR_RNDN);  // 3^(2/3)
    mpfr_mul(t.v, t.v, g23.v, MPFR_RNDN);
    mpfr_ui_div(ai0, 1, t.v, MPFR_RNDN);

    mpfr_mul(t.v, root6.v, g23.v, MPFR_RNDN);
    mpfr_ui_div(bi0, 1, t.v, MPFR_RNDN);

    mpfr_mul(t.v, root3.v, g13.v, MPFR_RNDN);
    mpfr_si_div(aip0, -1, t.v, MPFR_RNDN);

    mpfr_div(bip0, root6.v, g13.v, MPFR_RNDN);
}

// Gamma evaluations dominate a single series pass, so keep the origin
// constants cached at the widest precision requested so far. Values with
// excess precision round correctly in the final multiplications.
class OriginCache {
public:
    void fetch(mpfr_prec_t prec, mpfr_t ai0, mpfr_t aip0, mpfr_t bi0, mpfr_t bip0) {
        if (prec_ < prec) {
            if (prec_ != 0) mpfr_clears(ai0_, aip0_, bi0_, bip0_, static_cast<mpfr_ptr>(nullptr));
            mpfr_inits2(prec, ai0_, aip0_, bi0_, bip0_, static_cast<mpfr_ptr>(nullptr));
            origin_values(prec, ai0_, aip0_, bi0_, bip0_);
            prec_ = prec;
        }
        mpfr_set(ai0, ai0_, MPFR_RNDN);
        mpfr_set(aip0, aip0_, MPFR_RNDN);
        mpfr_set(bi0, bi0_, MPFR_RNDN);
        mpfr_set(bip0, bip0_, MPFR_RNDN);
    }

    ~OriginCache() {
        if (prec_ != 0) mpfr_clears(ai0_, aip0_, bi0_, bip0_, static_cast<mpfr_ptr>(nullptr));
    }

private:
    mpfr_prec_t prec_ = 0;
    mpfr_t ai0_, aip0_, bi0_, bip0_;
};

AiryDerivs eval_core(double z) {
    if (std::isnan(z) || std::abs(z) > kAiryMaxArgument)
        throw RangeError("airy argument outside supported range |z| <= 12");

    const int digits = std::max(read_precision_env(), digits_needed(z));
    const auto prec = static_cast<mpfr_prec_t>(digits * 3.3219280948873626) + 16;

    Mp zz(prec), z3(prec), t0(prec);
    Mp f(prec), g(prec), fp(prec), gp(prec);
    mpfr_set_d(zz.v, z, MPFR_RNDN);
    mpfr_mul(z3.v, zz.v, zz.v, MPFR_RNDN);
    mpfr_mul(z3.v, z3.v, zz.v, MPFR_RNDN);

    // f  = 1 + z^3/(2*3) + ...            f' = z^2/2 + ...
    // g  = z + z^4/(3*4) + ...            g' = 1 + z^3/(1*3) + ...
    mpfr_set_ui(t0.v, 1, MPFR_RNDN);
    sum_series(f.v, t0.v, z3.v, 2, 3);
    sum_series(gp.v, t0.v, z3.v, 1, 3);
    sum_series(g.v, zz.v, z3.v, 3, 4);
    mpfr_mul(t0.v, zz.v, zz.v, MPFR_RNDN);
    mpfr_div_ui(t0.v, t0.v, 2, MPFR_RNDN);
    sum_series(fp.v, t0.v, z3.v, 3, 5);

    Mp ai0(prec), aip0(prec), bi0(prec), bip0(prec), acc(prec), out(prec);
    thread_local OriginCache cache;
    cache.fetch(prec, ai0.v, aip0.v, bi0.v, bip0.v);

    AiryDerivs result;
    mpfr_mul(out.v, ai0.v, f.v, MPFR_RNDN);
    mpfr_mul(acc.v, aip0.v, g.v, MPFR_RNDN);
    mpfr_add(out.v, out.v, acc.v, MPFR_RNDN);
    result.ai = mpfr_get_d(out.v, MPFR_RNDN);

    mpfr_mul(out.v, ai0.v, fp.v, MPFR_RNDN);
    mpfr_mul(acc.v, aip0.v, gp.v, MPFR_RNDN);
    mpfr_add(out.v, out.v, acc.v, MPFR_RNDN);
    result.ai_prime = mpfr_get_d(out.v, MPFR_RNDN);

    mpfr_mul(out.v, bi0.v, f.v, MPFR_RNDN);
    mpfr_mul(acc.v, bip0.v, g.v, MPFR_RNDN);
    mpfr_add(out.v, out.v, acc.v, MPFR_RNDN);
    result.bi = mpfr_get_d(out.v, MPFR_RNDN);

    mpfr_mul(out.v, bi0.v, fp.v, MPFR_RNDN);
    mpfr_mul(acc.v, bip0.v, gp.v, MPFR_RNDN);
    mpfr_add(out.v, out.v, acc.v, MPFR_RNDN);
    result.bi_prime = mpfr_get_d(out.v, MPFR_RNDN);
    return result;
}

struct Bracket {
    double lo, hi, w_lo, w_hi;
};

Eigenvalue refine_root(Bracket b, double a) {
    // Residual target is relative to the size of the cross product over the
    // bracket, not its tiny value at the root.
    double scale = std::max(std::abs(b.w_lo), std::abs(b.w_hi));
    for (int i = 1; i < 8; ++i) {
        const double mu = b.lo + i * (b.hi - b.lo) / 8;
        scale = std::max(scale, std::abs(cross_product(mu, a)));
    }
    const double target = 1e-10 * scale;

    double best_mu = std::abs(b.w_lo) <= std::abs(b.w_hi) ? b.lo : b.hi;
    double best_w = std::abs(b.w_lo) <= std::abs(b.w_hi) ? b.w_lo : b.w_hi;
    while (b.hi - b.lo > 1e-10 || std::abs(best_w) > target) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;  // double grid exhausted
        const double w_mid = cross_product(mid, a);
        if (std::abs(w_mid) < std::abs(best_w)) {
            best_mu = mid;
            best_w = w_mid;
        }
        if (w_mid == 0.0) break;
        if ((w_mid < 0) == (b.w_lo < 0)) {
            b.lo = mid;
            b.w_lo = w_mid;
        } else {
            b.hi = mid;
            b.w_hi = w_mid;
        }
    }
    return {best_mu, a, best_w};
}

}  // namespace

int precision_digits() { return read_precision_env(); }

AiryPair airy_eval(double z) {
    const AiryDerivs d = eval_core(z);
    return {d.ai, d.bi};
}

AiryDerivs airy_eval_derivs(double z) { return eval_core(z); }

double cross_product(double mu, double a) {
    if (!(mu >= 0)) throw std::invalid_argument("mu must be nonnegative");
    if (!(a > 0)) throw std::invalid_argument("half-width must be positive");
    const AiryPair plus = airy_eval(mu * a);
    const AiryPair minus = airy_eval(-mu * a);
    return minus.ai * plus.bi - plus.ai * minus.bi;
}

std::vector<Eigenvalue> find_eigenvalues(double a, std::size_t count) {
    if (!(a > 0)) throw std::invalid_argument("half-width must be positive");
    if (count == 0) throw std::invalid_argument("count must be at least 1");

    // Scan with a fixed step in mu*a. The cross product vanishes at mu = 0,
    // so start one step in; its zeros (spacing > 1 in mu*a) cannot hide
    // inside a 0.05 cell.
    const double step = 0.05 / a;
    std::vector<Eigenvalue> roots;
    double lo = step;
    double w_lo = cross_product(lo, a);
    while (roots.size() < count) {
        const double hi = lo + step;
        if (hi * a > kAiryMaxArgument)
            throw RangeError("eigenvalue scan would leave the supported Airy range");
        const double w_hi = cross_product(hi, a);
        if (w_hi == 0.0) {
            roots.push_back({hi, a, 0.0});
            lo = hi + step;
            if (lo * a > kAiryMaxArgument)
                throw RangeError("eigenvalue scan would leave the supported Airy range");
            w_lo = cross_product(lo, a);
            continue;
        }
        if ((w_lo < 0) != (w_hi < 0)) roots.push_back(refine_root({lo, hi, w_lo, w_hi}, a));
        lo = hi;
        w_lo = w_hi;
    }
    return roots;
}

double eigenmode_value(const Eigenmode& mode, double x, double y) {
    if (!(mode.mu >= 0) || !(mode.half_width > 0))
        throw std::invalid_argument("mode requires mu >= 0 and positive half-width");
    if (std::abs(y) > mode.half_width)
        throw std::invalid_argument("evaluation point outside the strip");
    const AiryPair at_y = airy_eval(mode.mu * y);
    const AiryPair at_bottom = airy_eval(-mode.mu * mode.half_width);
    const double wave = mode.c1 * std::sin(std::pow(mode.mu, 1.5) * x) +
                        mode.c2 * std::cos(std::pow(mode.mu, 1.5) * x);
    return wave * (at_y.bi * at_bottom.ai - at_y.ai * at_bottom.bi);
}

double eigenmode_residual(const Eigenmode& mode, const GridSpec& grid) {
    if (grid.nx < 3 || grid.ny < 3)
        throw std::invalid_argument("grid needs at least 3 nodes per direction");
    if (!(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min))
        throw std::invalid_argument("grid extents must be increasing");
    if (std::max(std::abs(grid.y_min), std::abs(grid.y_max)) > mode.half_width)
        throw std::invalid_argument("grid leaves the strip");

    const double hx = (grid.x_max - grid.x_min) / static_cast<double>(grid.nx - 1);
    const double hy = (grid.y_max - grid.y_min) / static_cast<double>(grid.ny - 1);

    std::vector<double> u(grid.nx * grid.ny);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return u[j * grid.nx + i]; };
    // Pin the last node to the stated extent so rounding in y_min + j*hy
    // cannot push a boundary node just outside the strip.
    for (std::size_t j = 0; j < grid.ny; ++j) {
        const double y =
            j + 1 == grid.ny ? grid.y_max : grid.y_min + static_cast<double>(j) * hy;
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double x =
                i + 1 == grid.nx ? grid.x_max : grid.x_min + static_cast<double>(i) * hx;
            at(i, j) = eigenmode_value(mode, x, y);
        }
    }

    double worst = 0;
    for (std::size_t j = 1; j + 1 < grid.ny; ++j) {
        const double y = grid.y_min + static_cast<double>(j) * hy;
        for (std::size_t i = 1; i + 1 < grid.nx; ++i) {
            const double uxx = (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / (hx * hx);
            const double uyy = (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / (hy * hy);
            worst = std::max(worst, std::abs(y * uxx + uyy));
        }
    }
    return worst;
}

}  // namespace tristrip
