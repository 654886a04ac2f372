#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tristrip {

// Argument outside the supported numeric range.
class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Largest |z| at which airy_eval is supported. The series evaluation works
// well past this, but the guarantee of 10 significant digits is only tested
// up to here.
inline constexpr double kAiryMaxArgument = 12.0;

struct AiryPair {
    double ai = 0;
    double bi = 0;
};

struct AiryDerivs {
    double ai = 0;
    double ai_prime = 0;
    double bi = 0;
    double bi_prime = 0;
};

// Ai(z) and Bi(z), accurate to at least 10 significant digits for
// |z| <= kAiryMaxArgument. Throws RangeError outside that range.
AiryPair airy_eval(double z);
AiryDerivs airy_eval_derivs(double z);

// Requested working precision in decimal digits, from TRISTRIP_PRECISION
// (default 30). Evaluation may use more to absorb cancellation.
int precision_digits();

// W(mu) = Ai(-mu a) Bi(mu a) - Ai(mu a) Bi(-mu a). Zeros of W over mu > 0
// are the eigenvalues below. Depends on mu and a only through mu*a.
double cross_product(double mu, double a);

struct Eigenvalue {
    double mu = 0;
    double half_width = 0;
    double residual = 0;  // cross_product at the reported mu
};

// First `count` positive zeros of cross_product(mu, a), increasing in mu.
// Throws RangeError if the scan would need Airy values beyond the supported
// range before finding them all.
std::vector<Eigenvalue> find_eigenvalues(double a, std::size_t count);

// u(x, y) = (c1 sin(mu^{3/2} x) + c2 cos(mu^{3/2} x))
//           * (Bi(mu y) Ai(-mu a) - Ai(mu y) Bi(-mu a))
// solves y u_xx + u_yy = 0 and vanishes identically on y = -a; when mu is an
// eigenvalue it also vanishes on y = +a up to the eigenvalue residual.
struct Eigenmode {
    double mu = 0;
    double half_width = 0;
    double c1 = 0;
    double c2 = 0;
};

double eigenmode_value(const Eigenmode& mode, double x, double y);

struct GridSpec {
    double x_min = 0;
    double x_max = 0;
    double y_min = 0;
    double y_max = 0;
    std::size_t nx = 0;
    std::size_t ny = 0;
};

// Max norm over interior grid nodes of the centered second-order
// finite-difference discretization of y u_xx + u_yy applied to the mode.
double eigenmode_residual(const Eigenmode& mode, const GridSpec& grid);

}  // namespace tristrip
