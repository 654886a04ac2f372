#include "tristrip/particular.hpp"

namespace tristrip {

// Term j of the inverse of x^n y^m is
//
//   (-1)^j * n! * m! * prod_{k=1..j} (m + 3k)
//   ----------------------------------------- * x^{n-2j} * y^{m+3j+2}
//         (m + 3j + 2)! * (n - 2j)!
//
// for j = 0 .. floor(n/2). The second y-derivative of term j+1 cancels
// y times the second x-derivative of term j, and the second y-derivative of
// term 0 is exactly x^n y^m, so the sum telescopes. The j = 0 coefficient is
// 1/((m+1)(m+2)).
BiPoly monomial_inverse(unsigned n, unsigned m) {
    BiPoly result;
    const Integer n_fact = factorial(n);
    const Integer m_fact = factorial(m);
    Integer shifted_prod = 1;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        if (j > 0) shifted_prod *= m + 3 * j;
        Integer num = n_fact * m_fact * shifted_prod;
        if (j % 2 == 1) num = -num;
        const Integer den = factorial(m + 3 * j + 2) * factorial(n - 2 * j);
        result += BiPoly::monomial(Rational(num, den), n - 2 * j, m + 3 * j + 2);
    }
    return result;
}

BiPoly particular_solution(const BiPoly& rhs) {
    BiPoly result;
    for (const auto& [e, c] : rhs.terms())
        result += c * monomial_inverse(e.x, e.y);
    return result;
}

}  // namespace tristrip
