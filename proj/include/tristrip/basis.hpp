#pragma once

#include "tristrip/polynomial.hpp"
#include "tristrip/strip.hpp"

#include <cstddef>
#include <vector>

namespace tristrip {

enum class Side { Lower, Upper };

constexpr Side opposite(Side s) { return s == Side::Lower ? Side::Upper : Side::Lower; }

// Generating polynomials in y for one side of a strip. Entry m (written
// p_{2m} below) satisfies
//
//   p_0      affine, equal to 1 on this family's side and 0 on the other;
//   p_{2m}'' = -(2m)(2m-1) * y * p_{2m-2},  p_{2m} = 0 at both endpoints.
//
// These are exactly the y-profiles needed so that
// sum_m binom(n, 2m) x^{n-2m} p_{2m}(y) is annihilated by the strip
// operator while matching x^n on this side and 0 on the other.
// Entries are built on demand and cached; the cache only ever grows.
class BasisFamily {
public:
    BasisFamily(Strip strip, Side side)
        : strip_(std::move(strip)), side_(side) {}

    const Strip& strip() const { return strip_; }
    Side side() const { return side_; }
    std::size_t size() const { return polys_.size(); }
    const std::vector<UniPoly>& polys() const { return polys_; }
    const UniPoly& poly(std::size_t m) const;  // requires m < size()

    // Extends the family so indices 0..max_index are available.
    void extend(std::size_t max_index);

private:
    BasisFamily(Strip strip, Side side, std::vector<UniPoly> polys)
        : strip_(std::move(strip)), side_(side), polys_(std::move(polys)) {}

    friend BasisFamily reflect_family(const BasisFamily& family);

    Strip strip_;
    Side side_;
    std::vector<UniPoly> polys_;
};

// Family with entries 0..max_index already built.
BasisFamily build_family(const Strip& strip, Side side, std::size_t max_index);

// sum_m binom(n, 2m) x^{n-2m} p_{2m}(y): the degree-n solution of the
// homogeneous problem whose trace is x^n on the family's side and 0 on the
// other. Extends the family cache as needed.
BiPoly harmonic_lift(BasisFamily& family, unsigned n);
BiPoly harmonic_lift(const Strip& strip, Side side, unsigned n);

// For a symmetric strip (-a, a), the opposite side's family is obtained by
// the reflection q_m(y) = (-1)^m p_m(-y). Throws std::invalid_argument when
// the strip is not symmetric.
BasisFamily reflect_family(const BasisFamily& family);

}  // namespace tristrip
