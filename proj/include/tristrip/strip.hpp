#pragma once

#include "tristrip/rational.hpp"

#include <stdexcept>
#include <utility>

namespace tristrip {

enum class StripType { Elliptic, Hyperbolic, Mixed };

// Horizontal strip lower < y < upper with exact rational endpoints.
class Strip {
public:
    Strip(Rational lower, Rational upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (!(lower_ < upper_))
            throw std::invalid_argument("strip requires lower < upper");
    }

    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }
    Rational width() const { return upper_ - lower_; }
    bool is_symmetric() const { return lower_ == -upper_; }

    // Sign of y over the interior: elliptic for y >= 0 throughout,
    // hyperbolic for y <= 0 throughout, mixed when the strip straddles 0.
    StripType classification() const {
        if (lower_.sign() >= 0) return StripType::Elliptic;
        if (upper_.sign() <= 0) return StripType::Hyperbolic;
        return StripType::Mixed;
    }

    friend bool operator==(const Strip&, const Strip&) = default;

private:
    Rational lower_;
    Rational upper_;
};

}  // namespace tristrip
