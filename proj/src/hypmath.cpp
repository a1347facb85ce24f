#include "slopes/hypmath.hpp"

#include "slopes/errors.hpp"

#include <cmath>
#include <string>

namespace slopes {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double comparison_h(double u) {
    if (!(u >= 0.0)) {
        throw DomainError("comparison_h: u must be >= 0, got " + std::to_string(u));
    }
    // (e^{-u} - e^{u}) / (e^{-u} + e^{u}); -tanh(u) evaluates the same
    // quotient without overflow for large u.
    return -std::tanh(u);
}

double disk_area(double radius, AreaConvention convention) {
    if (!(radius >= 0.0)) {
        throw DomainError("disk_area: radius must be >= 0, got " + std::to_string(radius));
    }
    const double s = std::sinh(0.5 * radius);
    const double true_area = 4.0 * kPi * s * s; // = 2 pi (cosh R - 1)
    if (convention == AreaConvention::TrueArea) return true_area;
    // 4 pi / (1 - tanh^2(R/2)) = 2 pi (cosh R + 1) = true area + 4 pi.
    return true_area + 4.0 * kPi;
}

double collar_halfwidth(double geodesic_length) {
    if (!(geodesic_length > kPoleGuard)) {
        throw DomainError("collar_halfwidth: length must be > 0 (pole at 0), got " +
                          std::to_string(geodesic_length));
    }
    return std::asinh(1.0 / std::sinh(0.5 * geodesic_length));
}

double collar_area(double geodesic_length) {
    if (!(geodesic_length > kPoleGuard)) {
        throw DomainError("collar_area: length must be > 0 (pole at 0), got " +
                          std::to_string(geodesic_length));
    }
    // 2 d sinh(S(d)) = 2 d / sinh(d/2).
    return 2.0 * geodesic_length / std::sinh(0.5 * geodesic_length);
}

double basmajian_width(int boundary_genus) {
    if (boundary_genus <= 1) {
        throw DomainError("basmajian_width: boundary genus must be >= 2 (pole at 1), got " +
                          std::to_string(boundary_genus));
    }
    const double g = static_cast<double>(boundary_genus);
    return 0.25 * std::log((g + 1.0) / (g - 1.0));
}

} // namespace slopes
