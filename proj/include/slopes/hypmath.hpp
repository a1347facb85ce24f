#pragma once

#include <cstdint>

namespace slopes {

// Which disk-area formula to use. The two differ by the constant 4*pi:
//   TrueArea:     A(R) = 4 pi sinh^2(R/2) = 2 pi (cosh R - 1),
//   PaperVariant: A(R) = 4 pi / (1 - tanh^2(R/2)) = 2 pi (cosh R + 1).
// PaperVariant is the formula the slope-count bound is usually quoted with;
// TrueArea is the hyperbolic disk area. Bound reports carry both.
enum class AreaConvention : std::uint8_t { TrueArea, PaperVariant };

// Comparison function h(u) = (e^{-u} - e^{u}) / (e^{-u} + e^{u}) = -tanh(u),
// the geodesic-curvature profile of equidistants in constant curvature -1.
// Domain: u >= 0. Strictly decreasing with range (-1, 0].
double comparison_h(double u);

// Area of the hyperbolic disk of radius R under the chosen convention.
// Domain: R >= 0.
double disk_area(double radius, AreaConvention convention);

// Collar half-width S(x) = arcsinh(1 / sinh(x/2)) of a simple closed
// geodesic of length x. Domain: x > 0 (pole at 0); strictly decreasing.
double collar_halfwidth(double geodesic_length);

// Area of the collar of a geodesic of length d: 2 d / sinh(d/2).
// Domain: d > 0. At least 2 whenever d <= 1.75.
double collar_area(double geodesic_length);

// Lower bound on the collar width of a totally geodesic boundary of genus
// g >= 2: (1/4) log((g+1)/(g-1)), log natural. Pole at g = 1 (torus
// boundaries are handled by an external per-torus count instead).
double basmajian_width(int boundary_genus);

// Default short-geodesic cutoff: S(d) > d/2 and d/sinh(d/2) >= 1.76 hold
// for every d <= this value.
inline constexpr double kDefaultCollarCutoff = 1.75;

// Inputs closer than this to a domain boundary with a pole are rejected.
inline constexpr double kPoleGuard = 1e-12;

} // namespace slopes
