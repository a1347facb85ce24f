#pragma once

#include <functional>
#include <string>
#include <vector>

namespace slopes {

// Gaussian-curvature profile K(u) <= -1 on [0, U], either a closed-form
// callable or piecewise-linear interpolation of (u, K) samples. The K <= -1
// hypothesis is checked on the evaluation grid (nodes and midpoints) before
// any integration starts.
class CurvatureProfile {
public:
    static CurvatureProfile closed_form(std::function<double(double)> k, double u_max,
                                        std::string label = "closed-form");
    // Samples must be strictly increasing in u and start at u = 0;
    // U is the last sample's u.
    static CurvatureProfile from_samples(std::vector<double> u, std::vector<double> k,
                                         std::string label = "samples");
    // Plain-text two-column (u, K) file; '#' starts a comment line.
    static CurvatureProfile load(const std::string& path);

    double operator()(double u) const;
    double u_max() const { return u_max_; }
    const std::string& label() const { return label_; }

    // Throws ProfileError naming the offending u if K(u) > -1 at any of the
    // n_intervals+1 grid nodes or the interval midpoints.
    void check_hypothesis(int n_intervals) const;

private:
    CurvatureProfile() = default;
    std::function<double(double)> eval_;
    double u_max_ = 0.0;
    std::string label_;
    std::vector<double> sample_points_; // piecewise-linear extrema; empty for closed forms
};

// Uniform-grid samples of a scalar function on [0, U]; grid[i] = i * step.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;
};

// Jacobi field with its derivative on the shared grid.
struct JacobiSolution {
    std::vector<double> grid;
    std::vector<double> j;
    std::vector<double> j_prime;
};

enum class CurveOrientation { Inner, Outer };

struct ComparisonReport {
    std::vector<double> grid;
    std::vector<double> kg;
    std::vector<double> h;
    std::vector<double> j;
    double margin = 0.0;          // min over grid of h(u) - kg(u)
    bool certified = false;       // margin >= -tolerance
    // Residual check of (kg-h)' <= (kg-h)(kg+h) at interior nodes via
    // central differences: max over nodes of lhs - rhs.
    double diff_ineq_max_residual = 0.0;
    bool diff_ineq_ok = false;
    double max_kg = 0.0;          // kg stays <= 0 for valid profiles
    double tolerance = 0.0;
    double step = 0.0;
    double u_max = 0.0;
    std::string profile_label;
};

// Number of integration intervals a step divides [0, U] into. The actual
// step is U/n with n = ceil(U/step), so the grid lands exactly on U.
int integration_intervals(double u_max, double step);

// Default integration step for [0, U]: U / 10^5.
double default_step(double u_max);

// Boundary-orthogonal geodesic curvature kg on [0, U] from the Riccati
// equation kg' = K + kg^2, kg(0) = 0, classical fixed-step 4th-order
// integration. Throws IntegrationError (with the blow-up u) if |kg|
// exceeds 1e6, which cannot happen for K <= -1.
SampledFunction integrate_riccati(const CurvatureProfile& profile, double step);

// Jacobi field J'' = -K J, J(0) = 1, J'(0) = 0 (geodesic boundary), same
// integrator. For K <= -1, J >= cosh and J' >= 0.
JacobiSolution integrate_jacobi(const CurvatureProfile& profile, double step);

// Geodesic curvature of the v-curve through grid index i of a sampled J:
// +-(1/J) dJ/du, sign chosen by which side of the curve is "inside"
// (Inner orients it as the boundary of {u <= c}, Outer of {u >= c}).
// Central differences inside, one-sided second-order at the endpoints.
double vcurve_geodesic_curvature(const SampledFunction& j, std::size_t index,
                                 CurveOrientation orientation);

// Geodesic curvature of a parametrized curve t -> (u(t), v(t)) in the
// orthogonal metric E du^2 + G dv^2, via the angle form
//   k = (1/sqrt(E u'^2 + G v'^2)) (phi' + (G_u v' - E_v u')/(2 sqrt(EG)))
// with phi the angle against the u-curves. All derivatives numerical.
double general_geodesic_curvature(const std::function<double(double, double)>& metric_e,
                                  const std::function<double(double, double)>& metric_g,
                                  const std::function<std::pair<double, double>(double)>& curve,
                                  double t);

inline constexpr double kDefaultComparisonTolerance = 1e-7;

// Integrates kg and J, evaluates h on the same grid and certifies
// kg(u) <= h(u) + tolerance together with the differential inequality
// (kg-h)' <= (kg-h)(kg+h) + tolerance at interior nodes.
ComparisonReport verify_comparison(const CurvatureProfile& profile, double step,
                                   double tolerance = kDefaultComparisonTolerance);

} // namespace slopes
