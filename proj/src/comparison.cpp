#include "slopes/comparison.hpp"

#include "slopes/errors.hpp"
#include "slopes/hypmath.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace slopes {

namespace {

constexpr double kBlowupLimit = 1e6;

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

} // namespace

CurvatureProfile CurvatureProfile::closed_form(std::function<double(double)> k, double u_max,
                                               std::string label) {
    if (!(u_max > 0.0)) {
        throw DomainError("CurvatureProfile: U must be > 0, got " + std::to_string(u_max));
    }
    if (!k) throw ConfigError("CurvatureProfile: empty callable");
    CurvatureProfile p;
    p.eval_ = std::move(k);
    p.u_max_ = u_max;
    p.label_ = std::move(label);
    return p;
}

CurvatureProfile CurvatureProfile::from_samples(std::vector<double> u, std::vector<double> k,
                                                std::string label) {
    if (u.size() != k.size()) throw ConfigError("CurvatureProfile: u/K size mismatch");
    if (u.size() < 2) throw ConfigError("CurvatureProfile: need at least 2 samples");
    if (u.front() != 0.0) throw ConfigError("CurvatureProfile: samples must start at u = 0");
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (!(u[i] > u[i - 1])) throw ConfigError("CurvatureProfile: u samples must increase");
    }
    for (double v : u) {
        if (!std::isfinite(v)) throw ConfigError("CurvatureProfile: non-finite u sample");
    }
    for (double v : k) {
        if (!std::isfinite(v)) throw ConfigError("CurvatureProfile: non-finite K sample");
    }
    CurvatureProfile p;
    p.u_max_ = u.back();
    p.label_ = std::move(label);
    p.sample_points_ = u;
    p.eval_ = [xs = std::move(u), ys = std::move(k)](double x) { return interpolate(xs, ys, x); };
    return p;
}

CurvatureProfile CurvatureProfile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile file: " + path);
    std::vector<double> us, ks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double u, k;
        if (!(ss >> u)) continue; // blank / comment-only line
        if (!(ss >> k)) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected two columns (u K)");
        }
        us.push_back(u);
        ks.push_back(k);
    }
    if (us.empty()) throw ConfigError(path + ": no samples");
    return from_samples(std::move(us), std::move(ks), path);
}

double CurvatureProfile::operator()(double u) const { return eval_(u); }

void CurvatureProfile::check_hypothesis(int n_intervals) const {
    auto check_at = [this](double u) {
        const double k = eval_(u);
        if (!std::isfinite(k)) {
            throw ProfileError("curvature profile is non-finite at u = " + std::to_string(u), u);
        }
        if (k > -1.0) {
            throw ProfileError("curvature hypothesis K <= -1 fails at u = " + std::to_string(u) +
                                   " (K = " + std::to_string(k) + ")",
                               u);
        }
    };
    // a piecewise-linear profile attains its extrema at the samples
    for (double u : sample_points_) check_at(u);
    const double h = u_max_ / n_intervals;
    for (int i = 0; i <= 2 * n_intervals; ++i) {
        check_at(0.5 * h * i); // nodes and midpoints
    }
}

int integration_intervals(double u_max, double step) {
    if (!(step > 0.0)) throw DomainError("step must be > 0");
    if (step > u_max / 10.0) {
        throw DomainError("step must be <= U/10 (got step " + std::to_string(step) + " for U " +
                          std::to_string(u_max) + ")");
    }
    return static_cast<int>(std::ceil(u_max / step - 1e-9));
}

double default_step(double u_max) { return u_max / 1e5; }

SampledFunction integrate_riccati(const CurvatureProfile& profile, double step) {
    const double u_max = profile.u_max();
    const int n = integration_intervals(u_max, step);
    profile.check_hypothesis(n);
    const double h = u_max / n;

    SampledFunction out;
    out.grid.resize(n + 1);
    out.values.resize(n + 1);
    out.grid[0] = 0.0;
    out.values[0] = 0.0;

    auto f = [&profile](double u, double k) { return profile(u) + k * k; };

    double k = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = h * i;
        const double k1 = f(u, k);
        const double k2 = f(u + 0.5 * h, k + 0.5 * h * k1);
        const double k3 = f(u + 0.5 * h, k + 0.5 * h * k2);
        const double k4 = f(u + h, k + h * k3);
        k += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
        if (!std::isfinite(k) || std::abs(k) > kBlowupLimit) {
            throw IntegrationError("Riccati integration blew up at u = " + std::to_string(u + h),
                                   u + h);
        }
        out.grid[i + 1] = h * (i + 1);
        out.values[i + 1] = k;
    }
    return out;
}

JacobiSolution integrate_jacobi(const CurvatureProfile& profile, double step) {
    const double u_max = profile.u_max();
    const int n = integration_intervals(u_max, step);
    profile.check_hypothesis(n);
    const double h = u_max / n;

    JacobiSolution out;
    out.grid.resize(n + 1);
    out.j.resize(n + 1);
    out.j_prime.resize(n + 1);
    out.grid[0] = 0.0;
    out.j[0] = 1.0;
    out.j_prime[0] = 0.0;

    // System (J, J')' = (J', -K J).
    double j = 1.0, jp = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = h * i;
        const double a1 = jp;
        const double b1 = -profile(u) * j;
        const double a2 = jp + 0.5 * h * b1;
        const double b2 = -profile(u + 0.5 * h) * (j + 0.5 * h * a1);
        const double a3 = jp + 0.5 * h * b2;
        const double b3 = -profile(u + 0.5 * h) * (j + 0.5 * h * a2);
        const double a4 = jp + h * b3;
        const double b4 = -profile(u + h) * (j + h * a3);
        j += h / 6.0 * (a1 + 2.0 * (a2 + a3) + a4);
        jp += h / 6.0 * (b1 + 2.0 * (b2 + b3) + b4);
        if (!std::isfinite(j) || std::abs(j) > kBlowupLimit * kBlowupLimit) {
            throw IntegrationError("Jacobi integration blew up at u = " + std::to_string(u + h),
                                   u + h);
        }
        out.grid[i + 1] = h * (i + 1);
        out.j[i + 1] = j;
        out.j_prime[i + 1] = jp;
    }
    return out;
}

double vcurve_geodesic_curvature(const SampledFunction& j, std::size_t index,
                                 CurveOrientation orientation) {
    const std::size_t n = j.grid.size();
    if (n < 3) throw DomainError("vcurve_geodesic_curvature: need at least 3 grid points");
    if (index >= n) throw DomainError("vcurve_geodesic_curvature: index out of range");
    const double h = j.grid[1] - j.grid[0];
    double ju;
    if (index == 0) {
        ju = (-3.0 * j.values[0] + 4.0 * j.values[1] - j.values[2]) / (2.0 * h);
    } else if (index == n - 1) {
        ju = (3.0 * j.values[n - 1] - 4.0 * j.values[n - 2] + j.values[n - 3]) / (2.0 * h);
    } else {
        ju = (j.values[index + 1] - j.values[index - 1]) / (2.0 * h);
    }
    const double kg = ju / j.values[index];
    return orientation == CurveOrientation::Inner ? kg : -kg;
}

namespace {

// Angle of the curve tangent against the u-direction, from one-sided-safe
// central differences of the curve. Caller unwraps.
double tangent_angle(const std::function<std::pair<double, double>(double)>& curve,
                     const std::function<double(double, double)>& metric_e,
                     const std::function<double(double, double)>& metric_g, double t, double ht) {
    const auto [u_plus, v_plus] = curve(t + ht);
    const auto [u_minus, v_minus] = curve(t - ht);
    const double du = (u_plus - u_minus) / (2.0 * ht);
    const double dv = (v_plus - v_minus) / (2.0 * ht);
    const auto [u, v] = curve(t);
    const double e = metric_e(u, v);
    const double g = metric_g(u, v);
    if (!(e > 0.0) || !(g > 0.0)) {
        throw DomainError("general_geodesic_curvature: metric not positive along curve");
    }
    const double speed2 = e * du * du + g * dv * dv;
    if (speed2 < 1e-12) {
        throw DomainError("general_geodesic_curvature: degenerate curve point at t = " +
                          std::to_string(t));
    }
    return std::atan2(std::sqrt(g) * dv, std::sqrt(e) * du);
}

double unwrap_near(double phi, double reference) {
    constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
    while (phi - reference > 3.14159265358979323846) phi -= kTwoPi;
    while (phi - reference < -3.14159265358979323846) phi += kTwoPi;
    return phi;
}

} // namespace

double general_geodesic_curvature(const std::function<double(double, double)>& metric_e,
                                  const std::function<double(double, double)>& metric_g,
                                  const std::function<std::pair<double, double>(double)>& curve,
                                  double t) {
    const double ht = 1e-5;   // tangent differencing
    const double hp = 1e-4;   // phi differencing
    const double hm = 1e-6;   // metric-coefficient differencing

    const auto [u, v] = curve(t);
    const double e = metric_e(u, v);
    const double g = metric_g(u, v);
    if (!(e > 0.0) || !(g > 0.0)) {
        throw DomainError("general_geodesic_curvature: metric not positive at curve point");
    }

    const auto [up, vp] = curve(t + ht);
    const auto [um, vm] = curve(t - ht);
    const double du = (up - um) / (2.0 * ht);
    const double dv = (vp - vm) / (2.0 * ht);
    const double speed2 = e * du * du + g * dv * dv;
    if (speed2 < 1e-12) {
        throw DomainError("general_geodesic_curvature: degenerate curve point at t = " +
                          std::to_string(t));
    }

    // dphi/dt by 4th-order central differences with 2pi-unwrapping.
    const double phi0 = tangent_angle(curve, metric_e, metric_g, t, ht);
    double phi_m2 = unwrap_near(tangent_angle(curve, metric_e, metric_g, t - 2.0 * hp, ht), phi0);
    double phi_m1 = unwrap_near(tangent_angle(curve, metric_e, metric_g, t - hp, ht), phi0);
    double phi_p1 = unwrap_near(tangent_angle(curve, metric_e, metric_g, t + hp, ht), phi0);
    double phi_p2 = unwrap_near(tangent_angle(curve, metric_e, metric_g, t + 2.0 * hp, ht), phi0);
    const double dphi = (-phi_p2 + 8.0 * phi_p1 - 8.0 * phi_m1 + phi_m2) / (12.0 * hp);

    const double g_u = (metric_g(u + hm, v) - metric_g(u - hm, v)) / (2.0 * hm);
    const double e_v = (metric_e(u, v + hm) - metric_e(u, v - hm)) / (2.0 * hm);

    const double metric_term = (g_u * dv - e_v * du) / (2.0 * std::sqrt(e * g));
    return (dphi + metric_term) / std::sqrt(speed2);
}

ComparisonReport verify_comparison(const CurvatureProfile& profile, double step,
                                   double tolerance) {
    if (!(tolerance > 0.0)) throw DomainError("verify_comparison: tolerance must be > 0");
    SampledFunction kg = integrate_riccati(profile, step);
    JacobiSolution jac = integrate_jacobi(profile, step);

    const std::size_t n = kg.grid.size();
    ComparisonReport report;
    report.grid = kg.grid;
    report.kg = kg.values;
    report.h.resize(n);
    report.j = jac.j;
    report.tolerance = tolerance;
    report.step = kg.grid[1] - kg.grid[0];
    report.u_max = profile.u_max();
    report.profile_label = profile.label();

    double margin = std::numeric_limits<double>::infinity();
    double max_kg = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        report.h[i] = comparison_h(kg.grid[i]);
        margin = std::min(margin, report.h[i] - report.kg[i]);
        max_kg = std::max(max_kg, report.kg[i]);
    }
    report.margin = margin;
    report.max_kg = max_kg;
    report.certified = margin >= -tolerance;

    // (kg - h)' <= (kg - h)(kg + h) at interior nodes, derivative by
    // central differences on the integration grid.
    const double h_step = report.step;
    double max_residual = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double d_i = report.kg[i] - report.h[i];
        const double d_prev = report.kg[i - 1] - report.h[i - 1];
        const double d_next = report.kg[i + 1] - report.h[i + 1];
        const double lhs = (d_next - d_prev) / (2.0 * h_step);
        const double rhs = d_i * (report.kg[i] + report.h[i]);
        max_residual = std::max(max_residual, lhs - rhs);
    }
    report.diff_ineq_max_residual = max_residual;
    report.diff_ineq_ok = max_residual <= tolerance;
    return report;
}

} // namespace slopes
