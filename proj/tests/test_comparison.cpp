#include "slopes/comparison.hpp"

#include "slopes/errors.hpp"
#include "slopes/lattice.hpp" // SplitMix64 for deterministic random profiles

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace slopes;

namespace {

CurvatureProfile constant_profile(double k, double u_max) {
    return CurvatureProfile::closed_form([k](double) { return k; }, u_max, "constant");
}

// Deterministic smooth random profile with K <= -1: a constant dip, a
// sinusoidal ripple and a quadratic well, all nonpositive contributions.
CurvatureProfile random_profile(std::uint64_t seed, double* u_out = nullptr) {
    SplitMix64 rng(seed);
    const double a = rng.next_double();             // constant depth in [0,1)
    const double b = 0.5 * rng.next_double();       // ripple amplitude
    const double omega = 0.5 + 2.5 * rng.next_double();
    const double phase = 6.283185307179586 * rng.next_double();
    const double c = rng.next_double();             // quadratic depth
    const double u_max = 2.0 + 3.0 * rng.next_double();
    if (u_out) *u_out = u_max;
    auto k = [=](double u) {
        return -1.0 - a - b * (1.0 + std::sin(omega * u + phase)) -
               c * (u / u_max) * (u / u_max);
    };
    return CurvatureProfile::closed_form(k, u_max, "random-" + std::to_string(seed));
}

double max_abs_diff(const std::vector<double>& grid, const std::vector<double>& values,
                    double (*reference)(double)) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(values[i] - reference(grid[i])));
    }
    return worst;
}

} // namespace

TEST_CASE("riccati: K = -1 integrates to -tanh") {
    const auto kg = integrate_riccati(constant_profile(-1.0, 5.0), 1e-4);
    CHECK(kg.grid.size() == 50001);
    CHECK(max_abs_diff(kg.grid, kg.values, [](double u) { return -std::tanh(u); }) <= 1e-8);
}

TEST_CASE("riccati: K = -4 integrates to -2 tanh(2u)") {
    const auto kg = integrate_riccati(constant_profile(-4.0, 3.0), 1e-4);
    CHECK(max_abs_diff(kg.grid, kg.values, [](double u) { return -2.0 * std::tanh(2.0 * u); }) <=
          1e-7);
}

TEST_CASE("riccati: step-halving converges at 4th order on K = -(1+u^2)") {
    auto profile = CurvatureProfile::closed_form([](double u) { return -(1.0 + u * u); }, 2.0);
    double prev = integrate_riccati(profile, 0.02).values.back();
    double step = 0.01;
    double value = integrate_riccati(profile, step).values.back();
    int halvings = 0;
    while (std::abs(value - prev) > 1e-9 && halvings < 12) {
        prev = value;
        step *= 0.5;
        value = integrate_riccati(profile, step).values.back();
        ++halvings;
    }
    CHECK(std::abs(value - prev) <= 1e-9); // Richardson-style settle
    CHECK(value < 0.0);
}

TEST_CASE("riccati: 4th-order error decay against the closed form") {
    auto exact = [](double u) { return -2.0 * std::tanh(2.0 * u); };
    auto profile = constant_profile(-4.0, 3.0);
    const auto coarse = integrate_riccati(profile, 0.01);
    const auto fine = integrate_riccati(profile, 0.005);
    const double err_coarse = max_abs_diff(coarse.grid, coarse.values, exact);
    const double err_fine = max_abs_diff(fine.grid, fine.values, exact);
    CHECK(err_coarse / err_fine >= 8.0);
}

TEST_CASE("riccati: hypothesis check names the offending u") {
    auto bad = CurvatureProfile::closed_form(
        [](double u) { return u < 0.5 ? -2.0 : -0.5; }, 1.0, "bad");
    try {
        integrate_riccati(bad, 1e-3);
        FAIL("expected ProfileError");
    } catch (const ProfileError& e) {
        CHECK(e.offending_u >= 0.5);
        CHECK(e.offending_u <= 1.0);
    }
}

TEST_CASE("riccati: blow-up guard reports the blow-up location") {
    // K <= -1 keeps the true solution in (-sqrt(sup|K|), 0], but a stiff
    // profile under a fixed step destabilizes the scheme; the guard must
    // catch that instead of returning garbage.
    auto stiff = constant_profile(-1e10, 1.0);
    try {
        integrate_riccati(stiff, 0.05);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(e.blowup_u > 0.0);
        CHECK(e.blowup_u <= 1.0);
    }
}

TEST_CASE("riccati: step validation") {
    auto p = constant_profile(-1.0, 1.0);
    CHECK_THROWS_AS(integrate_riccati(p, 0.0), DomainError);
    CHECK_THROWS_AS(integrate_riccati(p, 0.2), DomainError); // > U/10
}

TEST_CASE("jacobi: K = -1 gives cosh, consistency with riccati") {
    const auto jac = integrate_jacobi(constant_profile(-1.0, 5.0), 1e-4);
    double worst = 0.0;
    for (std::size_t i = 0; i < jac.grid.size(); ++i) {
        worst = std::max(worst, std::abs(jac.j[i] - std::cosh(jac.grid[i])));
    }
    CHECK(worst <= 1e-8);

    const auto kg = integrate_riccati(constant_profile(-1.0, 5.0), 1e-4);
    double worst_consistency = 0.0;
    for (std::size_t i = 0; i < jac.grid.size(); ++i) {
        worst_consistency =
            std::max(worst_consistency, std::abs(-jac.j_prime[i] / jac.j[i] - kg.values[i]));
    }
    CHECK(worst_consistency <= 1e-7);
}

TEST_CASE("jacobi: J >= cosh for random K <= -1 profiles (comparison oracle)") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto profile = random_profile(seed);
        const auto jac = integrate_jacobi(profile, profile.u_max() / 2000.0);
        for (std::size_t i = 0; i < jac.grid.size(); ++i) {
            CHECK(jac.j[i] >= std::cosh(jac.grid[i]) - 1e-7);
            CHECK(jac.j_prime[i] >= -1e-12);
            CHECK(jac.j[i] >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("jacobi: J' dominates the integral of J (trapezoid oracle)") {
    for (std::uint64_t seed : {3u, 17u, 40u}) {
        const auto profile = random_profile(seed);
        const double step = profile.u_max() / 5000.0;
        const auto jac = integrate_jacobi(profile, step);
        const double h = jac.grid[1] - jac.grid[0];
        double integral = 0.0;
        double max_j = 1.0;
        for (std::size_t i = 1; i < jac.grid.size(); ++i) {
            integral += 0.5 * h * (jac.j[i - 1] + jac.j[i]);
            max_j = std::max(max_j, jac.j[i]);
            const double tol = 10.0 * h * h * max_j * jac.grid[i];
            CHECK(jac.j_prime[i] >= integral - tol);
            CHECK(integral >= 0.0);
        }
    }
}

TEST_CASE("riccati/jacobi identity d/du(-J'/J) = K + (J'/J)^2") {
    for (std::uint64_t seed : {5u, 23u}) {
        const auto profile = random_profile(seed);
        const double step = profile.u_max() / 4000.0;
        const auto jac = integrate_jacobi(profile, step);
        const double h = jac.grid[1] - jac.grid[0];
        double sup_k = 1.0;
        for (std::size_t i = 0; i < jac.grid.size(); ++i) {
            sup_k = std::max(sup_k, std::abs(profile(jac.grid[i])));
        }
        for (std::size_t i = 1; i + 1 < jac.grid.size(); ++i) {
            const double q_prev = -jac.j_prime[i - 1] / jac.j[i - 1];
            const double q_next = -jac.j_prime[i + 1] / jac.j[i + 1];
            const double lhs = (q_next - q_prev) / (2.0 * h);
            const double q = -jac.j_prime[i] / jac.j[i];
            const double rhs = profile(jac.grid[i]) + q * q;
            CHECK(std::abs(lhs - rhs) <= 20.0 * h * h * sup_k * sup_k * sup_k + 1e-10);
        }
    }
}

TEST_CASE("vcurve geodesic curvature on a cosh grid") {
    SampledFunction j;
    const int n = 5000;
    for (int i = 0; i <= n; ++i) {
        const double u = 5.0 * i / n;
        j.grid.push_back(u);
        j.values.push_back(std::cosh(u));
    }
    CHECK(std::abs(vcurve_geodesic_curvature(j, 0, CurveOrientation::Outer)) <= 1e-6);
    const std::size_t idx = 1000; // u = 1.0
    CHECK(j.grid[idx] == doctest::Approx(1.0));
    CHECK(vcurve_geodesic_curvature(j, idx, CurveOrientation::Outer) ==
          doctest::Approx(-std::tanh(1.0)).epsilon(1e-6));
    CHECK(vcurve_geodesic_curvature(j, idx, CurveOrientation::Inner) ==
          doctest::Approx(std::tanh(1.0)).epsilon(1e-6));
    for (std::size_t i = 0; i < j.grid.size(); i += 97) {
        const double inner = vcurve_geodesic_curvature(j, i, CurveOrientation::Inner);
        const double outer = vcurve_geodesic_curvature(j, i, CurveOrientation::Outer);
        CHECK(inner + outer == 0.0);
    }
    SampledFunction tiny;
    tiny.grid = {0.0, 1.0};
    tiny.values = {1.0, 1.0};
    CHECK_THROWS_AS(vcurve_geodesic_curvature(tiny, 0, CurveOrientation::Inner), DomainError);
}

TEST_CASE("general geodesic curvature: v-curve reduces to (1/J) dJ/du") {
    auto e = [](double, double) { return 1.0; };
    auto g = [](double u, double) { return std::cosh(u) * std::cosh(u); };
    const double c = 1.3; // the v-curve {u = c}
    auto curve = [c](double t) { return std::pair<double, double>(c, t); };
    const double expected = std::tanh(c); // (1/J) J_u for J = cosh
    CHECK(general_geodesic_curvature(e, g, curve, 0.7) ==
          doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("general geodesic curvature: u-curves are geodesics") {
    auto e = [](double, double) { return 1.0; };
    auto g = [](double u, double) { return std::cosh(u) * std::cosh(u); };
    auto curve = [](double t) { return std::pair<double, double>(t, 0.4); };
    CHECK(std::abs(general_geodesic_curvature(e, g, curve, 1.1)) <= 1e-6);
}

TEST_CASE("general geodesic curvature: euclidean circle") {
    auto one = [](double, double) { return 1.0; };
    for (double r : {0.5, 1.0, 2.0}) {
        auto circle = [r](double t) {
            return std::pair<double, double>(r * std::cos(t), r * std::sin(t));
        };
        CHECK(general_geodesic_curvature(one, one, circle, 0.9) ==
              doctest::Approx(1.0 / r).epsilon(1e-5));
    }
    auto point = [](double) { return std::pair<double, double>(1.0, 1.0); };
    CHECK_THROWS_AS(general_geodesic_curvature(one, one, point, 0.0), DomainError);
}

TEST_CASE("verify_comparison certifies the equality case K = -1") {
    const auto report = verify_comparison(constant_profile(-1.0, 5.0), 1e-3);
    CHECK(report.certified);
    CHECK(std::abs(report.margin) <= 1e-7);
    CHECK(report.diff_ineq_ok);
    CHECK(report.max_kg <= 1e-12);
}

TEST_CASE("verify_comparison: K = -4 has a strictly positive margin") {
    const auto report = verify_comparison(constant_profile(-4.0, 3.0), 1e-3);
    CHECK(report.certified);
    // margin = min(h - kg) = 0 at u = 0 but positive away from it
    CHECK(report.margin >= -1e-9);
    double interior_min = 1e9;
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        if (report.grid[i] >= 0.5) {
            interior_min = std::min(interior_min, report.h[i] - report.kg[i]);
        }
    }
    CHECK(interior_min > 0.1); // -2 tanh 2u is well below -tanh u there
    CHECK(report.diff_ineq_ok);
}

TEST_CASE("verify_comparison: quartic profile certifies") {
    auto profile = CurvatureProfile::closed_form(
        [](double u) { return -1.0 - u * u * u * u; }, 3.0, "quartic");
    const auto report = verify_comparison(profile, 1e-3);
    CHECK(report.certified);
    CHECK(report.diff_ineq_ok);
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        CHECK(report.kg[i] <= 1e-12); // kg <= 0 for K <= -1
    }
}

TEST_CASE("verify_comparison: random profiles certify with kg <= 0") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        const auto profile = random_profile(seed);
        const auto report = verify_comparison(profile, profile.u_max() / 2000.0);
        CHECK(report.certified);
        CHECK(report.max_kg <= 1e-12);
    }
}

TEST_CASE("profile samples: loading, interpolation, hypothesis check") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "slopes_profile_test";
    fs::create_directories(dir);

    const fs::path good = dir / "good.tsv";
    {
        std::ofstream out(good);
        out << "# u K\n";
        out << "0.0 -1.0\n0.5 -2.0\n1.0 -1.5\n";
    }
    const auto p = CurvatureProfile::load(good.string());
    CHECK(p.u_max() == 1.0);
    CHECK(p(0.25) == doctest::Approx(-1.5).epsilon(1e-14)); // linear interpolation
    CHECK_NOTHROW(integrate_riccati(p, 0.01));

    // sample points are checked first, so the violating sample is named
    // exactly
    const fs::path bad = dir / "bad.tsv";
    {
        std::ofstream out(bad);
        out << "0.0 -1.0\n0.5 -0.5\n1.0 -1.5\n";
    }
    const auto pb = CurvatureProfile::load(bad.string());
    try {
        integrate_riccati(pb, 0.01);
        FAIL("expected ProfileError");
    } catch (const ProfileError& e) {
        CHECK(e.offending_u == 0.5);
    }

    CHECK_THROWS_AS(CurvatureProfile::load((dir / "missing.tsv").string()), ConfigError);
    CHECK_THROWS_AS(CurvatureProfile::from_samples({0.0, 0.0}, {-1.0, -1.0}), ConfigError);
    CHECK_THROWS_AS(CurvatureProfile::from_samples({0.5, 1.0}, {-1.0, -1.0}), ConfigError);
}
