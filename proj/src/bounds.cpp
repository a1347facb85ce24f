#include "slopes/bounds.hpp"

#include "slopes/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace slopes {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Counts are nonnegative; values past the int64 range (the ratios grow like
// e^R) saturate, with the raw real kept alongside in every report.
long long floor_count(double x) {
    const double f = std::floor(x);
    if (!(f >= 0.0)) return 0;
    if (f >= 9.2233720368547758e18) return std::numeric_limits<long long>::max();
    return static_cast<long long>(f);
}

ComponentBound component_bound(int genus, int boundary_genus, double cutoff_length,
                               AreaConvention convention) {
    const double u_star = basmajian_width(boundary_genus);
    const LatticeCountBound lat = lattice_count_bound(genus, u_star, cutoff_length, convention);
    ComponentBound c;
    c.boundary_genus = boundary_genus;
    c.u_star = u_star;
    c.h_at_u_star = -std::tanh(u_star);
    c.disk_radius = lat.disk_radius;
    c.lattice = lat.quoted;
    c.lattice_true = lat.quoted_true;
    c.lattice_rigorous = lat.rigorous;
    c.collar = collar_count_bound(boundary_genus);
    c.total = c.lattice + c.collar;
    return c;
}

} // namespace

SlopeLengthBound slope_length_bound(int genus, int boundary_count, double h_value) {
    if (genus < 0) throw DomainError("slope_length_bound: genus must be >= 0");
    if (boundary_count < 1) throw DomainError("slope_length_bound: boundary count must be >= 1");
    if (!(h_value < 0.0)) {
        throw DomainError("slope_length_bound: h must be < 0, got " + std::to_string(h_value));
    }
    const int chi_term = 2 * genus + boundary_count - 2;
    if (chi_term <= 0) {
        throw DomainError(
            "slope_length_bound: 2g + n - 2 must be > 0 (disks and annuli are excluded by the "
            "essential-surface hypotheses)");
    }
    SlopeLengthBound b;
    b.detailed = kTwoPi * chi_term / (-h_value * boundary_count);
    b.simplified = kTwoPi * (2 * genus + 1) / (-h_value);
    return b;
}

LengthWindow length_window(int genus, double u_star, double cutoff_length) {
    if (genus < 0) throw DomainError("length_window: genus must be >= 0");
    if (!(u_star > 0.0)) throw DomainError("length_window: U* must be > 0");
    if (!(cutoff_length > 0.0)) throw DomainError("length_window: L must be > 0");
    LengthWindow w;
    w.lower = cutoff_length;
    w.upper = kTwoPi * (2 * genus + 1) / std::tanh(u_star);
    w.empty = w.lower > w.upper;
    return w;
}

LatticeCountBound lattice_count_bound(int genus, double u_star, double cutoff_length,
                                      AreaConvention convention) {
    if (genus < 0) throw DomainError("lattice_count_bound: genus must be >= 0");
    if (!(u_star > 0.0)) throw DomainError("lattice_count_bound: U* must be > 0");
    if (!(cutoff_length >= kMinCutoffLength)) {
        throw DomainError("lattice_count_bound: L must be >= 1e-6 (ratio diverges as L -> 0)");
    }
    LatticeCountBound b;
    b.disk_radius = kTwoPi * (2 * genus + 1) / std::tanh(u_star);
    b.quoted = disk_area(b.disk_radius + cutoff_length, convention) /
               disk_area(cutoff_length, convention);
    b.quoted_true = disk_area(b.disk_radius + cutoff_length, AreaConvention::TrueArea) /
                    disk_area(cutoff_length, AreaConvention::TrueArea);
    b.rigorous = disk_area(b.disk_radius + 0.5 * cutoff_length, AreaConvention::TrueArea) /
                 disk_area(0.5 * cutoff_length, AreaConvention::TrueArea);
    return b;
}

double collar_count_bound(int surface_genus) {
    if (surface_genus < 1) {
        throw DomainError("collar_count_bound: genus must be >= 1, got " +
                          std::to_string(surface_genus));
    }
    return kTwoPi * (surface_genus - 1);
}

BoundReport combined_bound(int genus, int boundary_genus, double cutoff_length,
                           AreaConvention convention) {
    BoundInput input;
    input.genus = genus;
    input.component_genera = {boundary_genus};
    input.cutoff_length = cutoff_length;
    input.convention = convention;
    return multi_component_bound(input);
}

BoundReport multi_component_bound(const BoundInput& input) {
    if (input.genus < 0) throw DomainError("bound: genus must be >= 0");
    if (input.torus_count < 0) throw DomainError("bound: torus count must be >= 0");
    if (input.torus_count > 0 && !input.n_torus) {
        throw ConfigError(
            "bound: torus boundary components need the external per-torus count N(g); "
            "pass it explicitly (it is an input, never computed here)");
    }
    for (int g : input.component_genera) {
        if (g < 2) {
            throw DomainError("bound: component boundary genus must be >= 2 (the collar-width "
                              "formula has a pole at genus 1); use the N(g) path for tori");
        }
    }
    if (input.component_genera.empty() && input.torus_count == 0) {
        throw ConfigError("bound: no boundary components given");
    }

    BoundReport report;
    report.input = input;
    report.convention = input.convention;

    for (int g_i : input.component_genera) {
        report.per_component.push_back(
            component_bound(input.genus, g_i, input.cutoff_length, input.convention));
    }

    double lattice = 0.0, lattice_true = 0.0, lattice_rigorous = 0.0, collar = 0.0;
    for (const ComponentBound& c : report.per_component) {
        lattice += c.lattice;
        lattice_true += c.lattice_true;
        lattice_rigorous += c.lattice_rigorous;
        collar += c.collar;
    }
    report.count_lattice = lattice;
    report.count_lattice_floor = floor_count(lattice);
    report.count_lattice_true = lattice_true;
    report.count_lattice_rigorous = lattice_rigorous;
    report.count_collar = collar;
    report.count_collar_floor = floor_count(collar);
    report.torus_contribution =
        input.torus_count > 0 ? input.torus_count * input.n_torus.value() : 0.0;
    report.total = lattice + collar + report.torus_contribution;
    report.total_floor = floor_count(report.total);
    report.total_true = lattice_true + collar + report.torus_contribution;

    // Slope-length data for the leading component (or the override U*).
    double u_ref;
    if (input.u_star) {
        if (!(*input.u_star > 0.0)) throw DomainError("bound: U* override must be > 0");
        u_ref = *input.u_star;
    } else if (!report.per_component.empty()) {
        u_ref = report.per_component.front().u_star;
    } else {
        u_ref = 0.0; // pure-torus input: no collar-width data
    }
    if (u_ref > 0.0) {
        report.h_at_u = -std::tanh(u_ref);
        report.disk_radius = kTwoPi * (2 * input.genus + 1) / std::tanh(u_ref);
        report.d_max = kTwoPi * (2 * input.genus + 1) / std::tanh(u_ref);
        report.d_max_detailed =
            input.boundary_count
                ? slope_length_bound(input.genus, *input.boundary_count, report.h_at_u).detailed
                : report.d_max;
    }

    // Closing inequality: sum_i n(g, g_i) + N <= n(g, g_total) with
    // g_total = sum g_i + k. Recorded, never asserted.
    const int g_total =
        [&] {
            int s = input.torus_count;
            for (int g_i : input.component_genera) s += g_i;
            return s;
        }();
    if (g_total >= 2 && !input.component_genera.empty()) {
        const double n_used = input.n_torus.value_or(0.0);
        double lhs = n_used;
        for (const ComponentBound& c : report.per_component) lhs += c.total;
        const ComponentBound total_component =
            component_bound(input.genus, g_total, input.cutoff_length, input.convention);
        report.claim.evaluated = true;
        report.claim.lhs = lhs;
        report.claim.rhs = total_component.total;
        report.claim.holds = lhs <= total_component.total;
        report.claim.n_used = n_used;
        report.claim.note = input.n_torus ? "N from input" : "N defaulted to 0";
    } else {
        report.claim.note = "not evaluated (total boundary genus < 2 or no higher-genus component)";
    }
    return report;
}

ClaimSweep sweep_closing_claim(int max_genus, int max_component_genus, double n_value) {
    if (max_genus < 0 || max_component_genus < 2) {
        throw DomainError("sweep_closing_claim: need max_genus >= 0 and max component genus >= 2");
    }
    ClaimSweep sweep;
    sweep.n_used = n_value;
    sweep.all_hold = true;
    for (int g = 0; g <= max_genus; ++g) {
        for (int k = 0; k <= 1; ++k) {
            // one or two higher-genus components
            for (int g1 = 2; g1 <= max_component_genus; ++g1) {
                for (int g2 = 0; g2 <= max_component_genus; ++g2) {
                    if (g2 != 0 && g2 < 2) continue;
                    BoundInput in;
                    in.genus = g;
                    in.component_genera = {g1};
                    if (g2 >= 2) in.component_genera.push_back(g2);
                    in.torus_count = k;
                    if (k > 0 || n_value != 0.0) in.n_torus = n_value;
                    const BoundReport r = multi_component_bound(in);
                    if (!r.claim.evaluated) continue;
                    ClaimCase c;
                    c.genus = g;
                    c.genera = in.component_genera;
                    c.torus_count = k;
                    c.lhs = r.claim.lhs;
                    c.rhs = r.claim.rhs;
                    c.holds = r.claim.holds;
                    sweep.all_hold = sweep.all_hold && c.holds;
                    sweep.cases.push_back(std::move(c));
                }
            }
        }
    }
    return sweep;
}

} // namespace slopes
