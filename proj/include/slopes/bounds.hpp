#pragma once

#include "slopes/hypmath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slopes {

// Slope-length bound d <= 2 pi (2g + n - 2) / (-h n) <= 2 pi (2g + 1) / (-h)
// for a genus-g surface with n boundary curves meeting the boundary where the
// comparison function has value h < 0.
struct SlopeLengthBound {
    double detailed;    // uses n and the Euler characteristic
    double simplified;  // n-independent form
};

SlopeLengthBound slope_length_bound(int genus, int boundary_count, double h_value);

// Admissible slope-length interval [L, 2 pi (2g+1)/tanh(U*)] for slopes of
// length at least L on a boundary with collar width at least U*.
struct LengthWindow {
    double lower;
    double upper;
    bool empty; // lower > upper: no slope of that length class
};

LengthWindow length_window(int genus, double u_star, double cutoff_length);

// Separated-set count bound for the slope-length disk: the quoted ratio
// A(R + L)/A(L) with R = 2 pi (2g+1)/tanh(U*) under the chosen area
// convention, plus the rigorous disjoint-(L/2)-ball ratio
// A_true(R + L/2)/A_true(L/2) for audit.
struct LatticeCountBound {
    double disk_radius;     // R
    double quoted;          // A(R+L)/A(L), chosen convention
    double quoted_true;     // same ratio under TrueArea (always reported)
    double rigorous;        // A_true(R + L/2)/A_true(L/2)
};

inline constexpr double kMinCutoffLength = 1e-6;

LatticeCountBound lattice_count_bound(int genus, double u_star, double cutoff_length,
                                      AreaConvention convention);

// Collar-disjointness bound 2 pi (genus - 1) on the number of short simple
// closed geodesics on a closed surface of the given genus.
double collar_count_bound(int surface_genus);

struct BoundInput {
    int genus = 0;                       // surface genus g
    std::optional<int> boundary_count;   // n; simplified slope bound if absent
    std::vector<int> component_genera;   // per-component boundary genera (each >= 2)
    int torus_count = 0;                 // k
    std::optional<double> n_torus;       // external per-torus slope count N(g)
    std::optional<double> u_star;        // collar-width override
    double cutoff_length = kDefaultCollarCutoff; // L
    AreaConvention convention = AreaConvention::PaperVariant;
};

struct ComponentBound {
    int boundary_genus;
    double u_star;
    double h_at_u_star;
    double disk_radius;
    double lattice;        // chosen convention
    double lattice_true;
    double lattice_rigorous;
    double collar;
    double total;          // lattice + collar, chosen convention
};

// Evaluation of the single-N closing inequality
// sum_i n(g, g_i) + N <= n(g, sum_i g_i + k).
struct ClosingClaim {
    bool evaluated = false;
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double n_used = 0.0;
    std::string note;
};

struct BoundReport {
    BoundInput input;
    double h_at_u = 0.0;            // h(U*) = -tanh(U*) for the first component / total
    double d_max_detailed = 0.0;    // slope-length bound, Euler form (needs n)
    double d_max = 0.0;             // slope-length bound, simplified form
    double disk_radius = 0.0;       // R of the first/total component
    double count_lattice = 0.0;
    long long count_lattice_floor = 0;
    double count_lattice_true = 0.0;
    double count_lattice_rigorous = 0.0;
    double count_collar = 0.0;
    long long count_collar_floor = 0;
    double total = 0.0;
    long long total_floor = 0;
    double total_true = 0.0;
    std::vector<ComponentBound> per_component;
    double torus_contribution = 0.0;
    ClosingClaim claim;
    AreaConvention convention = AreaConvention::PaperVariant;
};

// Single-component pipeline: U* from the boundary genus, then the lattice
// and collar terms. g_boundary >= 2.
BoundReport combined_bound(int genus, int boundary_genus, double cutoff_length,
                           AreaConvention convention);

// Multi-component pipeline: sum of per-component bounds plus k * N(g) for
// torus components; also evaluates (never asserts) the closing inequality.
BoundReport multi_component_bound(const BoundInput& input);

struct ClaimCase {
    int genus;
    std::vector<int> genera;
    int torus_count;
    double lhs;
    double rhs;
    bool holds;
};

struct ClaimSweep {
    std::vector<ClaimCase> cases;
    bool all_hold;
    double n_used;
};

// Sweeps the closing inequality over small genera/components with a fixed
// nominal N; records verdicts without judging them.
ClaimSweep sweep_closing_claim(int max_genus, int max_component_genus, double n_value);

} // namespace slopes
