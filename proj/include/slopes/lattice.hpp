#pragma once

#include "slopes/hypmath.hpp"

#include <cstdint>
#include <vector>

namespace slopes {

// Point of the hyperbolic plane in Poincare-disk coordinates, |p| < 1.
struct HPoint {
    double x = 0.0;
    double y = 0.0;
};

// Deterministic counter-based generator used for all experiments. The
// sequence is SplitMix64 (Steele-Lea-Vigna): the state advances by the
// 64-bit golden-ratio constant and the output is the finalizer
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31.
// Fixed here so runs are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double next_double();

private:
    std::uint64_t state_;
};

// Hyperbolic distance arccosh(1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))).
// Points within 1e-12 of the ideal boundary are rejected.
double hyp_distance(const HPoint& p, const HPoint& q);

// Point uniform w.r.t. hyperbolic area in the disk of radius R about the
// origin: radius by inverse CDF r = arccosh(1 + t (cosh R - 1)), angle
// uniform; returned in disk coordinates (Euclidean radius tanh(r/2)).
HPoint sample_uniform_in_disk(double radius, SplitMix64& rng);

struct PackingExperiment {
    double disk_radius = 0.0;     // R
    double separation = 0.0;      // L
    std::uint64_t seed = 0;
    int attempts = 0;             // consecutive-rejection cutoff
    std::vector<HPoint> points;
    int count = 0;
    double bound_paper = 0.0;     // A(R+L)/A(L), chosen convention
    double bound_rigorous = 0.0;  // A_true(R+L/2)/A_true(L/2)
    AreaConvention convention = AreaConvention::PaperVariant;
};

// Greedy maximal packing: rejection-samples candidates uniformly in D(R),
// accepting those at hyperbolic distance >= L from every accepted point;
// stops after `attempts` consecutive rejections. Deterministic in the seed.
PackingExperiment greedy_pack(double disk_radius, double separation, std::uint64_t seed,
                              int attempts,
                              AreaConvention convention = AreaConvention::PaperVariant);

struct PackingAudit {
    int count = 0;
    double bound_paper = 0.0;
    double bound_rigorous = 0.0;
    bool paper_violation = false;     // informational: quoted ratio exceeded
    bool rigorous_violation = false;  // must never happen
    double min_separation = 0.0;      // re-verified over all pairs
    bool separation_ok = false;
};

// Re-verifies the separation invariant pairwise and compares the count
// against both bounds.
PackingAudit audit_bound(const PackingExperiment& experiment, AreaConvention convention);

} // namespace slopes
