#include "slopes/lattice.hpp"

#include "slopes/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace slopes {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kBoundaryGuard = 1.0 - 1e-12;
} // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double hyp_distance(const HPoint& p, const HPoint& q) {
    const double np = p.x * p.x + p.y * p.y;
    const double nq = q.x * q.x + q.y * q.y;
    if (np >= kBoundaryGuard || nq >= kBoundaryGuard) {
        throw DomainError("hyp_distance: point too close to the ideal boundary");
    }
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double arg = 1.0 + 2.0 * (dx * dx + dy * dy) / ((1.0 - np) * (1.0 - nq));
    return std::acosh(std::max(1.0, arg));
}

HPoint sample_uniform_in_disk(double radius, SplitMix64& rng) {
    if (!(radius > 0.0)) throw DomainError("sample_uniform_in_disk: radius must be > 0");
    const double t = rng.next_double();
    const double angle = kTwoPi * rng.next_double();
    const double r = std::acosh(1.0 + t * (std::cosh(radius) - 1.0));
    const double rho = std::tanh(0.5 * r);
    return HPoint{rho * std::cos(angle), rho * std::sin(angle)};
}

PackingExperiment greedy_pack(double disk_radius, double separation, std::uint64_t seed,
                              int attempts, AreaConvention convention) {
    if (!(disk_radius > 0.0)) throw DomainError("greedy_pack: R must be > 0");
    if (disk_radius > 10.0) {
        throw DomainError("greedy_pack: R must be <= 10 (disk coordinates lose conditioning)");
    }
    if (!(separation > 0.0)) throw DomainError("greedy_pack: L must be > 0");
    if (attempts < 1) throw DomainError("greedy_pack: attempts must be >= 1");

    PackingExperiment exp;
    exp.disk_radius = disk_radius;
    exp.separation = separation;
    exp.seed = seed;
    exp.attempts = attempts;
    exp.convention = convention;

    SplitMix64 rng(seed);
    // Separation test without acosh: d(p,q) >= L iff the cosh argument
    // 1 + 2|p-q|^2/((1-|p|^2)(1-|q|^2)) >= cosh L.
    const double cosh_l = std::cosh(separation);
    std::vector<double> inv_conformal; // 1 - |p|^2 per accepted point

    int consecutive_rejections = 0;
    while (consecutive_rejections < attempts) {
        const HPoint cand = sample_uniform_in_disk(disk_radius, rng);
        const double nc = 1.0 - (cand.x * cand.x + cand.y * cand.y);
        bool ok = true;
        for (std::size_t i = 0; i < exp.points.size(); ++i) {
            const double dx = cand.x - exp.points[i].x;
            const double dy = cand.y - exp.points[i].y;
            const double cosh_d = 1.0 + 2.0 * (dx * dx + dy * dy) / (nc * inv_conformal[i]);
            if (cosh_d < cosh_l) {
                ok = false;
                break;
            }
        }
        if (ok) {
            exp.points.push_back(cand);
            inv_conformal.push_back(nc);
            consecutive_rejections = 0;
        } else {
            ++consecutive_rejections;
        }
    }

    exp.count = static_cast<int>(exp.points.size());
    exp.bound_paper = disk_area(disk_radius + separation, convention) /
                      disk_area(separation, convention);
    exp.bound_rigorous = disk_area(disk_radius + 0.5 * separation, AreaConvention::TrueArea) /
                         disk_area(0.5 * separation, AreaConvention::TrueArea);
    return exp;
}

PackingAudit audit_bound(const PackingExperiment& experiment, AreaConvention convention) {
    PackingAudit audit;
    audit.count = experiment.count;
    audit.bound_paper = disk_area(experiment.disk_radius + experiment.separation, convention) /
                        disk_area(experiment.separation, convention);
    audit.bound_rigorous =
        disk_area(experiment.disk_radius + 0.5 * experiment.separation, AreaConvention::TrueArea) /
        disk_area(0.5 * experiment.separation, AreaConvention::TrueArea);

    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < experiment.points.size(); ++i) {
        for (std::size_t j = i + 1; j < experiment.points.size(); ++j) {
            min_sep = std::min(min_sep, hyp_distance(experiment.points[i], experiment.points[j]));
        }
    }
    audit.min_separation = min_sep;
    audit.separation_ok =
        experiment.points.size() < 2 || min_sep >= experiment.separation - 1e-9;
    audit.paper_violation = audit.count > audit.bound_paper;
    audit.rigorous_violation = audit.count > std::floor(audit.bound_rigorous);
    return audit;
}

} // namespace slopes
