// Acceptance suite: one check per acceptance criterion, each printing a
// single PASS/FAIL line (with sub-check detail where a criterion bundles
// several assertions). Exit code = number of failed criteria.
//
// Usage: acceptance [--criterion <name>] [--slopes-bin <path>]
//   names: collar-constants, comparison-certificate,
//          riccati-jacobi-consistency, bound-pipeline, packing-audit,
//          spectrum, determinism

#include "slopes/bounds.hpp"
#include "slopes/comparison.hpp"
#include "slopes/hypmath.hpp"
#include "slopes/lattice.hpp"
#include "slopes/spectra.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace slopes;
namespace fs = std::filesystem;

namespace {

struct CheckContext {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& description) {
        if (!condition) {
            ok = false;
            notes.push_back("FAILED: " + description);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
};

// Same family of deterministic smooth K <= -1 perturbations the unit tests
// use; 100 of them form the randomized acceptance suite.
CurvatureProfile random_profile(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double a = rng.next_double();
    const double b = 0.5 * rng.next_double();
    const double omega = 0.5 + 2.5 * rng.next_double();
    const double phase = 6.283185307179586 * rng.next_double();
    const double c = rng.next_double();
    const double u_max = 2.0 + 3.0 * rng.next_double();
    auto k = [=](double u) {
        return -1.0 - a - b * (1.0 + std::sin(omega * u + phase)) -
               c * (u / u_max) * (u / u_max);
    };
    return CurvatureProfile::closed_form(k, u_max, "random-" + std::to_string(seed));
}

void check_collar_constants(CheckContext& ctx) {
    const double s_at_cutoff = collar_halfwidth(1.75);
    ctx.require(s_at_cutoff > 0.887, "S(1.75) > 0.887 (got " + std::to_string(s_at_cutoff) + ")");
    const double ratio = 1.75 / std::sinh(0.875);
    ctx.require(ratio >= 1.76, "1.75/sinh(0.875) >= 1.76 (got " + std::to_string(ratio) + ")");
    int violations = 0;
    for (int i = 1; i <= 1750; ++i) {
        if (collar_area(i * 1e-3) < 2.0) ++violations;
    }
    ctx.require(violations == 0, "collar_area(d) >= 2 on the 1e-3 grid over (0, 1.75]");
    ctx.note("S(1.75) = " + std::to_string(s_at_cutoff) + ", L/sinh(L/2) = " +
             std::to_string(ratio));
}

void check_comparison_certificate(CheckContext& ctx) {
    {
        const auto kg = integrate_riccati(
            CurvatureProfile::closed_form([](double) { return -1.0; }, 5.0), 1e-4);
        double worst = 0.0;
        for (std::size_t i = 0; i < kg.grid.size(); ++i) {
            worst = std::max(worst, std::abs(kg.values[i] + std::tanh(kg.grid[i])));
        }
        ctx.require(worst <= 1e-8, "K = -1: |kg + tanh u| <= 1e-8 (got " +
                                       std::to_string(worst) + ")");
        ctx.note("K=-1 max |kg + tanh u| = " + std::to_string(worst));
    }
    {
        const auto kg = integrate_riccati(
            CurvatureProfile::closed_form([](double) { return -4.0; }, 3.0), 1e-4);
        double worst = 0.0;
        for (std::size_t i = 0; i < kg.grid.size(); ++i) {
            worst = std::max(worst, std::abs(kg.values[i] + 2.0 * std::tanh(2.0 * kg.grid[i])));
        }
        ctx.require(worst <= 1e-7, "K = -4: |kg + 2 tanh 2u| <= 1e-7 (got " +
                                       std::to_string(worst) + ")");
    }
    int uncertified = 0, jacobi_failures = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const CurvatureProfile profile = random_profile(seed);
        const ComparisonReport report =
            verify_comparison(profile, default_step(profile.u_max()), 1e-7);
        if (!report.certified || !report.diff_ineq_ok) ++uncertified;
        for (std::size_t i = 0; i < report.grid.size(); ++i) {
            if (report.j[i] < std::cosh(report.grid[i]) - 1e-7) {
                ++jacobi_failures;
                break;
            }
        }
    }
    ctx.require(uncertified == 0, "100 randomized K <= -1 profiles certify at tolerance 1e-7 (" +
                                      std::to_string(uncertified) + " failed)");
    ctx.require(jacobi_failures == 0, "J(u) >= cosh(u) - 1e-7 pointwise on the randomized suite");
}

void check_riccati_jacobi_consistency(CheckContext& ctx) {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const CurvatureProfile profile = random_profile(seed);
        const double step = default_step(profile.u_max());
        const auto kg = integrate_riccati(profile, step);
        const auto jac = integrate_jacobi(profile, step);
        for (std::size_t i = 0; i < kg.grid.size(); ++i) {
            worst = std::max(worst, std::abs(-jac.j_prime[i] / jac.j[i] - kg.values[i]));
        }
    }
    ctx.require(worst <= 1e-6,
                "-J'/J matches the Riccati route within 1e-6 (got " + std::to_string(worst) + ")");
    ctx.note("max |(-J'/J) - kg| = " + std::to_string(worst));
}

void check_bound_pipeline(CheckContext& ctx) {
    const double u_star = basmajian_width(2);
    ctx.require(std::abs(u_star - std::log(3.0) / 4.0) <= 1e-12,
                "basmajian_width(2) = ln(3)/4 within 1e-12");
    ctx.require(std::abs(std::tanh(u_star) - (2.0 - std::sqrt(3.0))) <= 1e-12,
                "tanh(U*(2)) = 2 - sqrt(3) within 1e-12");
    const SlopeLengthBound slb = slope_length_bound(2, 1, -(2.0 - std::sqrt(3.0)));
    ctx.require(std::abs(slb.simplified - 117.245) <= 1e-3,
                "slope_length_bound(2, 1, -(2-sqrt3)) = 117.245 within 1e-3 (got " +
                    std::to_string(slb.simplified) + ")");
    bool sweep_ok = true;
    for (int g = 0; g <= 10; ++g) {
        for (int n = 1; n <= 10; ++n) {
            if (2 * g + n - 2 <= 0) continue;
            const SlopeLengthBound b = slope_length_bound(g, n, -0.37);
            sweep_ok = sweep_ok && b.detailed <= b.simplified + 1e-12;
        }
    }
    ctx.require(sweep_ok, "detailed <= simplified over the (g <= 10, n <= 10) sweep");

    // Offset between the two area conventions: the identity paper = true +
    // 4 pi is exact in real arithmetic, but binary64 quantization floors the
    // representable deviation at half an ulp of A(R) (~1.2e-7 near R = 20),
    // so the stated absolute 1e-9 is not attainable past R ~ 16.9.
    double worst = 0.0, worst_r = 0.0;
    for (int i = 0; i <= 800; ++i) {
        const double radius = i * 0.025;
        const double diff = disk_area(radius, AreaConvention::PaperVariant) -
                            disk_area(radius, AreaConvention::TrueArea);
        const double dev = std::abs(diff - 4.0 * 3.14159265358979323846);
        if (dev > worst) {
            worst = dev;
            worst_r = radius;
        }
    }
    const bool others_ok = ctx.ok;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "area-convention offset 4pi within 1e-9 on [0, 20] (max dev %.3e at R = %.3f; "
                  "binary64 half-ulp floor ~1.2e-7 at R = 20)",
                  worst, worst_r);
    ctx.require(worst <= 1e-9, detail);
    if (others_ok && worst > 1e-9) {
        ctx.note("basmajian/tanh/slope-bound/sweep sub-checks passed; the offset identity is "
                 "exact by construction but its stated absolute tolerance sits below the "
                 "double-precision quantization floor for R > ~16.9");
    }
}

void check_packing_audit(CheckContext& ctx) {
    int rigorous_violations = 0, paper_violations = 0, experiments = 0, max_count = 0;
    for (double radius : {2.0, 3.0, 4.0, 5.0}) {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const PackingExperiment exp =
                greedy_pack(radius, 1.75, seed, 4000, AreaConvention::PaperVariant);
            const PackingAudit audit = audit_bound(exp, AreaConvention::PaperVariant);
            ++experiments;
            max_count = std::max(max_count, exp.count);
            if (!audit.separation_ok) ++rigorous_violations; // inconsistent experiment
            if (audit.rigorous_violation) ++rigorous_violations;
            if (audit.paper_violation) ++paper_violations;
        }
    }
    ctx.require(rigorous_violations == 0,
                "zero violations of floor(A_true(R+L/2)/A_true(L/2)) over 400 experiments");
    ctx.note(std::to_string(experiments) + " experiments, max count " +
             std::to_string(max_count) + ", paper-bound flags (informational): " +
             std::to_string(paper_violations));
}

void check_spectrum(CheckContext& ctx) {
    const FuchsianGroup torus = preset_group("modular-torus");
    const Spectrum torus_spec = enumerate_spectrum(torus, 2.0, 8);
    ctx.require(!torus_spec.entries.empty() &&
                    std::abs(torus_spec.entries.front().length - 1.9248473) <= 1e-6,
                "modular-torus shortest length = 1.9248473 +- 1e-6");
    const CollarReport torus_collar = collar_report(torus_spec.entries, 1.75, torus.genus);
    ctx.require(torus_collar.count_below_cutoff == 0 &&
                    torus_collar.count_below_cutoff <= torus_collar.count_bound_floor,
                "modular-torus count of lengths <= 1.75 equals 0 <= floor(2 pi (g-1))");

    const FuchsianGroup octagon = preset_group("octagon-g2");
    const Spectrum octagon_spec = enumerate_spectrum(octagon, 3.5, 8);
    ctx.require(!octagon_spec.entries.empty() &&
                    std::abs(octagon_spec.entries.front().length - 3.0571421) <= 1e-4,
                "octagon-g2 shortest length = 3.0571421 +- 1e-4 at word length 8");
    const CollarReport octagon_collar = collar_report(octagon_spec.entries, 1.75, octagon.genus);
    ctx.require(octagon_collar.count_below_cutoff == 0 &&
                    octagon_collar.count_below_cutoff <= octagon_collar.count_bound_floor,
                "octagon-g2 count of lengths <= 1.75 equals 0 <= floor(2 pi (g-1)) = 6");
    if (!torus_spec.entries.empty() && !octagon_spec.entries.empty()) {
        ctx.note("shortest lengths: torus " + std::to_string(torus_spec.entries.front().length) +
                 ", octagon " + std::to_string(octagon_spec.entries.front().length));
    }
}

// --- determinism criterion: drive the CLI twice and compare payloads ------

std::string slopes_bin;

int run_cli(const std::string& args) {
    const std::string cmd = slopes_bin + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// JSON payload with the timestamp field removed, re-serialized canonically.
std::string json_payload_no_timestamp(const fs::path& path) {
    nlohmann::json j = nlohmann::json::parse(file_bytes(path));
    j.erase("timestamp");
    return j.dump();
}

void check_determinism(CheckContext& ctx) {
    if (slopes_bin.empty()) {
        ctx.require(false, "determinism needs --slopes-bin <path to the CLI>");
        return;
    }
    const fs::path base = fs::temp_directory_path() / "slopes_acceptance_determinism";
    fs::remove_all(base);
    const fs::path run_a = base / "a", run_b = base / "b";
    fs::create_directories(run_a);
    fs::create_directories(run_b);

    struct Invocation {
        std::string name;
        std::string args; // {} replaced by the output directory
        std::vector<std::string> json_files;
        std::vector<std::string> raw_files;
    };
    const std::vector<Invocation> invocations = {
        {"bound", "bound --g 1 --components \"t:1;g:2,3\" --N 5 --out {}/bound.json",
         {"bound.json"}, {}},
        {"bound-sweep", "bound --g 0 --sweep --g-max 3 --gb-max 5 --out {}/sweep.csv",
         {}, {"sweep.csv"}},
        {"verify", "verify --builtin constant:-4 --U 3 --step 0.001 --out {}/verify.json",
         {"verify.json"}, {}},
        {"pack", "pack --R 2 --L 1.75 --seeds 1..3 --attempts 2000 --out-dir {}",
         {"pack_seed1.json", "pack_seed2.json", "pack_seed3.json", "pack_summary.json"}, {}},
        {"spectrum", "spectrum --preset modular-torus --Lmax 2 --max-word-length 5 --out-dir {}",
         {"spectrum.json"}, {"spectrum.csv"}},
    };

    for (const Invocation& inv : invocations) {
        for (const fs::path& dir : {run_a, run_b}) {
            std::string args = inv.args;
            std::string::size_type pos;
            while ((pos = args.find("{}")) != std::string::npos) {
                args.replace(pos, 2, dir.string());
            }
            const int rc = run_cli(args);
            ctx.require(rc == 0, inv.name + " exited 0 (got " + std::to_string(rc) + ")");
            if (rc != 0) return;
        }
        for (const std::string& file : inv.json_files) {
            const bool same = json_payload_no_timestamp(run_a / file) ==
                              json_payload_no_timestamp(run_b / file);
            ctx.require(same, inv.name + ": " + file + " identical modulo timestamp");
        }
        for (const std::string& file : inv.raw_files) {
            const bool same = file_bytes(run_a / file) == file_bytes(run_b / file);
            ctx.require(same, inv.name + ": " + file + " byte-identical");
        }
    }
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(CheckContext&)> run;
};

} // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = argv[++i];
        else if (arg == "--slopes-bin" && i + 1 < argc) slopes_bin = argv[++i];
        else {
            std::cerr << "usage: acceptance [--criterion <name>] [--slopes-bin <path>]\n";
            return 64;
        }
    }

    const std::vector<Criterion> criteria = {
        {"collar-constants", 1.0, check_collar_constants},
        {"comparison-certificate", 30.0, check_comparison_certificate},
        {"riccati-jacobi-consistency", 30.0, check_riccati_jacobi_consistency},
        {"bound-pipeline", 30.0, check_bound_pipeline},
        {"packing-audit", 60.0, check_packing_audit},
        {"spectrum", 120.0, check_spectrum},
        {"determinism", 120.0, check_determinism},
    };

    int failures = 0;
    bool matched = false;
    for (const Criterion& criterion : criteria) {
        if (!only.empty() && criterion.name != only) continue;
        matched = true;
        CheckContext ctx;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(ctx);
        } catch (const std::exception& e) {
            ctx.require(false, std::string("unexpected exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= criterion.budget_seconds) {
            ctx.require(false, "runtime budget " + std::to_string(criterion.budget_seconds) +
                                   " s exceeded");
        }
        std::printf("[%s] %s (%.2f s)\n", ctx.ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    elapsed);
        for (const std::string& note : ctx.notes) std::printf("       %s\n", note.c_str());
        if (!ctx.ok) ++failures;
    }
    if (!matched) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 64;
    }
    return failures;
}
