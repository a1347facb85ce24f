// slopes: boundary-slope bound tables, curvature-comparison certificates,
// hyperbolic packing experiments and length-spectrum reports.
//
// Subcommands:
//   bound     n(g, g_boundary) pipeline, single or multi-component, and a
//             (g, gb) sweep CSV mode
//   verify    Riccati/Jacobi comparison certificate for a curvature profile
//   pack      greedy separated point sets in a hyperbolic disk vs the
//             counting bounds, over a seed range
//   spectrum  closed-geodesic lengths of a Fuchsian group preset or file
//
// Exit codes: 0 success/certified, 1 input or precondition error,
// 2 verification failure (uncertified report or rigorous-bound violation).

#include "slopes/bounds.hpp"
#include "slopes/comparison.hpp"
#include "slopes/errors.hpp"
#include "slopes/hypmath.hpp"
#include "slopes/json_writer.hpp"
#include "slopes/lattice.hpp"
#include "slopes/spectra.hpp"
#include "slopes/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using namespace slopes;

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string default_out_dir() {
    const char* env = std::getenv("SLOPES_OUT_DIR");
    return env && *env ? env : ".";
}

std::string resolve_out(const std::string& explicit_path, const std::string& fallback_name) {
    if (!explicit_path.empty()) return explicit_path;
    return (fs::path(default_out_dir()) / fallback_name).string();
}

AreaConvention parse_convention(const std::string& name) {
    if (name == "paper" || name == "paper_variant") return AreaConvention::PaperVariant;
    if (name == "true" || name == "true_area") return AreaConvention::TrueArea;
    throw ConfigError("unknown area convention '" + name + "' (use paper|true)");
}

const char* convention_name(AreaConvention c) {
    return c == AreaConvention::PaperVariant ? "paper_variant" : "true_area";
}

// "t:2;g:2,3" -> torus count 2, higher-genus components {2,3}.
void parse_components(const std::string& spec, BoundInput& input) {
    std::string token;
    std::vector<std::string> parts;
    for (char c : spec) {
        if (c == ';') {
            parts.push_back(token);
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    parts.push_back(token);
    for (const std::string& part : parts) {
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string::npos || colon + 1 >= part.size()) {
            throw ConfigError("bad components syntax '" + part + "' (expected t:<k> or g:<a,b,..>)");
        }
        const std::string kind = part.substr(0, colon);
        const std::string rest = part.substr(colon + 1);
        if (kind == "t") {
            input.torus_count = std::stoi(rest);
        } else if (kind == "g") {
            std::string num;
            for (char c : rest + ",") {
                if (c == ',') {
                    if (!num.empty()) input.component_genera.push_back(std::stoi(num));
                    num.clear();
                } else {
                    num.push_back(c);
                }
            }
        } else {
            throw ConfigError("bad components kind '" + kind + "' (expected t or g)");
        }
    }
}

// "1..100" or "7" or "3,5,9".
std::vector<std::uint64_t> parse_seed_range(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = std::stoull(spec.substr(0, dots));
        const std::uint64_t hi = std::stoull(spec.substr(dots + 2));
        if (hi < lo) throw ConfigError("seed range " + spec + " is empty");
        if (hi - lo > 100000) throw ConfigError("seed range too large (max 100001 seeds)");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::string num;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!num.empty()) seeds.push_back(std::stoull(num));
            num.clear();
        } else {
            num.push_back(c);
        }
    }
    if (seeds.empty()) throw ConfigError("no seeds in '" + spec + "'");
    return seeds;
}

// "constant:<K>" or "poly:<c0>,<c1>,..." (K(u) = sum c_i u^i).
CurvatureProfile parse_builtin(const std::string& spec, double u_max) {
    const auto colon = spec.find(':');
    const std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "constant") {
        if (rest.empty()) throw ConfigError("builtin constant needs a value, e.g. constant:-1");
        const double k = std::stod(rest);
        return CurvatureProfile::closed_form([k](double) { return k; }, u_max, spec);
    }
    if (kind == "poly") {
        std::vector<double> coeffs;
        std::string num;
        for (char c : rest + ",") {
            if (c == ',') {
                if (!num.empty()) coeffs.push_back(std::stod(num));
                num.clear();
            } else {
                num.push_back(c);
            }
        }
        if (coeffs.empty()) throw ConfigError("builtin poly needs coefficients, e.g. poly:-1,0,-1");
        return CurvatureProfile::closed_form(
            [coeffs](double u) {
                double acc = 0.0;
                for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
                return acc;
            },
            u_max, spec);
    }
    throw ConfigError("unknown builtin '" + spec + "' (use constant:<K> or poly:<c0>,<c1>,...)");
}

void write_report_header(JsonWriter& w, const char* command) {
    w.field("version", kVersion);
    w.field("command", command);
    w.field("timestamp", timestamp_utc());
}

// ---------------------------------------------------------------- bound --

struct BoundArgs {
    int genus = -1;
    int boundary_genus = -1;
    std::string components;
    int boundary_count = -1;
    double cutoff = kDefaultCollarCutoff;
    double n_torus = -1.0;
    double u_star = -1.0;
    std::string convention = "paper";
    std::string out;
    bool sweep = false;
    int sweep_g_max = 5;
    int sweep_gb_max = 8;
};

void write_component(JsonWriter& w, const ComponentBound& c) {
    w.begin_object();
    w.field("genus", c.boundary_genus);
    w.field("U_star", c.u_star);
    w.field("h", c.h_at_u_star);
    w.field("R", c.disk_radius);
    w.field("lattice", c.lattice);
    w.field("lattice_true", c.lattice_true);
    w.field("lattice_rigorous", c.lattice_rigorous);
    w.field("collar", c.collar);
    w.field("total", c.total);
    w.end_object();
}

int run_bound(const BoundArgs& args) {
    if (args.sweep) {
        std::string csv = "g,g_boundary,U_star,h_at_U,R,lattice_real,lattice_floor,collar_real,"
                          "collar_floor,total_real,total_floor,area_convention\n";
        const AreaConvention conv = parse_convention(args.convention);
        for (int g = 0; g <= args.sweep_g_max; ++g) {
            for (int gb = 2; gb <= args.sweep_gb_max; ++gb) {
                const BoundReport r = combined_bound(g, gb, args.cutoff, conv);
                char line[512];
                std::snprintf(line, sizeof(line), "%d,%d,%s,%s,%s,%s,%lld,%s,%lld,%s,%lld,%s\n", g,
                              gb, format_double(r.per_component[0].u_star).c_str(),
                              format_double(r.h_at_u).c_str(),
                              format_double(r.disk_radius).c_str(),
                              format_double(r.count_lattice).c_str(), r.count_lattice_floor,
                              format_double(r.count_collar).c_str(), r.count_collar_floor,
                              format_double(r.total).c_str(), r.total_floor,
                              convention_name(conv));
                csv += line;
            }
        }
        const std::string path = resolve_out(args.out, "bound_sweep.csv");
        write_file_atomic(path, csv);
        std::cout << "wrote " << path << "\n";
        return 0;
    }

    if (args.genus < 0) throw ConfigError("need --g <genus>");
    BoundInput input;
    input.genus = args.genus;
    input.cutoff_length = args.cutoff;
    input.convention = parse_convention(args.convention);
    if (args.boundary_count > 0) input.boundary_count = args.boundary_count;
    if (args.n_torus >= 0.0) input.n_torus = args.n_torus;
    if (args.u_star > 0.0) input.u_star = args.u_star;
    if (!args.components.empty()) {
        parse_components(args.components, input);
    } else if (args.boundary_genus >= 0) {
        if (args.boundary_genus == 1) {
            throw DomainError("boundary genus 1: the collar-width formula has a pole at genus 1; "
                              "model torus components via --components \"t:<k>\" with --N");
        }
        input.component_genera = {args.boundary_genus};
    } else {
        throw ConfigError("need --gb <genus> or --components \"t:<k>;g:<a,b>\"");
    }

    const BoundReport r = multi_component_bound(input);

    JsonWriter w;
    w.begin_object();
    write_report_header(w, "bound");
    w.key("config");
    w.begin_object();
    w.field("g", input.genus);
    w.key("component_genera");
    w.begin_array();
    for (int g : input.component_genera) w.value(g);
    w.end_array();
    w.field("torus_count", input.torus_count);
    if (input.n_torus) {
        w.field("N_torus", *input.n_torus);
    } else {
        w.key("N_torus");
        w.null();
    }
    if (input.boundary_count) {
        w.field("n", *input.boundary_count);
    } else {
        w.key("n");
        w.null();
    }
    w.field("L", input.cutoff_length);
    w.field("area_convention", convention_name(input.convention));
    w.field("lattice_ratio_note", "disk radius argument reads tanh(U_star), not tan(U_star)");
    w.end_object();

    w.field("U_star", r.per_component.empty() ? 0.0 : r.per_component.front().u_star);
    w.field("h_at_U", r.h_at_u);
    w.field("d_max", r.d_max);
    w.field("d_max_detailed", r.d_max_detailed);
    w.field("R", r.disk_radius);
    w.key("lattice");
    w.begin_object();
    w.field("value", r.count_lattice);
    w.field("floor", r.count_lattice_floor);
    w.field("true_area", r.count_lattice_true);
    w.field("rigorous", r.count_lattice_rigorous);
    w.end_object();
    w.key("collar");
    w.begin_object();
    w.field("value", r.count_collar);
    w.field("floor", r.count_collar_floor);
    w.end_object();
    w.field("torus_contribution", r.torus_contribution);
    w.key("total");
    w.begin_object();
    w.field("value", r.total);
    w.field("floor", r.total_floor);
    w.field("true_area", r.total_true);
    w.end_object();
    w.key("per_component");
    w.begin_array();
    for (const ComponentBound& c : r.per_component) write_component(w, c);
    w.end_array();
    w.key("closing_claim");
    w.begin_object();
    w.field("evaluated", r.claim.evaluated);
    w.field("holds", r.claim.holds);
    w.field("lhs", r.claim.lhs);
    w.field("rhs", r.claim.rhs);
    w.field("N_used", r.claim.n_used);
    w.field("note", r.claim.note);
    w.end_object();
    w.end_object();

    const std::string path = resolve_out(args.out, "bound.json");
    write_file_atomic(path, w.str() + "\n");
    std::cout << "wrote " << path << "\n";
    return 0;
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string builtin;
    std::string profile;
    double u_max = 0.0;
    double step = 0.0;
    double tolerance = kDefaultComparisonTolerance;
    int report_points = 101;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    if (args.builtin.empty() == args.profile.empty()) {
        throw ConfigError("need exactly one of --builtin or --profile");
    }
    std::optional<CurvatureProfile> profile;
    if (!args.builtin.empty()) {
        if (!(args.u_max > 0.0)) throw ConfigError("--builtin needs --U <length>");
        profile = parse_builtin(args.builtin, args.u_max);
    } else {
        profile = CurvatureProfile::load(args.profile);
        if (args.u_max > 0.0 && args.u_max != profile->u_max()) {
            throw ConfigError("--U disagrees with the profile file's range (file has U = " +
                              std::to_string(profile->u_max()) + ")");
        }
    }
    const double step = args.step > 0.0 ? args.step : default_step(profile->u_max());
    const ComparisonReport report = verify_comparison(*profile, step, args.tolerance);

    const std::size_t n = report.grid.size();
    const std::size_t stride =
        std::max<std::size_t>(1, (n - 1) / std::max(1, args.report_points - 1));

    JsonWriter w;
    w.begin_object();
    write_report_header(w, "verify");
    w.key("config");
    w.begin_object();
    w.field("profile", report.profile_label);
    w.field("U", report.u_max);
    w.field("step", report.step);
    w.field("tolerance", report.tolerance);
    w.field("report_points", args.report_points);
    w.end_object();
    w.field("certified", report.certified);
    w.field("margin", report.margin);
    w.field("diff_ineq_max_residual", report.diff_ineq_max_residual);
    w.field("diff_ineq_ok", report.diff_ineq_ok);
    w.field("max_kg", report.max_kg);
    w.field("grid_points", static_cast<long long>(n));
    w.field("downsample_stride", static_cast<long long>(stride));
    w.key("samples");
    w.begin_object();
    std::vector<double> us, kgs, hs, js;
    for (std::size_t i = 0; i < n; i += stride) {
        us.push_back(report.grid[i]);
        kgs.push_back(report.kg[i]);
        hs.push_back(report.h[i]);
        js.push_back(report.j[i]);
    }
    w.key("u");
    w.values(us);
    w.key("kg");
    w.values(kgs);
    w.key("h");
    w.values(hs);
    w.key("J");
    w.values(js);
    w.end_object();
    w.end_object();

    const std::string path = resolve_out(args.out, "verify.json");
    write_file_atomic(path, w.str() + "\n");
    std::cout << (report.certified ? "certified" : "NOT certified") << ", margin "
              << format_double(report.margin) << ", wrote " << path << "\n";
    return report.certified ? 0 : 2;
}

// ----------------------------------------------------------------- pack --

struct PackArgs {
    double disk_radius = 0.0;
    double separation = 0.0;
    std::string seeds = "1";
    int attempts = 100000;
    std::string convention = "paper";
    std::string out_dir;
};

void write_experiment(const PackingExperiment& exp, const PackingAudit& audit,
                      const std::string& path) {
    JsonWriter w;
    w.begin_object();
    write_report_header(w, "pack");
    w.key("config");
    w.begin_object();
    w.field("R", exp.disk_radius);
    w.field("L", exp.separation);
    w.field("seed", exp.seed);
    w.field("attempts", exp.attempts);
    w.field("area_convention", convention_name(exp.convention));
    w.end_object();
    w.field("count", exp.count);
    w.field("bound_paper", exp.bound_paper);
    w.field("bound_rigorous", exp.bound_rigorous);
    w.field("min_separation", audit.min_separation);
    w.key("flags");
    w.begin_object();
    w.field("paper_violation", audit.paper_violation);
    w.field("rigorous_violation", audit.rigorous_violation);
    w.field("separation_ok", audit.separation_ok);
    w.end_object();
    w.key("points");
    w.begin_array();
    for (const HPoint& p : exp.points) {
        w.begin_array();
        w.value(p.x);
        w.value(p.y);
        w.end_array();
    }
    w.end_array();
    w.end_object();
    write_file_atomic(path, w.str() + "\n");
}

int run_pack(const PackArgs& args) {
    const AreaConvention conv = parse_convention(args.convention);
    const std::vector<std::uint64_t> seeds = parse_seed_range(args.seeds);
    const fs::path dir = args.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(args.out_dir);

    struct SeedRow {
        std::uint64_t seed;
        int count;
        bool paper_violation;
        bool rigorous_violation;
    };
    std::vector<SeedRow> rows;
    int max_count = 0;
    bool any_paper = false, any_rigorous = false, all_separated = true;
    double bound_paper = 0.0, bound_rigorous = 0.0;

    for (std::uint64_t seed : seeds) {
        const PackingExperiment exp =
            greedy_pack(args.disk_radius, args.separation, seed, args.attempts, conv);
        const PackingAudit audit = audit_bound(exp, conv);
        bound_paper = audit.bound_paper;
        bound_rigorous = audit.bound_rigorous;
        char name[64];
        std::snprintf(name, sizeof(name), "pack_seed%llu.json",
                      static_cast<unsigned long long>(seed));
        write_experiment(exp, audit, (dir / name).string());
        rows.push_back({seed, exp.count, audit.paper_violation, audit.rigorous_violation});
        max_count = std::max(max_count, exp.count);
        any_paper = any_paper || audit.paper_violation;
        any_rigorous = any_rigorous || audit.rigorous_violation;
        all_separated = all_separated && audit.separation_ok;
    }

    JsonWriter w;
    w.begin_object();
    write_report_header(w, "pack-summary");
    w.key("config");
    w.begin_object();
    w.field("R", args.disk_radius);
    w.field("L", args.separation);
    w.field("seeds", args.seeds);
    w.field("attempts", args.attempts);
    w.field("area_convention", convention_name(conv));
    w.end_object();
    w.field("experiments", static_cast<long long>(rows.size()));
    w.field("max_count", max_count);
    w.field("bound_paper", bound_paper);
    w.field("bound_rigorous", bound_rigorous);
    w.field("any_paper_violation", any_paper);
    w.field("any_rigorous_violation", any_rigorous);
    w.field("all_separation_ok", all_separated);
    w.key("per_seed");
    w.begin_array();
    for (const SeedRow& row : rows) {
        w.begin_object();
        w.field("seed", row.seed);
        w.field("count", row.count);
        w.field("paper_violation", row.paper_violation);
        w.field("rigorous_violation", row.rigorous_violation);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    const std::string summary_path = (dir / "pack_summary.json").string();
    write_file_atomic(summary_path, w.str() + "\n");
    std::cout << "max count " << max_count << " over " << rows.size() << " seeds (rigorous bound "
              << format_double(std::floor(bound_rigorous)) << "), wrote " << summary_path << "\n";
    if (any_rigorous || !all_separated) {
        std::cerr << "rigorous packing bound violated: experiment is inconsistent\n";
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------- spectrum --

struct SpectrumArgs {
    std::string preset;
    std::string group_file;
    double l_max = 2.0;
    int max_word_length = 8;
    double collar_cutoff = kDefaultCollarCutoff;
    std::string out_dir;
};

int run_spectrum(const SpectrumArgs& args) {
    if (args.preset.empty() == args.group_file.empty()) {
        throw ConfigError("need exactly one of --preset or --group");
    }
    const FuchsianGroup group =
        args.preset.empty() ? load_group(args.group_file) : preset_group(args.preset);
    const Spectrum spec = enumerate_spectrum(group, args.l_max, args.max_word_length);
    const CollarReport collar = collar_report(spec.entries, args.collar_cutoff, group.genus);

    const fs::path dir = args.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(args.out_dir);

    std::string csv = "length,trace_abs,word,multiplicity\n";
    for (const SpectrumEntry& e : spec.entries) {
        csv += format_double(e.length) + "," + format_double(e.trace_abs) + "," +
               word_to_string(e.representative_word) + "," + std::to_string(e.multiplicity) + "\n";
    }
    const std::string csv_path = (dir / "spectrum.csv").string();
    write_file_atomic(csv_path, csv);

    JsonWriter w;
    w.begin_object();
    write_report_header(w, "spectrum");
    w.key("config");
    w.begin_object();
    w.field("group", group.name);
    w.field("genus", group.genus);
    w.field("L_max", args.l_max);
    w.field("max_word_length", args.max_word_length);
    w.field("collar_cutoff", args.collar_cutoff);
    w.field("completeness", "relative to max_word_length");
    w.end_object();
    w.key("entries");
    w.begin_array();
    for (const SpectrumEntry& e : spec.entries) {
        w.begin_object();
        w.field("length", e.length);
        w.field("trace_abs", e.trace_abs);
        w.field("word", word_to_string(e.representative_word));
        w.field("multiplicity", e.multiplicity);
        w.end_object();
    }
    w.end_array();
    w.key("warnings");
    w.begin_array();
    for (const SpectrumWarning& warning : spec.warnings) {
        w.begin_object();
        w.field("word", word_to_string(warning.word));
        w.field("trace", warning.trace);
        w.end_object();
    }
    w.end_array();
    w.key("collar");
    w.begin_object();
    w.field("cutoff", collar.cutoff);
    w.field("genus", collar.genus);
    w.field("count_below_cutoff", collar.count_below_cutoff);
    w.field("count_bound", collar.count_bound);
    w.field("count_bound_floor", collar.count_bound_floor);
    w.field("within_bound", collar.within_bound);
    w.field("any_flag", collar.any_flag);
    w.key("entries");
    w.begin_array();
    for (const CollarEntry& e : collar.entries) {
        w.begin_object();
        w.field("length", e.length);
        w.field("halfwidth", e.halfwidth);
        w.field("collar_area", e.collar_area);
        w.field("area_below_two", e.area_below_two);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    w.end_object();
    const std::string json_path = (dir / "spectrum.json").string();
    write_file_atomic(json_path, w.str() + "\n");

    std::cout << spec.entries.size() << " entries <= L_max, " << collar.count_below_cutoff
              << " of them <= " << format_double(collar.cutoff) << " (bound "
              << collar.count_bound_floor << "), wrote " << csv_path << " and " << json_path
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary-slope bound toolkit"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "slope-count bound pipeline n(g, g_boundary)");
    bound->add_option("--g", bound_args.genus, "surface genus g >= 0 (unused with --sweep)");
    bound->add_option("--gb", bound_args.boundary_genus, "boundary genus (single component)");
    bound->add_option("--components", bound_args.components,
                      "multi-component boundary, e.g. \"t:2;g:2,3\"");
    bound->add_option("--n", bound_args.boundary_count, "boundary-curve count for the detailed form");
    bound->add_option("--L", bound_args.cutoff, "short-geodesic cutoff (default 1.75)");
    bound->add_option("--N", bound_args.n_torus, "external per-torus slope count N(g)");
    bound->add_option("--U-star", bound_args.u_star, "collar-width override");
    bound->add_option("--convention", bound_args.convention, "area convention paper|true");
    bound->add_option("--out", bound_args.out, "output path (default bound.json)");
    bound->add_flag("--sweep", bound_args.sweep, "emit a (g, gb) grid CSV instead");
    bound->add_option("--g-max", bound_args.sweep_g_max, "sweep: max g (default 5)");
    bound->add_option("--gb-max", bound_args.sweep_gb_max, "sweep: max gb (default 8)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "curvature comparison certificate kg <= h");
    verify->add_option("--builtin", verify_args.builtin,
                       "builtin profile, constant:<K> or poly:<c0>,<c1>,...");
    verify->add_option("--profile", verify_args.profile, "two-column (u K) profile file");
    verify->add_option("--U", verify_args.u_max, "integration range for builtin profiles");
    verify->add_option("--step", verify_args.step, "integration step (default U/1e5)");
    verify->add_option("--tol", verify_args.tolerance, "certification tolerance (default 1e-7)");
    verify->add_option("--report-points", verify_args.report_points,
                       "approximate sample count in the report (default 101)");
    verify->add_option("--out", verify_args.out, "output path (default verify.json)");

    PackArgs pack_args;
    CLI::App* pack = app.add_subcommand("pack", "greedy separated sets vs counting bounds");
    pack->add_option("--R", pack_args.disk_radius, "disk radius (<= 10)")->required();
    pack->add_option("--L", pack_args.separation, "pairwise separation")->required();
    pack->add_option("--seeds", pack_args.seeds, "seed list or range, e.g. 1..100 (default 1)");
    pack->add_option("--attempts", pack_args.attempts,
                     "consecutive-rejection cutoff (default 100000)");
    pack->add_option("--convention", pack_args.convention, "area convention paper|true");
    pack->add_option("--out-dir", pack_args.out_dir, "output directory");

    SpectrumArgs spectrum_args;
    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-geodesic length spectrum");
    spectrum->add_option("--preset", spectrum_args.preset,
                         "preset group: modular-torus | octagon-g2");
    spectrum->add_option("--group", spectrum_args.group_file, "group JSON file");
    spectrum->add_option("--Lmax", spectrum_args.l_max, "length cutoff (default 2.0)");
    spectrum->add_option("--max-word-length", spectrum_args.max_word_length,
                         "enumeration depth (default 8, max 12)");
    spectrum->add_option("--collar-L", spectrum_args.collar_cutoff,
                         "collar-report cutoff (default 1.75)");
    spectrum->add_option("--out-dir", spectrum_args.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bound->parsed()) return run_bound(bound_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (pack->parsed()) return run_pack(pack_args);
        if (spectrum->parsed()) return run_spectrum(spectrum_args);
    } catch (const ProfileError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 1;
    } catch (const IntegrationError& e) {
        std::cerr << "integration error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
