#include "slopes/spectra.hpp"

#include "slopes/bounds.hpp"
#include "slopes/errors.hpp"
#include "slopes/hypmath.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

namespace slopes {

namespace {

constexpr double kDetTolerance = 1e-9;
constexpr double kEllipticWarn = 1e-6;
constexpr double kParabolicBand = 1e-9;
constexpr double kLengthBucket = 1e-6;
constexpr int kMaxGenerators = 8;
constexpr int kMaxWordLength = 12;

// 4-bit letter code: generator i (1-based) -> 2(i-1), inverse -> 2(i-1)+1.
std::uint64_t pack_word(const Word& w) {
    std::uint64_t key = 0;
    for (int letter : w) {
        const std::uint64_t code = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
        key = (key << 4) | code;
    }
    return key;
}

// Lexicographically smallest packing over all rotations of w and of w^-1.
std::uint64_t canonical_key(const Word& w) {
    const std::size_t n = w.size();
    Word inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = -w[n - 1 - i];
    std::uint64_t best = ~0ULL;
    Word rot(n);
    const Word* variants[2] = {&w, &inv};
    for (const Word* base : variants) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i < n; ++i) rot[i] = (*base)[(r + i) % n];
            best = std::min(best, pack_word(rot));
        }
    }
    return best;
}

// w equals one of its proper rotations, i.e. w = v^m cyclically.
bool is_literal_power(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = w[i] == w[(i + d) % n];
        if (same) return true;
    }
    return false;
}

Mat2 word_matrix(const std::vector<Mat2>& gens, const std::vector<Mat2>& inv_gens,
                 const Word& w) {
    Mat2 m;
    int since_renorm = 0;
    for (int letter : w) {
        m = m * (letter > 0 ? gens[letter - 1] : inv_gens[-letter - 1]);
        // Renormalize the determinant drift every 8 products.
        if (++since_renorm == 8) {
            const double det = m.det();
            if (det > 0.0) {
                const double s = 1.0 / std::sqrt(det);
                m.a *= s;
                m.b *= s;
                m.c *= s;
                m.d *= s;
            }
            since_renorm = 0;
        }
    }
    return m;
}

struct ClassCandidate {
    double length;
    double trace_abs;
    Word word;
};

} // namespace

void validate_group(const FuchsianGroup& group) {
    if (group.genus < 1) throw DomainError("group genus must be >= 1");
    if (static_cast<int>(group.generators.size()) > kMaxGenerators) {
        throw DomainError("at most 8 generators supported");
    }
    for (std::size_t i = 0; i < group.generators.size(); ++i) {
        const Mat2& m = group.generators[i];
        if (std::abs(m.det() - 1.0) > kDetTolerance) {
            throw DomainError("generator " + std::to_string(i + 1) + " has determinant " +
                              std::to_string(m.det()) + ", expected 1");
        }
        if (std::abs(m.trace()) < 2.0 - kDetTolerance) {
            throw DomainError("generator " + std::to_string(i + 1) +
                              " is elliptic (|trace| < 2); not a surface-group generator");
        }
    }
}

FuchsianGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open group file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": JSON parse error: " + e.what());
    }
    FuchsianGroup g;
    try {
        g.name = j.at("name").get<std::string>();
        g.genus = j.at("genus").get<int>();
        for (const auto& gen : j.at("generators")) {
            Mat2 m;
            m.a = gen.at(0).at(0).get<double>();
            m.b = gen.at(0).at(1).get<double>();
            m.c = gen.at(1).at(0).get<double>();
            m.d = gen.at(1).at(1).get<double>();
            g.generators.push_back(m);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": expected {name, genus, generators:[[[a,b],[c,d]],...]}: " +
                          e.what());
    }
    validate_group(g);
    return g;
}

FuchsianGroup preset_group(const std::string& name) {
    if (name == "modular-torus") {
        FuchsianGroup g;
        g.name = name;
        g.genus = 1;
        g.generators = {Mat2{1.0, 1.0, 1.0, 2.0}, Mat2{1.0, -1.0, -1.0, 2.0}};
        return g;
    }
    if (name == "octagon-g2") {
        FuchsianGroup g;
        g.name = name;
        g.genus = 2;
        const double ch = 1.0 + std::sqrt(2.0);            // cosh(l0/2)
        const double sh = std::sqrt(2.0 + 2.0 * std::sqrt(2.0)); // sinh(l0/2)
        const Mat2 x{ch, sh, sh, ch};
        for (int k = 0; k < 4; ++k) {
            const double half = 0.5 * k * (3.14159265358979323846 / 4.0);
            const Mat2 rot{std::cos(half), std::sin(half), -std::sin(half), std::cos(half)};
            g.generators.push_back(rot * x * rot.inverse());
        }
        return g;
    }
    throw ConfigError("unknown preset '" + name + "'; available: modular-torus, octagon-g2");
}

std::vector<std::string> preset_names() { return {"modular-torus", "octagon-g2"}; }

double translation_length(const Mat2& m) {
    const double t = std::abs(m.trace());
    if (t < 2.0 - kParabolicBand) {
        throw DomainError("translation_length: elliptic element (|trace| = " + std::to_string(t) +
                          " < 2) has no geodesic");
    }
    if (t <= 2.0 + kParabolicBand) {
        throw DomainError("translation_length: parabolic element (|trace| = 2) has zero "
                          "translation length");
    }
    return 2.0 * std::acosh(0.5 * t);
}

Spectrum enumerate_spectrum(const FuchsianGroup& group, double l_max, int max_word_length) {
    if (!(l_max > 0.0)) throw DomainError("enumerate_spectrum: L_max must be > 0");
    if (max_word_length < 1) throw DomainError("enumerate_spectrum: max word length must be >= 1");
    if (max_word_length > kMaxWordLength) {
        throw DomainError("enumerate_spectrum: max word length capped at 12 (determinant drift)");
    }
    validate_group(group);

    Spectrum result;
    result.l_max = l_max;
    result.max_word_length = max_word_length;
    if (group.generators.empty()) return result;

    const int n_gens = static_cast<int>(group.generators.size());
    std::vector<Mat2> inv_gens;
    inv_gens.reserve(group.generators.size());
    for (const Mat2& m : group.generators) inv_gens.push_back(m.inverse());

    std::vector<int> alphabet;
    for (int i = 1; i <= n_gens; ++i) {
        alphabet.push_back(i);
        alphabet.push_back(-i);
    }

    std::vector<ClassCandidate> candidates;
    std::unordered_set<std::uint64_t> seen;
    Word word;

    auto visit = [&](const Word& w) {
        if (is_literal_power(w)) return;
        const std::uint64_t key = canonical_key(w);
        if (!seen.insert(key).second) return;
        const Mat2 m = word_matrix(group.generators, inv_gens, w);
        const double t = std::abs(m.trace());
        if (t < 2.0 - kEllipticWarn) {
            result.warnings.push_back({w, m.trace()});
            return;
        }
        if (t <= 2.0 + kParabolicBand) return; // parabolic or identity class
        const double len = 2.0 * std::acosh(0.5 * t);
        if (len <= l_max + kLengthBucket) candidates.push_back({len, t, w});
    };

    // Length by length (breadth-first); cyclic reduction = reduced word
    // whose last letter does not cancel the first.
    for (int len = 1; len <= max_word_length; ++len) {
        seen.clear();
        word.clear();
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == len) {
                if (word.front() != -word.back() || len == 1) visit(word);
                return;
            }
            for (int letter : alphabet) {
                if (depth > 0 && letter == -word.back()) continue;
                word.push_back(letter);
                self(self, depth + 1);
                word.pop_back();
            }
        };
        rec(rec, 0);
    }

    std::sort(candidates.begin(), candidates.end(), [](const ClassCandidate& lhs,
                                                       const ClassCandidate& rhs) {
        if (lhs.length != rhs.length) return lhs.length < rhs.length;
        if (lhs.word.size() != rhs.word.size()) return lhs.word.size() < rhs.word.size();
        return lhs.word < rhs.word;
    });

    // Bucket by length at 1e-6.
    std::vector<SpectrumEntry> buckets;
    for (const ClassCandidate& c : candidates) {
        if (!buckets.empty() && c.length - buckets.back().length <= kLengthBucket) {
            ++buckets.back().multiplicity;
            continue;
        }
        SpectrumEntry e;
        e.length = c.length;
        e.trace_abs = c.trace_abs;
        e.representative_word = c.word;
        e.multiplicity = 1;
        buckets.push_back(std::move(e));
    }

    // Drop buckets that are integer multiples of a shorter entry: powers of
    // shorter classes (exact literal powers were already skipped, this
    // catches powers hidden by group relations).
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        bool primitive = true;
        for (std::size_t j = 0; j < i && primitive; ++j) {
            const double ratio = buckets[i].length / buckets[j].length;
            const double nearest = std::round(ratio);
            if (nearest >= 2.0 &&
                std::abs(buckets[i].length - nearest * buckets[j].length) <=
                    kLengthBucket * nearest) {
                primitive = false;
            }
        }
        if (primitive && buckets[i].length <= l_max) result.entries.push_back(buckets[i]);
    }
    return result;
}

CollarReport collar_report(const std::vector<SpectrumEntry>& entries, double cutoff, int genus) {
    if (genus < 1) throw DomainError("collar_report: genus must be >= 1");
    if (!(cutoff > 0.0)) throw DomainError("collar_report: cutoff must be > 0");
    CollarReport report;
    report.cutoff = cutoff;
    report.genus = genus;
    report.count_bound = collar_count_bound(genus);
    report.count_bound_floor = static_cast<long long>(std::floor(report.count_bound));
    for (const SpectrumEntry& e : entries) {
        if (e.length > cutoff) continue;
        CollarEntry c;
        c.length = e.length;
        c.halfwidth = collar_halfwidth(e.length);
        c.collar_area = collar_area(e.length);
        c.area_below_two = c.collar_area < 2.0;
        report.any_flag = report.any_flag || c.area_below_two;
        report.entries.push_back(c);
    }
    report.count_below_cutoff = static_cast<int>(report.entries.size());
    report.within_bound = report.count_below_cutoff <= report.count_bound_floor;
    return report;
}

std::string word_to_string(const Word& word) {
    std::string s;
    for (int letter : word) {
        const int idx = std::abs(letter) - 1;
        if (idx < 0 || idx >= kMaxGenerators) throw DomainError("word letter out of range");
        s.push_back(static_cast<char>((letter > 0 ? 'a' : 'A') + idx));
    }
    return s;
}

} // namespace slopes
