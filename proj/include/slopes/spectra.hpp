#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slopes {

// Row-major 2x2 real matrix, kept at determinant 1.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const { return Mat2{d, -b, -c, a}; }
    Mat2 operator*(const Mat2& o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Word in the generators: letter +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

struct GroupElement {
    Mat2 m;
    Word word;
};

struct FuchsianGroup {
    std::string name;
    int genus = 1; // declared genus, used for the collar-count comparison
    std::vector<Mat2> generators;
};

// Validates determinant-1 (within 1e-9) and non-elliptic generators
// (|trace| >= 2 - 1e-9). Throws DomainError otherwise.
void validate_group(const FuchsianGroup& group);

// JSON group file {name, genus, generators: [[[a,b],[c,d]], ...]}.
FuchsianGroup load_group(const std::string& path);

// Shipped presets.
//
// "modular-torus": the once-punctured modular torus, generators
//   [[1,1],[1,2]] and [[1,-1],[-1,2]] (free; commutator is parabolic).
// "octagon-g2": the regular-octagon genus-2 surface group, generators
//   A_k = R(k pi/4) X R(-k pi/4), k = 0..3, where X translates by
//   l0 = 2 arccosh(1 + sqrt 2) along the axis through i and R rotates
//   about i. The octagon relation A0 A1^-1 A2 A3^-1 A0^-1 A1 A2^-1 A3 = 1
//   holds to machine precision; the systole is l0.
FuchsianGroup preset_group(const std::string& name);
std::vector<std::string> preset_names();

// Translation length 2 arccosh(|trace|/2) of a hyperbolic element.
// Parabolic (|trace| within 1e-9 of 2) and elliptic (|trace| < 2) inputs
// are rejected with distinct messages.
double translation_length(const Mat2& m);
inline double translation_length(const GroupElement& g) { return translation_length(g.m); }

struct SpectrumEntry {
    double length = 0.0;
    double trace_abs = 0.0;
    Word representative_word;
    int multiplicity = 0; // cyclic word classes (mod rotation/inversion) in the bucket
};

struct SpectrumWarning {
    Word word;
    double trace = 0.0;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries; // primitive classes, ascending length
    std::vector<SpectrumWarning> warnings; // elliptic-looking words (non-discrete input)
    double l_max = 0.0;
    int max_word_length = 0; // completeness is relative to this
};

// Breadth-first enumeration of cyclically-reduced words up to
// max_word_length, one matrix evaluation per cyclic class (words identified
// up to rotation and inversion). Classes are bucketed by length at 1e-6;
// buckets that are integer multiples of a shorter entry are dropped as
// non-primitive. Literal power words (w = v^m cyclically) are skipped
// during enumeration. At most 8 generators and word length 12.
Spectrum enumerate_spectrum(const FuchsianGroup& group, double l_max, int max_word_length);

struct CollarEntry {
    double length = 0.0;
    double halfwidth = 0.0;   // S(d)
    double collar_area = 0.0; // 2 d / sinh(d/2)
    bool area_below_two = false; // would contradict the collar chain for d <= L
};

struct CollarReport {
    double cutoff = 0.0; // L
    int genus = 0;
    int count_below_cutoff = 0;
    double count_bound = 0.0; // 2 pi (genus - 1)
    long long count_bound_floor = 0;
    bool within_bound = false;
    std::vector<CollarEntry> entries; // one per spectrum entry with length <= L
    bool any_flag = false;
};

// Collar-lemma quantities for the short entries and the comparison of
// their count against 2 pi (genus - 1).
CollarReport collar_report(const std::vector<SpectrumEntry>& entries, double cutoff, int genus);

// "a1.A2" style rendering: letters a,b,... for generators, capitals for
// inverses (supports up to 8 generators).
std::string word_to_string(const Word& word);

} // namespace slopes
