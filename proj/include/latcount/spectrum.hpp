#ifndef LATCOUNT_SPECTRUM_HPP
#define LATCOUNT_SPECTRUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace latcount {

// Multi-axis sine frequency scheme. Axis frequencies for row j (1-based):
//   axis 0: sin((u+j) * p)
//   axis 1: sin((u+j) * (p+h))
//   axis 2: sin((u+j) * (p+v))
//   axis 3: sin((u+j) * (p+v+h))
// with 1, 2, or 4 axes used. Defaults: p = 1, v = 3*pi/(u+1), h = (pi/2)/(u+1).
struct FrequencyScheme {
    int axes = 4;
    double u = 1.0;
    double p = 1.0;
    double v = 0.0;
    double h = 0.0;
};

FrequencyScheme make_scheme(int axes, double u);
FrequencyScheme make_scheme(int axes, double u, double p, double v, double h);

// presets: four axes with u = n^2 / u = n^3, two axes and one axis with u = n^2
FrequencyScheme scheme_exp1(int n);
FrequencyScheme scheme_exp2(int n);
FrequencyScheme scheme_two_axis(int n);
FrequencyScheme scheme_one_axis(int n);

// n x d frequency table, row-major
struct FreqMatrix {
    int n = 0;
    int d = 0;
    std::vector<double> v;

    double at(int row, int ax) const { return v[static_cast<size_t>(row) * d + ax]; }
    double& at(int row, int ax) { return v[static_cast<size_t>(row) * d + ax]; }
};

// integerized counterpart
struct IntMatrix {
    int n = 0;
    int d = 0;
    std::vector<std::int64_t> v;

    std::int64_t at(int row, int ax) const { return v[static_cast<size_t>(row) * d + ax]; }
    std::int64_t& at(int row, int ax) { return v[static_cast<size_t>(row) * d + ax]; }
};

FreqMatrix build_frequencies(int n, const FrequencyScheme& scheme);

// sign vector over {-1, 0, +1}, one entry per row
using SignVector = std::vector<int>;

struct ScanOptions {
    int limit = 16;       // refuse n beyond this (TooLarge): the scan is 3^n
    bool parallel = true; // chunked OpenMP scan; results identical to serial
};

// Extrema of max_ax |sum_j e_j * f[j][ax]| over nonzero sign vectors e.
// argmin is canonical: negated if needed so its first nonzero entry is -1,
// ties broken lexicographically, so any enumeration order agrees.
struct ScanResult {
    double min_max = 0.0;
    double max_max = 0.0;
    SignVector argmin;
};

ScanResult min_max_frequency(const FreqMatrix& f, const ScanOptions& opts = {});

// Same scan over an integerized table; exact. When modulus > 0, additionally
// reports whether some nonzero sign vector has every axis sum divisible by it.
struct IntScanResult {
    std::int64_t min_max = 0;
    std::int64_t max_max = 0;
    bool aliased = false;
};

IntScanResult scan_integer_signs(const IntMatrix& z, std::int64_t modulus = 0,
                                 const ScanOptions& opts = {});

// Round away from zero: z = sign(x) * ceil(|multiplier * x|); zero stays zero.
IntMatrix integerize(const FreqMatrix& f, std::int64_t multiplier);

// multiplier = ceil((n+1) / min_max_frequency); verifies the integerized table
// leaves no nonzero sign vector at zero on every axis. Throws DegenerateSpectrum
// when min_max_frequency is not positive, IntegerizationUnsafe if verification
// fails, TooLarge via the scan guard.
std::int64_t choose_multiplier(const FreqMatrix& f, double min_max, const ScanOptions& opts = {});

// Smallest multiplier >= 1 passing the same verification (searched upward,
// capped). Keeps lattice sizes desk-scale when the default formula overshoots.
std::int64_t minimal_safe_multiplier(const FreqMatrix& f, std::int64_t cap = 1000000,
                                     const ScanOptions& opts = {});

// Throws IntegerizationUnsafe unless every nonzero sign vector moves some axis
// away from 0 (mod `modulus` when modulus > 0).
void check_integerization(const IntMatrix& z, std::int64_t modulus = 0,
                          const ScanOptions& opts = {});

// modulus = 2 + max over axes of sum_j |z[j][ax]|: one more than any reachable
// absolute axis sum, so nonzero sums cannot wrap to 0.
std::int64_t choose_modulus(const IntMatrix& z);

// one row of the survey table produced by spectrum_table
struct SpectrumReport {
    int n = 0;
    FrequencyScheme scheme;
    double min_max = 0.0;
    double max_max = 0.0;
    SignVector argmin;
};

enum class SchemePreset { Exp1, Exp2, TwoAxis, OneAxis };

FrequencyScheme make_preset(SchemePreset preset, int n);

// Scan rows n_lo..n_hi under a preset (scheme rebuilt per n since u depends on n).
std::vector<SpectrumReport> spectrum_table(SchemePreset preset, int n_lo, int n_hi,
                                           const ScanOptions& opts = {});

// Profile of one sign combination as the base point sweeps [t0, t1]:
// g(t) = sum_j e_j * sin((u+j) * t), sampled at `samples` evenly spaced points
// (endpoints included when samples >= 2).
std::vector<std::pair<double, double>> axis_profile(double u, const SignVector& signs, double t0,
                                                    double t1, int samples);

} // namespace latcount

#endif
