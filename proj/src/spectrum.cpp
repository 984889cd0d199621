#include "latcount/spectrum.hpp"
#include "latcount/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#ifdef LATCOUNT_HAVE_OPENMP
#include <omp.h>
#endif

namespace latcount {

FrequencyScheme make_scheme(int axes, double u) {
    if (axes != 1 && axes != 2 && axes != 4)
        throw Error("axis count must be 1, 2, or 4");
    if (u < 1.0) throw Error("bias u must be >= 1");
    FrequencyScheme s;
    s.axes = axes;
    s.u = u;
    s.p = 1.0;
    s.v = 3.0 * std::numbers::pi / (u + 1.0);
    s.h = (std::numbers::pi / 2.0) / (u + 1.0);
    return s;
}

FrequencyScheme make_scheme(int axes, double u, double p, double v, double h) {
    FrequencyScheme s = make_scheme(axes, u);
    s.p = p;
    s.v = v;
    s.h = h;
    return s;
}

FrequencyScheme scheme_exp1(int n) { return make_scheme(4, double(n) * n); }
FrequencyScheme scheme_exp2(int n) { return make_scheme(4, double(n) * n * n); }
FrequencyScheme scheme_two_axis(int n) { return make_scheme(2, double(n) * n); }
FrequencyScheme scheme_one_axis(int n) { return make_scheme(1, double(n) * n); }

FrequencyScheme make_preset(SchemePreset preset, int n) {
    switch (preset) {
        case SchemePreset::Exp1: return scheme_exp1(n);
        case SchemePreset::Exp2: return scheme_exp2(n);
        case SchemePreset::TwoAxis: return scheme_two_axis(n);
        case SchemePreset::OneAxis: return scheme_one_axis(n);
    }
    throw Error("unknown preset");
}

FreqMatrix build_frequencies(int n, const FrequencyScheme& scheme) {
    FreqMatrix f;
    f.n = n;
    f.d = scheme.axes;
    f.v.resize(static_cast<size_t>(n) * scheme.axes);
    for (int j = 1; j <= n; ++j) {
        const double base = scheme.u + j;
        double angles[4] = {scheme.p, scheme.p + scheme.h, scheme.p + scheme.v,
                            scheme.p + scheme.v + scheme.h};
        for (int ax = 0; ax < scheme.axes; ++ax) f.at(j - 1, ax) = std::sin(base * angles[ax]);
    }
    return f;
}

namespace {

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

// Reflected ternary Gray walk over sign vectors: consecutive states differ in
// one digit by +/-1, so axis sums update in O(axes). Digit j of the plain
// odometer is (k / 3^j) % 3; the gray digit reflects it when the digit sum
// above j is odd. Sign e_j = gray_j - 1.
struct GrayWalk {
    int n = 0;
    std::vector<std::int8_t> digits; // plain odometer, least significant first
    std::vector<std::int8_t> gray;
    std::vector<std::int8_t> par; // parity of digit sum strictly above j
    int ones = 0;                 // how many gray digits equal 1 (sign 0)

    void init(int nn, std::uint64_t k) {
        n = nn;
        digits.assign(n, 0);
        gray.assign(n, 0);
        par.assign(n, 0);
        std::uint64_t r = k;
        for (int j = 0; j < n; ++j) {
            digits[j] = static_cast<std::int8_t>(r % 3);
            r /= 3;
        }
        int p = 0;
        for (int j = n - 1; j >= 0; --j) {
            par[j] = static_cast<std::int8_t>(p);
            gray[j] = par[j] ? static_cast<std::int8_t>(2 - digits[j]) : digits[j];
            p ^= digits[j] & 1;
        }
        ones = 0;
        for (int j = 0; j < n; ++j) ones += gray[j] == 1;
    }

    // advance to the next state; returns (digit index, gray delta in {-1,+1})
    std::pair<int, int> step() {
        int t = 0;
        while (digits[t] == 2) {
            digits[t] = 0; // rolled digits keep their gray value
            ++t;
        }
        ++digits[t];
        int gn = par[t] ? 2 - digits[t] : digits[t];
        int delta = gn - gray[t];
        ones += (gn == 1) - (gray[t] == 1);
        gray[t] = static_cast<std::int8_t>(gn);
        for (int j = 0; j < t; ++j) par[j] ^= 1; // the increment flips parity below t
        return {t, delta};
    }

    SignVector signs() const {
        SignVector e(n);
        for (int j = 0; j < n; ++j) e[j] = gray[j] - 1;
        return e;
    }
};

// Negating a sign vector leaves every |axis sum| unchanged, so report the
// representative whose first nonzero entry is -1.
void canonicalize(SignVector& e) {
    for (int s : e) {
        if (s == 0) continue;
        if (s > 0)
            for (int& x : e) x = -x;
        break;
    }
}

struct DoubleChunk {
    bool any = false;
    double min_v = std::numeric_limits<double>::infinity();
    double max_v = -std::numeric_limits<double>::infinity();
    SignVector argmin;
};

// exact axis-sum maximum for one sign vector, summed in fixed row order
double exact_max_abs(const FreqMatrix& f, const SignVector& e) {
    double mx = 0.0;
    for (int ax = 0; ax < f.d; ++ax) {
        double s = 0.0;
        for (int j = 0; j < f.n; ++j)
            if (e[j] != 0) s += e[j] > 0 ? f.at(j, ax) : -f.at(j, ax);
        mx = std::max(mx, std::abs(s));
    }
    return mx;
}

bool min_improves(double val, const SignVector& vec, const DoubleChunk& best) {
    if (val != best.min_v) return val < best.min_v;
    return best.argmin.empty() ? true : vec < best.argmin;
}

DoubleChunk scan_chunk(const FreqMatrix& f, std::uint64_t k0, std::uint64_t k1) {
    // Incremental sums drift by rounding over long walks, so candidates within
    // `margin` of the running best are re-evaluated from scratch; the recorded
    // extrema depend only on the winning vectors, not on the walk or chunking.
    constexpr double margin = 1e-9;
    DoubleChunk best;
    GrayWalk w;
    w.init(f.n, k0);
    double sums[4] = {0, 0, 0, 0};
    for (int ax = 0; ax < f.d; ++ax)
        for (int j = 0; j < f.n; ++j) sums[ax] += (w.gray[j] - 1) * f.at(j, ax);
    for (std::uint64_t k = k0;;) {
        if (w.ones != f.n) {
            double mx = 0.0;
            for (int ax = 0; ax < f.d; ++ax) mx = std::max(mx, std::abs(sums[ax]));
            if (mx <= best.min_v + margin) {
                SignVector e = w.signs();
                double exact = exact_max_abs(f, e);
                canonicalize(e);
                if (min_improves(exact, e, best)) {
                    best.min_v = exact;
                    best.argmin = std::move(e);
                }
                best.any = true;
            }
            if (mx >= best.max_v - margin) {
                double exact = exact_max_abs(f, w.signs());
                best.max_v = std::max(best.max_v, exact);
                best.any = true;
            }
        }
        if (++k == k1) break;
        auto [t, delta] = w.step();
        for (int ax = 0; ax < f.d; ++ax) sums[ax] += delta * f.at(t, ax);
    }
    return best;
}

int chunk_exponent(int n, bool parallel) {
    int threads = 1;
#ifdef LATCOUNT_HAVE_OPENMP
    if (parallel) threads = omp_get_max_threads();
#else
    (void)parallel;
#endif
    int s = 0;
    while (s < n && pow3(s) < static_cast<std::uint64_t>(4) * threads) ++s;
    return parallel ? s : 0;
}

void check_scan_size(int n, const ScanOptions& opts) {
    if (n < 1) throw Error("frequency table has no rows");
    if (n > opts.limit)
        throw TooLarge("sign-vector scan over " + std::to_string(n) +
                       " rows exceeds the limit of " + std::to_string(opts.limit));
}

} // namespace

ScanResult min_max_frequency(const FreqMatrix& f, const ScanOptions& opts) {
    check_scan_size(f.n, opts);
    const int s = chunk_exponent(f.n, opts.parallel);
    const std::uint64_t chunks = pow3(s), span = pow3(f.n - s);
    std::vector<DoubleChunk> parts(chunks);
#ifdef LATCOUNT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i)
        parts[i] = scan_chunk(f, i * span, (i + 1) * span);
    DoubleChunk best;
    for (const auto& part : parts) {
        if (!part.any) continue;
        best.any = true;
        if (min_improves(part.min_v, part.argmin, best)) {
            best.min_v = part.min_v;
            best.argmin = part.argmin;
        }
        best.max_v = std::max(best.max_v, part.max_v);
    }
    if (!best.any) throw Error("no nonzero sign vector (empty scan)");
    return ScanResult{best.min_v, best.max_v, best.argmin};
}

IntScanResult scan_integer_signs(const IntMatrix& z, std::int64_t modulus,
                                 const ScanOptions& opts) {
    check_scan_size(z.n, opts);
    const int s = chunk_exponent(z.n, opts.parallel);
    const std::uint64_t chunks = pow3(s), span = pow3(z.n - s);
    struct IntChunk {
        std::int64_t min_v = std::numeric_limits<std::int64_t>::max();
        std::int64_t max_v = 0;
        bool aliased = false;
    };
    std::vector<IntChunk> parts(chunks);
#ifdef LATCOUNT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i) {
        IntChunk local;
        GrayWalk w;
        w.init(z.n, i * span);
        std::int64_t sums[4] = {0, 0, 0, 0};
        for (int ax = 0; ax < z.d; ++ax)
            for (int j = 0; j < z.n; ++j) sums[ax] += (w.gray[j] - 1) * z.at(j, ax);
        const std::uint64_t k1 = (i + 1) * span;
        for (std::uint64_t k = i * span;;) {
            if (w.ones != z.n) {
                std::int64_t mx = 0;
                bool zero_mod = true;
                for (int ax = 0; ax < z.d; ++ax) {
                    std::int64_t a = std::llabs(sums[ax]);
                    mx = std::max(mx, a);
                    if (modulus > 0 ? (a % modulus != 0) : (a != 0)) zero_mod = false;
                }
                local.min_v = std::min(local.min_v, mx);
                local.max_v = std::max(local.max_v, mx);
                if (zero_mod) local.aliased = true;
            }
            if (++k == k1) break;
            auto [t, delta] = w.step();
            for (int ax = 0; ax < z.d; ++ax) sums[ax] += delta * z.at(t, ax);
        }
        parts[i] = local;
    }
    IntScanResult out;
    std::int64_t mn = std::numeric_limits<std::int64_t>::max();
    for (const auto& part : parts) {
        mn = std::min(mn, part.min_v);
        out.max_max = std::max(out.max_max, part.max_v);
        out.aliased = out.aliased || part.aliased;
    }
    out.min_max = mn;
    return out;
}

IntMatrix integerize(const FreqMatrix& f, std::int64_t multiplier) {
    if (multiplier < 1) throw Error("multiplier must be >= 1");
    IntMatrix z;
    z.n = f.n;
    z.d = f.d;
    z.v.resize(f.v.size());
    for (size_t i = 0; i < f.v.size(); ++i) {
        double x = f.v[i];
        if (x == 0.0) {
            z.v[i] = 0;
            continue;
        }
        double mag = std::ceil(std::abs(static_cast<double>(multiplier) * x));
        z.v[i] = x > 0 ? static_cast<std::int64_t>(mag) : -static_cast<std::int64_t>(mag);
    }
    return z;
}

std::int64_t choose_multiplier(const FreqMatrix& f, double min_max, const ScanOptions& opts) {
    if (!(min_max > 0.0) || !std::isfinite(min_max))
        throw DegenerateSpectrum("min-max frequency must be positive, got " +
                                 std::to_string(min_max));
    double raw = std::ceil((f.n + 1) / min_max);
    auto m = static_cast<std::int64_t>(raw);
    check_integerization(integerize(f, m), 0, opts);
    return m;
}

std::int64_t minimal_safe_multiplier(const FreqMatrix& f, std::int64_t cap,
                                     const ScanOptions& opts) {
    for (std::int64_t m = 1; m <= cap; ++m) {
        IntScanResult r = scan_integer_signs(integerize(f, m), 0, opts);
        if (!r.aliased) return m;
    }
    throw IntegerizationUnsafe("no safe multiplier up to " + std::to_string(cap));
}

void check_integerization(const IntMatrix& z, std::int64_t modulus, const ScanOptions& opts) {
    IntScanResult r = scan_integer_signs(z, modulus, opts);
    if (r.aliased)
        throw IntegerizationUnsafe(
            modulus > 0 ? "some nonzero sign vector is 0 mod " + std::to_string(modulus) +
                              " on every axis"
                        : "some nonzero sign vector sums to 0 on every axis");
}

std::int64_t choose_modulus(const IntMatrix& z) {
    std::int64_t best = 0;
    for (int ax = 0; ax < z.d; ++ax) {
        std::int64_t s = 0;
        for (int j = 0; j < z.n; ++j) s += std::llabs(z.at(j, ax));
        best = std::max(best, s);
    }
    return best + 2;
}

std::vector<SpectrumReport> spectrum_table(SchemePreset preset, int n_lo, int n_hi,
                                           const ScanOptions& opts) {
    if (n_lo < 1 || n_hi < n_lo) throw Error("bad n range");
    std::vector<SpectrumReport> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        FrequencyScheme sch = make_preset(preset, n);
        FreqMatrix f = build_frequencies(n, sch);
        ScanResult r = min_max_frequency(f, opts);
        rows.push_back(SpectrumReport{n, sch, r.min_max, r.max_max, r.argmin});
    }
    return rows;
}

std::vector<std::pair<double, double>> axis_profile(double u, const SignVector& signs, double t0,
                                                    double t1, int samples) {
    std::vector<std::pair<double, double>> out;
    if (samples < 1) return out;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? t0 : t0 + (t1 - t0) * i / (samples - 1);
        double g = 0.0;
        for (size_t j = 0; j < signs.size(); ++j)
            g += signs[j] * std::sin((u + double(j + 1)) * t);
        out.emplace_back(t, g);
    }
    return out;
}

} // namespace latcount
