#include "latcount/spectrum.hpp"
#include "latcount/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <doctest.h>
#include <numbers>
#include <random>
#include <vector>

using namespace latcount;

namespace {

// plain odometer reference scan, mirroring the library's exact evaluation
// (fixed row order, same tie-breaking) without Gray-code increments
struct NaiveScan {
    double min_max = std::numeric_limits<double>::infinity();
    double max_max = -std::numeric_limits<double>::infinity();
    SignVector argmin;
};

double naive_max_abs(const FreqMatrix& f, const SignVector& e) {
    double mx = 0.0;
    for (int ax = 0; ax < f.d; ++ax) {
        double s = 0.0;
        for (int j = 0; j < f.n; ++j)
            if (e[j] != 0) s += e[j] > 0 ? f.at(j, ax) : -f.at(j, ax);
        mx = std::max(mx, std::abs(s));
    }
    return mx;
}

NaiveScan naive_scan(const FreqMatrix& f) {
    NaiveScan out;
    SignVector e(f.n, -1);
    for (;;) {
        bool nonzero = false;
        for (int s : e) nonzero |= s != 0;
        if (nonzero) {
            double v = naive_max_abs(f, e);
            SignVector c = e;
            for (int s : c) {
                if (s == 0) continue;
                if (s > 0)
                    for (int& x : c) x = -x;
                break;
            }
            if (v < out.min_max || (v == out.min_max && (out.argmin.empty() || c < out.argmin))) {
                out.min_max = v;
                out.argmin = c;
            }
            out.max_max = std::max(out.max_max, v);
        }
        int j = 0;
        while (j < f.n && e[j] == 1) e[j++] = -1;
        if (j == f.n) break;
        ++e[j];
    }
    return out;
}

// four-axis table for n = 6, u = 36, reference values to three decimals
// (recomputed; the rounded magnitudes also appear in the survey literature)
const double kRef6[6][4] = {
    {-0.644, 0.765, 0.644, -0.765}, {0.296, 0.942, -0.527, -0.826},
    {0.964, 0.184, -0.971, 0.319},  {0.745, -0.756, -0.076, 0.999},
    {-0.159, -0.946, 0.924, 0.221}, {-0.917, -0.198, 0.651, -0.879},
};
const std::int64_t kRefZ6[6][4] = {
    {-13, 16, 13, -16}, {6, 19, -11, -17}, {20, 4, -20, 7},
    {15, -16, -2, 20},  {-4, -19, 19, 5},  {-19, -4, 14, -18},
};

} // namespace

TEST_CASE("scheme construction fills the documented defaults") {
    FrequencyScheme s = make_scheme(4, 36.0);
    CHECK(s.axes == 4);
    CHECK(s.u == 36.0);
    CHECK(s.p == 1.0);
    CHECK(s.v == doctest::Approx(3.0 * std::numbers::pi / 37.0).epsilon(1e-15));
    CHECK(s.h == doctest::Approx(std::numbers::pi / 74.0).epsilon(1e-15));

    CHECK(scheme_exp1(6).u == 36.0);
    CHECK(scheme_exp2(5).u == 125.0);
    CHECK(scheme_two_axis(4).axes == 2);
    CHECK(scheme_one_axis(3).axes == 1);
    CHECK(make_preset(SchemePreset::Exp2, 4).u == 64.0);

    CHECK_THROWS_AS(make_scheme(3, 4.0), Error);
    CHECK_THROWS_AS(make_scheme(1, 0.5), Error);
}

TEST_CASE("frequency table matches the n=6 four-axis reference cells") {
    FreqMatrix f = build_frequencies(6, scheme_exp1(6));
    REQUIRE(f.n == 6);
    REQUIRE(f.d == 4);
    // axis 0 is sin((u+j)p): plain sines of 37..42
    for (int j = 0; j < 6; ++j)
        CHECK(f.at(j, 0) == doctest::Approx(std::sin(37.0 + j)).epsilon(1e-15));
    for (int j = 0; j < 6; ++j)
        for (int ax = 0; ax < 4; ++ax)
            CHECK(std::abs(f.at(j, ax) - kRef6[j][ax]) <= 5.1e-4);
}

TEST_CASE("one-axis scan for the smallest table") {
    FreqMatrix f = build_frequencies(2, scheme_one_axis(2));
    REQUIRE(f.d == 1);
    CHECK(f.at(0, 0) == doctest::Approx(std::sin(5.0)).epsilon(1e-15));
    CHECK(f.at(1, 0) == doctest::Approx(std::sin(6.0)).epsilon(1e-15));
    ScanResult r = min_max_frequency(f);
    CHECK(r.min_max == doctest::Approx(0.279415).epsilon(1e-5));
    CHECK(r.max_max == doctest::Approx(std::abs(std::sin(5.0) + std::sin(6.0))).epsilon(1e-12));
    CHECK(r.argmin == SignVector{0, -1});
}

TEST_CASE("scan reproduces the surveyed minima to three significant figures") {
    struct Row {
        SchemePreset preset;
        int n;
        double expect;
    };
    const Row rows[] = {
        {SchemePreset::OneAxis, 3, 7.45e-3}, {SchemePreset::OneAxis, 4, 1.21e-2},
        {SchemePreset::TwoAxis, 2, 0.716},   {SchemePreset::TwoAxis, 6, 0.0111},
        {SchemePreset::Exp2, 5, 0.0581},     {SchemePreset::Exp1, 5, 0.465},
    };
    for (const Row& row : rows) {
        FreqMatrix f = build_frequencies(row.n, make_preset(row.preset, row.n));
        ScanResult r = min_max_frequency(f);
        CHECK(r.min_max == doctest::Approx(row.expect).epsilon(5e-3));
        CHECK(r.max_max <= double(row.n) + 1e-12);
    }
}

TEST_CASE("four-axis scan at n=6 pins the documented minimum") {
    FreqMatrix f = build_frequencies(6, scheme_exp1(6));
    ScanResult r = min_max_frequency(f);
    CHECK(r.min_max == doctest::Approx(0.278255251636).epsilon(1e-9));
    CHECK(r.argmin == SignVector{-1, 1, -1, -1, 1, -1});
    CHECK(r.max_max <= 6.0);
    CHECK(choose_multiplier(f, r.min_max) == 26);
}

TEST_CASE("scan agrees with a plain odometer reference") {
    for (int n : {2, 3, 5}) {
        FreqMatrix f = build_frequencies(n, scheme_exp1(n));
        ScanResult r = min_max_frequency(f);
        NaiveScan ref = naive_scan(f);
        CHECK(r.min_max == ref.min_max);
        CHECK(r.max_max == ref.max_max);
        CHECK(r.argmin == ref.argmin);
    }
    FreqMatrix g = build_frequencies(4, scheme_one_axis(4));
    ScanResult r = min_max_frequency(g);
    NaiveScan ref = naive_scan(g);
    CHECK(r.min_max == ref.min_max);
    CHECK(r.argmin == ref.argmin);
}

TEST_CASE("parallel and serial scans are bitwise identical") {
    FreqMatrix f = build_frequencies(10, scheme_exp1(10));
    ScanOptions par;
    ScanOptions ser;
    ser.parallel = false;
    ScanResult a = min_max_frequency(f, par);
    ScanResult b = min_max_frequency(f, ser);
    CHECK(a.min_max == b.min_max);
    CHECK(a.max_max == b.max_max);
    CHECK(a.argmin == b.argmin);

    IntMatrix z = integerize(f, 57);
    IntScanResult ia = scan_integer_signs(z, 0, par);
    IntScanResult ib = scan_integer_signs(z, 0, ser);
    CHECK(ia.min_max == ib.min_max);
    CHECK(ia.max_max == ib.max_max);
    CHECK(ia.aliased == ib.aliased);
}

TEST_CASE("scan refuses tables beyond the limit") {
    FreqMatrix f = build_frequencies(17, scheme_exp1(17));
    CHECK_THROWS_AS(min_max_frequency(f), TooLarge);
    ScanOptions tight;
    tight.limit = 4;
    FreqMatrix g = build_frequencies(5, scheme_exp1(5));
    CHECK_THROWS_AS(min_max_frequency(g, tight), TooLarge);
    CHECK_THROWS_AS(scan_integer_signs(integerize(g, 3), 0, tight), TooLarge);
}

TEST_CASE("integerization rounds away from zero and keeps signs") {
    FreqMatrix f = build_frequencies(6, scheme_exp1(6));
    IntMatrix z = integerize(f, 20);
    for (int j = 0; j < 6; ++j)
        for (int ax = 0; ax < 4; ++ax) CHECK(z.at(j, ax) == kRefZ6[j][ax]);

    std::mt19937 rng(31337u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    FreqMatrix r;
    r.n = 8;
    r.d = 4;
    r.v.resize(32);
    for (double& x : r.v) x = dist(rng);
    r.v[5] = 0.0;
    for (std::int64_t m : {1, 7, 20, 1000}) {
        IntMatrix q = integerize(r, m);
        for (size_t i = 0; i < r.v.size(); ++i) {
            double x = r.v[i];
            std::int64_t v = q.v[i];
            if (x == 0.0) {
                CHECK(v == 0);
                continue;
            }
            CHECK((x > 0) == (v > 0));
            CHECK(std::abs(v) >= std::abs(m * x));
            CHECK(std::abs(v) < std::abs(m * x) + 1.0);
        }
    }
    CHECK_THROWS_AS(integerize(r, 0), Error);
}

TEST_CASE("integer scan of the n=6 multiplier-20 table") {
    IntMatrix z = integerize(build_frequencies(6, scheme_exp1(6)), 20);
    IntScanResult r = scan_integer_signs(z);
    CHECK(r.min_max == 5);
    CHECK(r.max_max == 83);
    CHECK_FALSE(r.aliased);
    CHECK(choose_modulus(z) == 85);
    CHECK_FALSE(scan_integer_signs(z, 85).aliased);
    CHECK_NOTHROW(check_integerization(z));
    CHECK_NOTHROW(check_integerization(z, 85));
}

TEST_CASE("aliasing is detected both exactly and modulo l") {
    IntMatrix z;
    z.n = 2;
    z.d = 1;
    z.v = {1, 1};
    CHECK(scan_integer_signs(z, 0).aliased);          // 1 - 1 = 0
    CHECK(scan_integer_signs(z, 2).aliased);          // 1 + 1 = 2 = 0 mod 2
    CHECK_THROWS_AS(check_integerization(z), IntegerizationUnsafe);
    CHECK_THROWS_AS(check_integerization(z, 2), IntegerizationUnsafe);

    IntMatrix w;
    w.n = 2;
    w.d = 1;
    w.v = {1, 3};
    CHECK_FALSE(scan_integer_signs(w, 0).aliased);
    CHECK(scan_integer_signs(w, 4).aliased); // 1 + 3 wraps
    CHECK_FALSE(scan_integer_signs(w, 6).aliased);
}

TEST_CASE("multiplier selection") {
    FreqMatrix zero;
    zero.n = 2;
    zero.d = 1;
    zero.v = {0.0, 0.0};
    CHECK_THROWS_AS(choose_multiplier(zero, 0.0), DegenerateSpectrum);

    // identical rows can never be told apart, so the search must give up
    FreqMatrix twin;
    twin.n = 2;
    twin.d = 1;
    twin.v = {0.5, 0.5};
    CHECK_THROWS_AS(minimal_safe_multiplier(twin, 50), IntegerizationUnsafe);

    struct Row {
        int n;
        std::int64_t multiplier;
        std::int64_t modulus;
    };
    for (const Row& row : {Row{2, 1, 4}, Row{4, 2, 9}, Row{6, 3, 16}}) {
        FreqMatrix f = build_frequencies(row.n, scheme_exp1(row.n));
        std::int64_t m = minimal_safe_multiplier(f);
        CHECK(m == row.multiplier);
        CHECK(choose_modulus(integerize(f, m)) == row.modulus);
    }
}

TEST_CASE("survey table sweeps a range of sizes under one preset") {
    std::vector<SpectrumReport> rows = spectrum_table(SchemePreset::OneAxis, 2, 5);
    REQUIRE(rows.size() == 4);
    for (size_t i = 0; i < rows.size(); ++i) {
        int n = static_cast<int>(i) + 2;
        CHECK(rows[i].n == n);
        CHECK(rows[i].scheme.axes == 1);
        CHECK(rows[i].scheme.u == double(n) * n);
        ScanResult direct = min_max_frequency(build_frequencies(n, rows[i].scheme));
        CHECK(rows[i].min_max == direct.min_max);
        CHECK(rows[i].max_max == direct.max_max);
        CHECK(rows[i].argmin == direct.argmin);
    }
}

TEST_CASE("axis profile hits the documented anchor points") {
    SignVector signs{-1, 1, -1, -1, 1, -1};
    auto prof = axis_profile(36.0, signs, 1.0, 1.04245, 2);
    REQUIRE(prof.size() == 2);
    CHECK(prof[0].first == 1.0);
    CHECK(prof[1].first == doctest::Approx(1.04245).epsilon(1e-15));
    CHECK(prof[0].second == doctest::Approx(-0.0111029555861).epsilon(1e-6));
    CHECK(prof[1].second == doctest::Approx(3.85695494061e-05).epsilon(1e-6));

    auto grid = axis_profile(36.0, signs, 0.0, 1.0, 5);
    REQUIRE(grid.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(grid[i].first == doctest::Approx(0.25 * i).epsilon(1e-15));
    CHECK(grid[0].second == doctest::Approx(0.0).epsilon(1e-15));
    double direct = 0.0;
    for (int j = 0; j < 6; ++j) direct += signs[j] * std::sin((37.0 + j) * 0.5);
    CHECK(grid[2].second == doctest::Approx(direct).epsilon(1e-15));
}
