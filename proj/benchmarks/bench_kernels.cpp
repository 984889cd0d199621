// Compares the OpenMP kernels against their serial and naive reference
// implementations on fixed workloads and prints one line per run. The
// reference results double as a correctness check: any mismatch aborts.
#include "latcount/algebra.hpp"
#include "latcount/cnf.hpp"
#include "latcount/counter.hpp"
#include "latcount/oracle.hpp"
#include "latcount/relaxation.hpp"
#include "latcount/spectrum.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

using namespace latcount;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void row(const char* kernel, const char* variant, double ms, const std::string& checksum) {
    std::printf("%-22s %-9s %10.2f ms   %s\n", kernel, variant, ms, checksum.c_str());
}

void die(const char* what) {
    std::fprintf(stderr, "benchmark mismatch: %s\n", what);
    std::exit(1);
}

void bench_scan() {
    FreqMatrix f = build_frequencies(13, scheme_exp1(13));
    ScanOptions par;
    ScanOptions ser;
    ser.parallel = false;

    double t0 = now_ms();
    ScanResult a = min_max_frequency(f, par);
    double t1 = now_ms();
    ScanResult b = min_max_frequency(f, ser);
    double t2 = now_ms();

    char buf[64];
    std::snprintf(buf, sizeof buf, "min=%.12g", a.min_max);
    row("sign scan n=13", "parallel", t1 - t0, buf);
    std::snprintf(buf, sizeof buf, "min=%.12g", b.min_max);
    row("sign scan n=13", "serial", t2 - t1, buf);
    if (a.min_max != b.min_max || a.argmin != b.argmin) die("sign scan results differ");
}

void bench_lattice() {
    CnfFormula f = parse_dimacs(std::string("p cnf 3 2\n1 2 3 0\n1 2 -3 0\n"));
    AlgebraicFormula af = apply_inverse_relaxation(encode(relax(f)));

    auto assignment = [&](std::int64_t multiplier) {
        FrequencyAssignment fa;
        fa.real = build_frequencies(af.num_variables, scheme_exp1(af.num_variables));
        fa.multiplier = multiplier;
        fa.integer = integerize(fa.real, multiplier);
        fa.modulus = choose_modulus(fa.integer);
        return fa;
    };

    // small lattice: all three implementations
    FrequencyAssignment small = assignment(3); // modulus 16, 65536 points
    LatticeOptions par;
    LatticeOptions ser;
    ser.parallel = false;

    double t0 = now_ms();
    CountResult a = lattice_count(af, small, par);
    double t1 = now_ms();
    CountResult b = lattice_count(af, small, ser);
    double t2 = now_ms();
    std::complex<double> c = lattice_sum_reference(af, small);
    double t3 = now_ms();

    char buf[64];
    std::snprintf(buf, sizeof buf, "C=%.12g", a.constant_term);
    row("lattice sum l=16", "parallel", t1 - t0, buf);
    std::snprintf(buf, sizeof buf, "C=%.12g", b.constant_term);
    row("lattice sum l=16", "serial", t2 - t1, buf);
    std::snprintf(buf, sizeof buf, "C=%.12g", c.real() / double(small.modulus * small.modulus *
                                                               small.modulus * small.modulus));
    row("lattice sum l=16", "naive", t3 - t2, buf);
    if (a.raw_sum != b.raw_sum) die("lattice serial/parallel sums differ");
    if (std::abs(a.raw_sum - c) > 1e-6 * std::abs(c)) die("lattice naive reference differs");

    // the documented large run: 85^4 = 52200625 points, incremental only
    FrequencyAssignment large = assignment(20);
    double t4 = now_ms();
    CountResult d = lattice_count(af, large, par);
    double t5 = now_ms();
    CountResult e = lattice_count(af, large, ser);
    double t6 = now_ms();
    std::snprintf(buf, sizeof buf, "C=%.12g", d.constant_term);
    row("lattice sum l=85", "parallel", t5 - t4, buf);
    std::snprintf(buf, sizeof buf, "C=%.12g", e.constant_term);
    row("lattice sum l=85", "serial", t6 - t5, buf);
    if (d.raw_sum != e.raw_sum) die("large lattice serial/parallel sums differ");
    double pts_per_s = double(d.lattice_points) / ((t5 - t4) / 1000.0);
    std::printf("%-22s %-9s %10.3g points/s\n", "lattice sum l=85", "rate", pts_per_s);
}

void bench_enumeration() {
    std::mt19937 rng(177013u);
    CnfFormula f;
    f.num_variables = 23;
    std::uniform_int_distribution<int> var(1, f.num_variables);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int j = 0; j < 40; ++j) {
        std::vector<Literal> cl;
        for (int t = 0; t < 3; ++t) cl.push_back({var(rng), coin(rng) == 1});
        f.clauses.push_back(cl);
    }

    double t0 = now_ms();
    OracleResult a = count_by_enumeration(f);
    double t1 = now_ms();
    OracleResult b = count_by_enumeration_serial(f);
    double t2 = now_ms();

    char buf[64];
    std::snprintf(buf, sizeof buf, "k=%lld", static_cast<long long>(a.count));
    row("enumeration N=23", "parallel", t1 - t0, buf);
    std::snprintf(buf, sizeof buf, "k=%lld", static_cast<long long>(b.count));
    row("enumeration N=23", "serial", t2 - t1, buf);
    if (a.count != b.count) die("enumeration counts differ");
}

} // namespace

int main() {
    std::printf("%-22s %-9s %13s   %s\n", "kernel", "variant", "time", "checksum");
    bench_scan();
    bench_lattice();
    bench_enumeration();
    return 0;
}
