#include "latcount/counter.hpp"
#include "latcount/errors.hpp"
#include "latcount/relaxation.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#ifdef LATCOUNT_HAVE_OPENMP
#include <omp.h>
#endif

namespace latcount {

std::complex<double> roots_of_unity_sum_check(std::int64_t t, std::int64_t l) {
    if (l < 1) throw Error("modulus must be >= 1");
    std::complex<double> s(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(l);
    for (std::int64_t m = 1; m <= l; ++m)
        s += std::polar(1.0, step * static_cast<double>(t) * static_cast<double>(m));
    return s;
}

namespace {

// complex Kahan accumulator (compensated separately per component)
struct Kahan {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;

    void add(std::complex<double> x) {
        double y = x.real() - cre;
        double t = re + y;
        cre = (t - re) - y;
        re = t;
        y = x.imag() - cim;
        t = im + y;
        cim = (t - im) - y;
        im = t;
    }

    std::complex<double> value() const { return {re, im}; }
};

// evaluate the compiled product form with variable j at roots[phases[j]]
std::complex<double> eval_at_phases(const CompiledFormula& cf,
                                    const std::vector<std::complex<double>>& roots,
                                    const int* phases, int l) {
    using cd = std::complex<double>;
    cd prod(cf.prefactor, 0.0);
    for (const auto& c : cf.clause3) {
        cd t = (roots[phases[c[0]]] - 1.0) * (roots[phases[c[1]]] - 1.0) *
                   (roots[phases[c[2]]] - 1.0) +
               8.0;
        prod *= t;
    }
    for (const auto& c : cf.clause2) {
        cd t = -(roots[phases[c[0]]] - 1.0) * (roots[phases[c[1]]] - 1.0) + 4.0;
        prod *= t;
    }
    for (const auto& g : cf.groups) {
        cd plus(1.0, 0.0), minus(1.0, 0.0);
        for (size_t i = 0; i < g.variables.size(); ++i) {
            // on the unit circle 1/omega^p = omega^(l-p)
            int ph = phases[g.variables[i]];
            cd x = g.inverse ? roots[ph == 0 ? 0 : l - ph] : roots[ph];
            plus *= g.signs[i] * x + 1.0;
            minus *= -g.signs[i] * x + 1.0;
        }
        prod *= plus + minus;
    }
    return prod - 1.0;
}

struct SliceWorker {
    const CompiledFormula* cf = nullptr;
    const IntMatrix* z = nullptr;
    std::vector<std::int64_t> zmod; // z mod l, nonnegative, row-major
    std::vector<std::complex<double>> roots;
    int n = 0, d = 0, l = 0;

    void prepare(const CompiledFormula& formula, const IntMatrix& zi, std::int64_t modulus) {
        cf = &formula;
        z = &zi;
        n = zi.n;
        d = zi.d;
        l = static_cast<int>(modulus);
        zmod.resize(zi.v.size());
        for (size_t i = 0; i < zi.v.size(); ++i) zmod[i] = ((zi.v[i] % l) + l) % l;
        roots.resize(l);
        const double step = 2.0 * std::numbers::pi / l;
        for (int r = 0; r < l; ++r) roots[r] = std::polar(1.0, step * r);
    }

    std::int64_t zm(int row, int ax) const { return zmod[static_cast<size_t>(row) * d + ax]; }

    // sum over {1..l}^(d-1) inner axes with the outer axis fixed at m0
    std::complex<double> run(int m0) const {
        std::vector<std::vector<int>> buf(d, std::vector<int>(n));
        int* base = buf[0].data();
        for (int j = 0; j < n; ++j)
            base[j] = static_cast<int>((zm(j, 0) * m0) % l);
        Kahan acc;
        axis_loop(1, base, buf, acc);
        return acc.value();
    }

  private:
    void axis_loop(int ax, const int* in, std::vector<std::vector<int>>& buf, Kahan& acc) const {
        if (ax == d) {
            acc.add(eval_at_phases(*cf, roots, in, l));
            return;
        }
        int* cur = buf[ax].data();
        for (int j = 0; j < n; ++j) {
            int v = in[j] + static_cast<int>(zm(j, ax));
            cur[j] = v >= l ? v - l : v;
        }
        for (int m = 1;; ++m) {
            axis_loop(ax + 1, cur, buf, acc);
            if (m == l) break;
            for (int j = 0; j < n; ++j) {
                int v = cur[j] + static_cast<int>(zm(j, ax));
                cur[j] = v >= l ? v - l : v;
            }
        }
    }
};

std::int64_t checked_points(std::int64_t l, int d) {
    long double p = 1.0L;
    for (int i = 0; i < d; ++i) p *= static_cast<long double>(l);
    if (p > 4.0e18L) return -1; // would overflow the loop counter anyway
    std::int64_t r = 1;
    for (int i = 0; i < d; ++i) r *= l;
    return r;
}

CountResult finish_count(std::complex<double> raw, std::int64_t points, std::int64_t l, int d,
                         int n_relaxed, const LatticeOptions& opts) {
    CountResult r;
    r.raw_sum = raw;
    r.lattice_points = points;
    r.modulus = l;
    r.axes = d;
    r.tolerance = opts.tolerance;
    const double scale = 1.0 / static_cast<double>(points);
    r.constant_term = raw.real() * scale;
    r.imaginary_residual = std::abs(raw.imag()) * scale;
    if (r.imaginary_residual > opts.tolerance)
        throw ResidualTooLarge("imaginary residual " + std::to_string(r.imaginary_residual) +
                               " exceeds tolerance");
    if (r.constant_term < -1.0 - opts.tolerance || r.constant_term > 1.0 + opts.tolerance)
        throw ResidualTooLarge("constant term " + std::to_string(r.constant_term) +
                               " outside [-1, 1]");
    const double half_states = std::ldexp(1.0, n_relaxed - 1); // 2^(n-1)
    r.count = std::llround((r.constant_term + 1.0) * half_states);
    r.lattice_distance =
        std::abs(r.constant_term - (static_cast<double>(r.count) / half_states - 1.0));
    if (r.lattice_distance > opts.tolerance)
        throw ResidualTooLarge("constant term is " + std::to_string(r.lattice_distance) +
                               " away from the nearest count lattice point");
    if (r.count < 0 || (opts.max_count >= 0 && r.count > opts.max_count))
        throw ResidualTooLarge("count " + std::to_string(r.count) + " outside [0, 2^N]");
    r.satisfiable = r.count >= 1;
    return r;
}

} // namespace

CountResult lattice_count(const AlgebraicFormula& af, const FrequencyAssignment& fa,
                          const LatticeOptions& opts) {
    if (!af.inverse_relaxed())
        throw Error("lattice_count requires the inverse-relaxed product form");
    if (fa.integer.n != af.num_variables)
        throw DimensionMismatch("integer table rows do not match formula variables");
    if (fa.modulus < 2) throw Error("modulus must be >= 2");
    const std::int64_t points = checked_points(fa.modulus, fa.integer.d);
    if (points < 0 || (points > opts.budget_points && !opts.force))
        throw BudgetExceeded("lattice of " +
                             (points < 0 ? std::string("> 4e18") : std::to_string(points)) +
                             " points exceeds the budget of " +
                             std::to_string(opts.budget_points));
    if (fa.modulus > (std::int64_t(1) << 22))
        throw BudgetExceeded("modulus " + std::to_string(fa.modulus) +
                             " exceeds the phase-table guard");
    SliceWorker worker;
    const CompiledFormula cf = compile(af);
    worker.prepare(cf, fa.integer, fa.modulus);
    const int l = static_cast<int>(fa.modulus);
    std::vector<std::complex<double>> partials(l);
#ifdef LATCOUNT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (int m0 = 1; m0 <= l; ++m0) partials[m0 - 1] = worker.run(m0);
    Kahan total;
    for (const auto& part : partials) total.add(part);
    return finish_count(total.value(), points, fa.modulus, fa.integer.d, af.num_variables, opts);
}

std::complex<double> lattice_sum_reference(const AlgebraicFormula& af,
                                           const FrequencyAssignment& fa) {
    const int l = static_cast<int>(fa.modulus);
    const int d = fa.integer.d;
    const int n = af.num_variables;
    std::vector<int> m(d, 1);
    std::vector<std::complex<double>> point(n);
    std::complex<double> sum(0.0, 0.0);
    const double tau = 2.0 * std::numbers::pi;
    for (;;) {
        for (int j = 0; j < n; ++j) {
            std::int64_t p = 0;
            for (int ax = 0; ax < d; ++ax) p += fa.integer.at(j, ax) * m[ax];
            point[j] = std::polar(1.0, tau * static_cast<double>(p) / l);
        }
        sum += evaluate(af, point);
        int ax = d - 1;
        while (ax >= 0 && m[ax] == l) {
            m[ax] = 1;
            --ax;
        }
        if (ax < 0) break;
        ++m[ax];
    }
    return sum;
}

FrequencyScheme resolve_scheme(int n, const CountOptions& opts) {
    FrequencyScheme base = make_preset(opts.preset, n);
    int axes = opts.axes.value_or(base.axes);
    double u = opts.u.value_or(base.u);
    FrequencyScheme s = make_scheme(axes, u); // recomputed v, h defaults
    if (opts.p) s.p = *opts.p;
    if (opts.v) s.v = *opts.v;
    if (opts.h) s.h = *opts.h;
    return s;
}

CountOutcome count(const CnfFormula& f, const CountOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CountOutcome out;
    out.diag.num_original_variables = f.num_variables;
    out.diag.num_clauses = f.num_clauses();
    out.diag.clause_width = f.width();
    std::set<int> occurring;
    for (const auto& cl : f.clauses)
        for (const auto& lit : cl) occurring.insert(lit.variable);
    out.diag.num_occurring_variables = static_cast<int>(occurring.size());
    const int free_vars = f.num_variables - out.diag.num_occurring_variables;

    if (f.clauses.empty()) {
        // no constraints: every assignment satisfies
        out.result.constant_term = 1.0;
        out.result.count = 1;
        out.result.satisfiable = true;
        out.result.tolerance = opts.tolerance;
        out.model_count = std::int64_t(1) << f.num_variables;
        out.diag.wall_ms = 0.0;
        return out;
    }

    RelaxedFormula rf = relax(f);
    out.diag.num_relaxed_variables = rf.num_new_variables;
    AlgebraicFormula af = apply_inverse_relaxation(encode(rf));

    const int n = rf.num_new_variables;
    out.diag.scheme = resolve_scheme(n, opts);
    FreqMatrix freqs = build_frequencies(n, out.diag.scheme);

    ScanOptions scan_opts;
    scan_opts.limit = opts.scan_limit;
    scan_opts.parallel = opts.parallel;
    ScanResult scan = min_max_frequency(freqs, scan_opts);
    out.diag.min_max = scan.min_max;
    out.diag.max_max = scan.max_max;
    out.diag.argmin = scan.argmin;

    FrequencyAssignment fa;
    fa.real = freqs;
    switch (opts.multiplier_mode) {
        case MultiplierMode::Auto:
            fa.multiplier = choose_multiplier(freqs, scan.min_max, scan_opts);
            break;
        case MultiplierMode::Minimal:
            fa.multiplier = minimal_safe_multiplier(freqs, 1000000, scan_opts);
            break;
        case MultiplierMode::Explicit:
            if (opts.multiplier < 1) throw Error("explicit multiplier must be >= 1");
            fa.multiplier = opts.multiplier;
            break;
    }
    fa.integer = integerize(freqs, fa.multiplier);
    fa.modulus = opts.modulus.value_or(choose_modulus(fa.integer));
    if (fa.modulus < 2) throw Error("modulus must be >= 2");
    // the safety check is aliasing-aware: sums may never vanish mod l on all axes
    check_integerization(fa.integer, fa.modulus, scan_opts);
    IntScanResult zscan = scan_integer_signs(fa.integer, 0, scan_opts);
    out.diag.integer_min_max = zscan.min_max;
    out.diag.multiplier = fa.multiplier;
    out.diag.integer_freqs = fa.integer;

    LatticeOptions lopts;
    lopts.tolerance = opts.tolerance;
    lopts.budget_points = opts.budget_points;
    lopts.force = opts.force;
    lopts.parallel = opts.parallel;
    lopts.max_count =
        f.num_variables <= 62 ? (std::int64_t(1) << out.diag.num_occurring_variables) : -1;
    out.result = lattice_count(af, fa, lopts);
    out.model_count = free_vars >= 60 ? -1 : (out.result.count << free_vars);

    const auto t1 = std::chrono::steady_clock::now();
    out.diag.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

} // namespace latcount
