#ifndef LATCOUNT_COUNTER_HPP
#define LATCOUNT_COUNTER_HPP

#include "latcount/algebra.hpp"
#include "latcount/cnf.hpp"
#include "latcount/spectrum.hpp"

#include <complex>
#include <cstdint>
#include <optional>

namespace latcount {

// sum_{m=1..l} of omega^(t*m) with omega = exp(2*pi*i/l): l when l divides t,
// else 0 (up to rounding). Direct trigonometric accumulation, used as the
// aliasing sanity oracle.
std::complex<double> roots_of_unity_sum_check(std::int64_t t, std::int64_t l);

// Everything the lattice step needs about the frequencies.
struct FrequencyAssignment {
    FreqMatrix real;
    IntMatrix integer;
    std::int64_t multiplier = 0;
    std::int64_t modulus = 0; // l
};

struct LatticeOptions {
    double tolerance = 1e-6;
    std::int64_t budget_points = 1000000000; // refuse larger lattices unless forced
    bool force = false;
    std::int64_t max_count = -1; // 2^N when known; -1 skips the range check
    bool parallel = true;
};

struct CountResult {
    std::complex<double> raw_sum;      // S_f
    std::int64_t lattice_points = 0;   // l^d
    std::int64_t modulus = 0;          // l
    int axes = 0;                      // d
    double constant_term = 0.0;        // C = Re(S_f) / l^d
    double imaginary_residual = 0.0;   // |Im(S_f)| / l^d
    std::int64_t count = 0;            // k = round((C+1) * 2^(n-1)), n relaxed variables
    double lattice_distance = 0.0;     // |C - (2k - 2^n)/2^n|
    bool satisfiable = false;          // k >= 1
    double tolerance = 0.0;
};

// Average the inverse-relaxed product form over the integerized frequency
// lattice {1..l}^d. Requires af.inverse_relaxed() and an integer table that
// passed check_integerization for this modulus. The residual checks catch
// assignments whose constant lands off the count lattice or outside the
// caller's bounds, but an aliased table can also shift the constant onto a
// different self-consistent count — callers must verify integerization first
// (count() does). Throws BudgetExceeded when l^d exceeds the budget and force
// is off. Kahan-compensated per outer slice, slices merged in fixed order:
// results do not depend on thread count.
CountResult lattice_count(const AlgebraicFormula& af, const FrequencyAssignment& fa,
                          const LatticeOptions& opts = {});

// Naive reference: fresh trigonometry at every lattice point, plain summation,
// no incremental state. Returns the raw sum; small lattices only.
std::complex<double> lattice_sum_reference(const AlgebraicFormula& af,
                                           const FrequencyAssignment& fa);

enum class MultiplierMode { Auto, Minimal, Explicit };

struct CountOptions {
    SchemePreset preset = SchemePreset::Exp1;
    std::optional<int> axes;    // override axis count
    std::optional<double> u;    // override bias (v, h defaults recomputed)
    std::optional<double> p;    // override base point
    std::optional<double> v;    // override pair offset
    std::optional<double> h;    // override quarter offset
    MultiplierMode multiplier_mode = MultiplierMode::Auto;
    std::int64_t multiplier = 0; // used when multiplier_mode == Explicit
    std::optional<std::int64_t> modulus;
    double tolerance = 1e-6;
    std::int64_t budget_points = 1000000000;
    bool force = false;
    bool parallel = true;
    int scan_limit = 16;
};

struct CountDiagnostics {
    int num_original_variables = 0; // N declared
    int num_occurring_variables = 0;
    int num_clauses = 0;
    int clause_width = 0;
    int num_relaxed_variables = 0; // n
    FrequencyScheme scheme;
    double min_max = 0.0;
    double max_max = 0.0;
    SignVector argmin;
    std::int64_t integer_min_max = 0; // scan minimum of the integerized table
    std::int64_t multiplier = 0;
    IntMatrix integer_freqs;
    double wall_ms = 0.0;
};

struct CountOutcome {
    CountResult result;
    // Model count over the declared variables: lattice count times 2 for each
    // declared variable that never occurs in a clause.
    std::int64_t model_count = 0;
    CountDiagnostics diag;
};

// Full pipeline: relax, encode, inverse-relax, build frequencies, scan,
// pick multiplier and modulus, verify integerization, lattice-count.
CountOutcome count(const CnfFormula& f, const CountOptions& opts = {});

// Resolve the scheme the pipeline would use for a formula with n relaxed
// variables under these options (preset plus overrides).
FrequencyScheme resolve_scheme(int n, const CountOptions& opts);

} // namespace latcount

#endif
