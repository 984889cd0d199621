#include "latcount/oracle.hpp"
#include "latcount/errors.hpp"

#include <cmath>
#include <random>
#include <string>

#ifdef LATCOUNT_HAVE_OPENMP
#include <omp.h>
#endif

namespace latcount {

namespace {

bool satisfies(const CnfFormula& f, std::uint32_t mask) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (const Literal& lit : clause) {
            bool v = (mask >> (lit.variable - 1)) & 1u;
            if (v != lit.negated) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Rational constant_from_count(std::int64_t k, int occurrences) {
    // (2k - 2^n) / 2^n over the relaxed variable count n
    Rational two_n = 1;
    for (int i = 0; i < occurrences; ++i) two_n *= 2;
    Rational c(2 * k);
    c -= two_n;
    c /= two_n;
    return c;
}

// The algebraic constant term pairs with the count over occurring variables;
// declared-but-unused variables only double the enumeration count.
int count_free_variables(const CnfFormula& f) {
    std::vector<char> seen(static_cast<size_t>(f.num_variables) + 1, 0);
    int occurring = 0;
    for (const auto& clause : f.clauses)
        for (const Literal& lit : clause)
            if (!seen[lit.variable]) {
                seen[lit.variable] = 1;
                ++occurring;
            }
    return f.num_variables - occurring;
}

void check_size(const CnfFormula& f) {
    if (f.num_variables > 25)
        throw TooLarge("enumeration over " + std::to_string(f.num_variables) +
                       " variables exceeds the 25-variable guard");
}

} // namespace

OracleResult count_by_enumeration_serial(const CnfFormula& f) {
    check_size(f);
    const std::uint64_t total = 1ull << f.num_variables;
    std::int64_t k = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (satisfies(f, static_cast<std::uint32_t>(mask))) ++k;
    OracleResult r;
    r.count = k;
    r.total_assignments = static_cast<std::int64_t>(total);
    r.constant_term = constant_from_count(k >> count_free_variables(f), f.num_occurrences());
    return r;
}

OracleResult count_by_enumeration(const CnfFormula& f) {
    check_size(f);
    const std::int64_t total = 1ll << f.num_variables;
    std::int64_t k = 0;
#ifdef LATCOUNT_HAVE_OPENMP
#pragma omp parallel for reduction(+ : k) schedule(static)
#endif
    for (std::int64_t mask = 0; mask < total; ++mask)
        if (satisfies(f, static_cast<std::uint32_t>(mask))) ++k;
    OracleResult r;
    r.count = k;
    r.total_assignments = total;
    r.constant_term = constant_from_count(k >> count_free_variables(f), f.num_occurrences());
    return r;
}

SparsePolynomial expand(const AlgebraicFormula& af) {
    if (af.num_variables > 16)
        throw TooLarge("expansion over " + std::to_string(af.num_variables) +
                       " variables exceeds the 16-variable guard");
    const int n = af.num_variables;
    SparsePolynomial prod = SparsePolynomial::constant(n, Rational(1));
    for (const auto& c : af.clause_factors) {
        // (x-1)(y-1)(z-1) + 8  or  -(x-1)(y-1) + 4
        SparsePolynomial fac = SparsePolynomial::constant(n, Rational(c.width == 3 ? 8 : 4));
        SparsePolynomial cross = SparsePolynomial::constant(n, Rational(c.width == 3 ? 1 : -1));
        for (int t = 0; t < c.width; ++t) {
            SparsePolynomial lin = SparsePolynomial::monomial(n, c.variables[t], 1, Rational(1));
            lin += SparsePolynomial::constant(n, Rational(-1));
            cross = cross * lin;
        }
        fac += cross;
        prod = prod * fac;
    }
    for (const auto& g : af.ior_factors) {
        const int power = g.inverse ? -1 : 1;
        SparsePolynomial plus = SparsePolynomial::constant(n, Rational(1));
        SparsePolynomial minus = SparsePolynomial::constant(n, Rational(1));
        for (int i = 0; i < g.size(); ++i) {
            SparsePolynomial lp = SparsePolynomial::monomial(n, g.variables[i], power,
                                                             Rational(g.signs[i]));
            lp += SparsePolynomial::constant(n, Rational(1));
            plus = plus * lp;
            SparsePolynomial lm = SparsePolynomial::monomial(n, g.variables[i], power,
                                                             Rational(-g.signs[i]));
            lm += SparsePolynomial::constant(n, Rational(1));
            minus = minus * lm;
        }
        plus += minus;
        prod = prod * plus;
    }
    Rational scale(1);
    for (int i = 0; i < af.prefactor_exponent; ++i) scale /= 2;
    prod *= scale;
    prod += SparsePolynomial::constant(n, Rational(-1));
    return prod;
}

SparsePolynomial idempotent_reduce(const SparsePolynomial& p) {
    SparsePolynomial out(p.num_variables());
    ExponentVec reduced(p.num_variables());
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                throw NegativeExponent("idempotent reduction is defined for plain polynomials; "
                                       "found exponent " +
                                       std::to_string(int(e[i])) + " on x" + std::to_string(i + 1));
            reduced[i] = static_cast<std::int8_t>(e[i] % 2);
        }
        out.add_term(reduced, c);
    }
    return out;
}

Rational constant_of_inverse_expansion(const SparsePolynomial& p) {
    return p.constant_term();
}

double interpolation_identity_check(const SparsePolynomial& p, int samples, double tolerance) {
    if (!p.is_multilinear())
        throw NotMultilinear("interpolation identity requires a multilinear polynomial");
    const int n = p.num_variables();
    if (n > 12)
        throw TooLarge("interpolation check over " + std::to_string(n) +
                       " variables exceeds the 12-variable guard");
    const std::size_t corners = std::size_t(1) << n;
    // corner values, exact
    std::vector<Rational> corner_vals(corners);
    std::vector<Rational> point(n);
    Rational corner_sum(0);
    for (std::size_t mask = 0; mask < corners; ++mask) {
        for (int j = 0; j < n; ++j) point[j] = ((mask >> j) & 1u) ? 1 : -1;
        corner_vals[mask] = p.evaluate(std::span<const Rational>(point));
        corner_sum += corner_vals[mask];
    }
    // exact corner-mean identity: p(0,...,0) equals the average of corner values
    Rational mean = corner_sum;
    for (int j = 0; j < n; ++j) mean /= 2;
    if (mean != p.constant_term())
        throw Error("corner mean does not equal the constant term");
    // sampled identity at random interior points
    std::mt19937 rng(0x1a77c0d5u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> pd(n);
    std::vector<double> cv(corners);
    for (std::size_t mask = 0; mask < corners; ++mask) cv[mask] = corner_vals[mask].get_d();
    const double scale = std::ldexp(1.0, -n);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        for (int j = 0; j < n; ++j) pd[j] = unit(rng);
        double lhs = p.evaluate(std::span<const double>(pd));
        double rhs = 0.0;
        for (std::size_t mask = 0; mask < corners; ++mask) {
            double w = cv[mask];
            for (int j = 0; j < n; ++j)
                w *= 1.0 + (((mask >> j) & 1u) ? pd[j] : -pd[j]);
            rhs += w;
        }
        rhs *= scale;
        double dev = std::abs(lhs - rhs);
        if (dev > worst) worst = dev;
        if (dev > tolerance)
            throw Error("interpolation identity deviation " + std::to_string(dev) +
                        " exceeds tolerance");
    }
    return worst;
}

} // namespace latcount
