#ifndef LATCOUNT_ORACLE_HPP
#define LATCOUNT_ORACLE_HPP

#include "latcount/algebra.hpp"
#include "latcount/cnf.hpp"
#include "latcount/polynomial.hpp"

#include <cstdint>

namespace latcount {

// Brute-force ground truth over the original variables.
struct OracleResult {
    std::int64_t count = 0;             // satisfying assignments k
    std::int64_t total_assignments = 0; // 2^N
    Rational constant_term;             // (2k - 2^n) / 2^n with n = total literal occurrences
};

// Enumerate all 2^N assignments (N <= 25, else TooLarge). Parallel when
// OpenMP is available; `count_by_enumeration_serial` is the plain loop kept
// as the reference implementation.
OracleResult count_by_enumeration(const CnfFormula& f);
OracleResult count_by_enumeration_serial(const CnfFormula& f);

// Multiply out the product form into an explicit (Laurent) polynomial with
// exact coefficients. Guarded to num_variables <= 16 (TooLarge).
SparsePolynomial expand(const AlgebraicFormula& af);

// Apply x^2 -> 1 to every term (exponents taken mod 2). Input must have no
// negative exponents (NegativeExponent).
SparsePolynomial idempotent_reduce(const SparsePolynomial& p);

// Coefficient of the all-zero exponent vector. On unit-circle points this is
// what the lattice average converges to for inverse-relaxed expansions.
Rational constant_of_inverse_expansion(const SparsePolynomial& p);

// For a multilinear p, check the interpolation identity
//   p(x) = 2^-n * sum over corners e of p(e) * prod_j (1 + e_j x_j)
// at `samples` pseudo-random points in [-1,1]^n (fixed seed), plus the exact
// corner-mean identity p(0) = 2^-n sum p(e). Throws NotMultilinear; n <= 12
// (TooLarge). Returns the largest absolute deviation seen at sample points.
double interpolation_identity_check(const SparsePolynomial& p, int samples = 100,
                                    double tolerance = 1e-9);

} // namespace latcount

#endif
