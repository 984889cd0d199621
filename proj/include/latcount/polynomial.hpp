#ifndef LATCOUNT_POLYNOMIAL_HPP
#define LATCOUNT_POLYNOMIAL_HPP

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace latcount {

using Rational = mpq_class;

// Exponent vector of one term; entries may be negative (Laurent terms appear
// after inverse relaxation) but stay within a few units at our degrees.
using ExponentVec = std::vector<std::int8_t>;

// Sparse multivariate polynomial (or Laurent polynomial) with exact rational
// coefficients. Terms are keyed by exponent vector; the map's lexicographic
// key order doubles as the canonical dump order. Zero coefficients are never
// stored.
class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int num_variables) : n_(num_variables) {}

    static SparsePolynomial constant(int num_variables, const Rational& c);
    // coefficient * x_var^power  (var is 1-based)
    static SparsePolynomial monomial(int num_variables, int var, int power, const Rational& coeff);

    int num_variables() const { return n_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentVec& exps, const Rational& coeff);
    const Rational* find(const ExponentVec& exps) const;
    Rational coefficient(const ExponentVec& exps) const;
    Rational constant_term() const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const Rational& c);
    SparsePolynomial operator*(const SparsePolynomial& other) const;

    // min/max exponent of one variable (1-based) across all terms; 0 if absent
    int min_exponent(int var) const;
    int max_exponent(int var) const;
    // true when every exponent is 0 or 1
    bool is_multilinear() const;

    Rational evaluate(std::span<const Rational> point) const; // throws on zero base with negative exponent
    double evaluate(std::span<const double> point) const;

    // Canonical text form: one term per line, "num/den x1^e1 x2^e2 ..." with
    // zero exponents omitted, terms sorted by exponent vector.
    std::string dump() const;

    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

  private:
    int n_ = 0;
    std::map<ExponentVec, Rational> terms_;
};

} // namespace latcount

#endif
