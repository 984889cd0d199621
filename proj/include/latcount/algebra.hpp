#ifndef LATCOUNT_ALGEBRA_HPP
#define LATCOUNT_ALGEBRA_HPP

#include "latcount/relaxation.hpp"

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace latcount {

// Integer-form clause factor: width 3 encodes (A v B v C) as
// (x-1)(y-1)(z-1) + 8, width 2 encodes (A v B) as -(x-1)(y-1) + 4.
// The 2^-k scaling that turns these into the {-1,+1}-valued clause encodings
// is folded into the formula-wide prefactor.
struct ClauseFactor {
    std::array<int, 3> variables{0, 0, 0}; // width entries used, 1-based
    int width = 0;
};

// Identical-occurrence factor: prod(sign_i * x_i + 1) + prod(-sign_i * x_i + 1).
// With `inverse` set, every x_i is replaced by 1/x_i.
struct IorFactor {
    std::vector<int> variables;
    std::vector<int> signs;
    bool inverse = false;

    int size() const { return static_cast<int>(variables.size()); }
};

// Product-form encoding of a relaxed formula over the {-1,+1} value algebra:
//   value = 2^-prefactor_exponent * prod(clause factors) * prod(IOR factors) - 1
// with prefactor_exponent = 2*width*M - 1.
struct AlgebraicFormula {
    int num_variables = 0;
    int clause_width = 0;
    int prefactor_exponent = 0;
    std::vector<ClauseFactor> clause_factors;
    std::vector<IorFactor> ior_factors;

    bool inverse_relaxed() const {
        for (const auto& g : ior_factors)
            if (!g.inverse) return false;
        return !ior_factors.empty();
    }
};

// Encode a relaxed formula as the product form above.
AlgebraicFormula encode(const RelaxedFormula& rf);

// Inverse-element relaxation: substitute x -> 1/x inside every IOR factor
// (the clause factors are untouched). Throws AlreadyRelaxed when any IOR
// factor is already inverse.
AlgebraicFormula apply_inverse_relaxation(const AlgebraicFormula& af);

// Evaluate at a complex point (1-based variable i reads point[i-1]).
// Throws DimensionMismatch if point.size() != num_variables.
std::complex<double> evaluate(const AlgebraicFormula& af,
                              std::span<const std::complex<double>> point);

// Compiled flat layout of an AlgebraicFormula for tight evaluation loops.
// Variables are 0-based here.
struct CompiledFormula {
    int num_variables = 0;
    double prefactor = 1.0;
    std::vector<std::array<int, 3>> clause3; // width-3 clause variable triples
    std::vector<std::array<int, 2>> clause2; // width-2 clause variable pairs
    struct Group {
        std::vector<int> variables;
        std::vector<double> signs; // +1.0 / -1.0
        bool inverse = false;
    };
    std::vector<Group> groups;
};

CompiledFormula compile(const AlgebraicFormula& af);

// Evaluate a compiled formula given each variable's point value.
std::complex<double> evaluate(const CompiledFormula& cf,
                              std::span<const std::complex<double>> point);

// Spot-checks of the scalar encodings over the {-1,+1} algebra: conjunction
// 1/2(f+1)(g+1)-1, disjunction -1/2(f-1)(g-1)+1, negation -f, plus the clause
// and IOR factor identities on exhaustive small inputs.
struct AxiomReport {
    int checks_run = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

AxiomReport boolean_axiom_suite();

} // namespace latcount

#endif
