#include "latcount/algebra.hpp"
#include "latcount/errors.hpp"

#include <cmath>
#include <string>

namespace latcount {

AlgebraicFormula encode(const RelaxedFormula& rf) {
    AlgebraicFormula af;
    af.num_variables = rf.num_new_variables;
    af.clause_width = rf.clause_width;
    af.prefactor_exponent = 2 * rf.clause_width * rf.num_clauses() - 1;
    for (const auto& cl : rf.clauses)
        af.clause_factors.push_back(ClauseFactor{cl, rf.clause_width});
    for (const auto& g : rf.groups) {
        IorFactor fac;
        for (const auto& occ : g.occurrences) {
            fac.variables.push_back(occ.variable);
            fac.signs.push_back(occ.sign);
        }
        af.ior_factors.push_back(std::move(fac));
    }
    return af;
}

AlgebraicFormula apply_inverse_relaxation(const AlgebraicFormula& af) {
    AlgebraicFormula out = af;
    for (auto& g : out.ior_factors) {
        if (g.inverse)
            throw AlreadyRelaxed("IOR factor already holds inverse elements");
        g.inverse = true;
    }
    return out;
}

CompiledFormula compile(const AlgebraicFormula& af) {
    CompiledFormula cf;
    cf.num_variables = af.num_variables;
    cf.prefactor = std::ldexp(1.0, -af.prefactor_exponent);
    for (const auto& c : af.clause_factors) {
        if (c.width == 3)
            cf.clause3.push_back({c.variables[0] - 1, c.variables[1] - 1, c.variables[2] - 1});
        else
            cf.clause2.push_back({c.variables[0] - 1, c.variables[1] - 1});
    }
    for (const auto& g : af.ior_factors) {
        CompiledFormula::Group cg;
        cg.inverse = g.inverse;
        for (int v : g.variables) cg.variables.push_back(v - 1);
        for (int s : g.signs) cg.signs.push_back(static_cast<double>(s));
        cf.groups.push_back(std::move(cg));
    }
    return cf;
}

std::complex<double> evaluate(const CompiledFormula& cf,
                              std::span<const std::complex<double>> point) {
    using cd = std::complex<double>;
    cd prod(cf.prefactor, 0.0);
    for (const auto& c : cf.clause3) {
        cd t = (point[c[0]] - 1.0) * (point[c[1]] - 1.0) * (point[c[2]] - 1.0) + 8.0;
        prod *= t;
    }
    for (const auto& c : cf.clause2) {
        cd t = -(point[c[0]] - 1.0) * (point[c[1]] - 1.0) + 4.0;
        prod *= t;
    }
    for (const auto& g : cf.groups) {
        cd plus(1.0, 0.0), minus(1.0, 0.0);
        for (size_t i = 0; i < g.variables.size(); ++i) {
            cd x = point[g.variables[i]];
            if (g.inverse) x = 1.0 / x;
            plus *= g.signs[i] * x + 1.0;
            minus *= -g.signs[i] * x + 1.0;
        }
        prod *= plus + minus;
    }
    return prod - 1.0;
}

std::complex<double> evaluate(const AlgebraicFormula& af,
                              std::span<const std::complex<double>> point) {
    if (static_cast<int>(point.size()) != af.num_variables)
        throw DimensionMismatch("point has " + std::to_string(point.size()) +
                                " coordinates, formula has " +
                                std::to_string(af.num_variables) + " variables");
    return evaluate(compile(af), point);
}

namespace {

double conj2(double f, double g) { return 0.5 * (f + 1.0) * (g + 1.0) - 1.0; }
double disj2(double f, double g) { return -0.5 * (f - 1.0) * (g - 1.0) + 1.0; }
double neg1(double f) { return -f; }

void check(AxiomReport& rep, bool ok, const std::string& what) {
    ++rep.checks_run;
    if (!ok) rep.failures.push_back(what);
}

} // namespace

AxiomReport boolean_axiom_suite() {
    AxiomReport rep;
    const double vals[2] = {1.0, -1.0};
    auto b = [](double v) { return v > 0.0; };
    for (double f : vals) {
        check(rep, neg1(f) == (b(f) ? -1.0 : 1.0), "negation mismatch");
        for (double g : vals) {
            check(rep, conj2(f, g) == ((b(f) && b(g)) ? 1.0 : -1.0), "conjunction mismatch");
            check(rep, disj2(f, g) == ((b(f) || b(g)) ? 1.0 : -1.0), "disjunction mismatch");
            // de Morgan over the encodings
            check(rep, neg1(conj2(f, g)) == disj2(neg1(f), neg1(g)), "de Morgan mismatch");
        }
    }
    // width-2 and width-3 integer clause factors against literal disjunction:
    // the factor is the scaled (encoding + 1), so it is 2^k on satisfied rows
    // and 0 exactly on the all-false row
    for (double x : vals)
        for (double y : vals) {
            double fac2 = -(x - 1.0) * (y - 1.0) + 4.0;
            check(rep, fac2 == ((b(x) || b(y)) ? 4.0 : 0.0), "width-2 clause factor mismatch");
            for (double z : vals) {
                double fac3 = (x - 1.0) * (y - 1.0) * (z - 1.0) + 8.0;
                check(rep, fac3 == ((b(x) || b(y) || b(z)) ? 8.0 : 0.0),
                      "width-3 clause factor mismatch");
            }
        }
    // IOR factor on two occurrences with all sign patterns: nonzero iff
    // sign-adjusted values agree, value 4 when they do
    for (double s1 : vals)
        for (double s2 : vals)
            for (double x1 : vals)
                for (double x2 : vals) {
                    double plus = (s1 * x1 + 1.0) * (s2 * x2 + 1.0);
                    double minus = (-s1 * x1 + 1.0) * (-s2 * x2 + 1.0);
                    bool agree = s1 * x1 == s2 * x2;
                    check(rep, plus + minus == (agree ? 4.0 : 0.0), "IOR factor mismatch");
                }
    return rep;
}

} // namespace latcount
