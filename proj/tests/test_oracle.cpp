#include "latcount/oracle.hpp"
#include "latcount/errors.hpp"
#include "latcount/relaxation.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace latcount;

namespace {

ExponentVec ev(std::initializer_list<int> exps) {
    ExponentVec e;
    for (int x : exps) e.push_back(static_cast<std::int8_t>(x));
    return e;
}

AlgebraicFormula encoded(const std::string& dimacs, bool inverse) {
    AlgebraicFormula af = encode(relax(parse_dimacs(dimacs)));
    return inverse ? apply_inverse_relaxation(af) : af;
}

} // namespace

TEST_CASE("enumeration handles the fixture instances") {
    OracleResult a = count_by_enumeration(parse_dimacs_file(testutil::data_path("pair2sat.cnf")));
    CHECK(a.count == 2);
    CHECK(a.total_assignments == 4);
    CHECK(a.constant_term == Rational(-3, 4));

    OracleResult b = count_by_enumeration(parse_dimacs_file(testutil::data_path("pair3sat.cnf")));
    CHECK(b.count == 6);
    CHECK(b.constant_term == Rational(-13, 16));

    OracleResult c =
        count_by_enumeration(parse_dimacs_file(testutil::data_path("unsat3sat8.cnf")));
    CHECK(c.count == 0);
    CHECK(c.constant_term == Rational(-1));

    OracleResult d = count_by_enumeration(parse_dimacs_file(testutil::data_path("single3.cnf")));
    CHECK(d.count == 7);
    CHECK(d.constant_term == Rational(3, 4)); // (2*7 - 8) / 8
}

TEST_CASE("parallel and serial enumeration agree") {
    std::mt19937 rng(4480123u);
    for (int it = 0; it < 60; ++it) {
        CnfFormula f = testutil::random_formula(rng, it % 2 ? 2 : 3, 8, 6);
        OracleResult a = count_by_enumeration(f);
        OracleResult b = count_by_enumeration_serial(f);
        CHECK(a.count == b.count);
        CHECK(a.constant_term == b.constant_term);
    }
}

TEST_CASE("enumeration refuses oversized inputs") {
    CnfFormula f;
    f.num_variables = 26;
    f.clauses.push_back({{1, false}, {2, false}, {3, false}});
    CHECK_THROWS_AS(count_by_enumeration(f), TooLarge);
    CHECK_THROWS_AS(count_by_enumeration_serial(f), TooLarge);
}

TEST_CASE("expansion of the two-clause 2-SAT sample matches the recorded stages") {
    AlgebraicFormula af = encoded("p cnf 2 2\n1 2 0\n-1 2 0\n", false);
    SparsePolynomial p = expand(af);
    CHECK(p.num_terms() == 48);
    CHECK(p.constant_term() == Rational(-23, 32));
    CHECK(p.dump() == testutil::read_file(testutil::data_path("idempotent_stages/stage0.txt")));
}

TEST_CASE("idempotent reduction one variable at a time reproduces every stage") {
    // reduce x1, then x2, x3, x4; each stage was recorded from an independent
    // symbolic computation. Reduction of a single variable is expressed by
    // extending the reduced set one variable at a time and re-reducing, so the
    // engine only needs the full map; stages are reproduced by reducing the
    // variables in order on a copy whose other exponents are left intact.
    AlgebraicFormula af = encoded("p cnf 2 2\n1 2 0\n-1 2 0\n", false);
    SparsePolynomial p = expand(af);
    // stagewise reduction: mod out one variable's exponents per pass
    auto reduce_one = [](const SparsePolynomial& q, int var) {
        SparsePolynomial out(q.num_variables());
        for (const auto& [e, c] : q.terms()) {
            ExponentVec r = e;
            REQUIRE(r[var - 1] >= 0);
            r[var - 1] = static_cast<std::int8_t>(r[var - 1] % 2);
            out.add_term(r, c);
        }
        return out;
    };
    SparsePolynomial cur = p;
    for (int var = 1; var <= 4; ++var) {
        cur = reduce_one(cur, var);
        CHECK(cur.dump() == testutil::read_file(testutil::data_path(
                                "idempotent_stages/stage" + std::to_string(var) + ".txt")));
    }
    // the full reduction in one shot gives the final stage directly
    CHECK(idempotent_reduce(p).dump() == cur.dump());
    CHECK(cur.constant_term() == Rational(-3, 4));
    CHECK(cur.num_terms() == 8);
}

TEST_CASE("idempotent reduction squashes squares") {
    SparsePolynomial p(4);
    p.add_term(ev({2, 0, 2, 2}), Rational(3));
    SparsePolynomial r = idempotent_reduce(p);
    CHECK(r.num_terms() == 1);
    CHECK(r.constant_term() == Rational(3));

    SparsePolynomial q(4);
    q.add_term(ev({2, 0, 2, 1}), Rational(3));
    SparsePolynomial s = idempotent_reduce(q);
    CHECK(s.coefficient(ev({0, 0, 0, 1})) == Rational(3));
}

TEST_CASE("idempotent reduction rejects Laurent input") {
    SparsePolynomial p(2);
    p.add_term(ev({-1, 1}), Rational(1));
    CHECK_THROWS_AS(idempotent_reduce(p), NegativeExponent);
}

TEST_CASE("inverse expansion of the two-clause 2-SAT sample") {
    AlgebraicFormula af = encoded("p cnf 2 2\n1 2 0\n-1 2 0\n", true);
    SparsePolynomial h = expand(af);
    CHECK(h.num_terms() == 48);
    CHECK(constant_of_inverse_expansion(h) == Rational(-3, 4));
    // spot-checked coefficient family (exact recomputation)
    CHECK(h.coefficient(ev({-1, 0, 0, 0})) == Rational(-1, 16));
    CHECK(h.coefficient(ev({1, 0, 0, 0})) == Rational(1, 16));
    CHECK(h.coefficient(ev({0, -1, 0, 0})) == Rational(1, 8));
    CHECK(h.coefficient(ev({-1, -1, 0, 0})) == Rational(3, 32));
    CHECK(h.coefficient(ev({1, -1, 0, 0})) == Rational(1, 32));
    CHECK(h.coefficient(ev({0, 1, 0, 0})) == Rational(1, 8));
    CHECK(h.coefficient(ev({-1, 1, 0, 0})) == Rational(-1, 32));
    CHECK(h.coefficient(ev({1, 1, 0, 0})) == Rational(-3, 32));
    CHECK(h.coefficient(ev({0, 0, -1, 0})) == Rational(-1, 16));
    CHECK(h.coefficient(ev({-1, 0, -1, 0})) == Rational(-5, 16));
    CHECK(h.coefficient(ev({1, 1, 1, 1})) == Rational(1, 32));
    CHECK(h.coefficient(ev({-1, 0, 0, 1})) == Rational(3, 32));
    CHECK(h.coefficient(ev({-1, -1, -1, -1})) == Rational(-9, 32));
    // exponents stay within one unit of zero after inverse relaxation of the
    // group part and within two for the clause part
    for (int var = 1; var <= 4; ++var) {
        CHECK(h.min_exponent(var) >= -2);
        CHECK(h.max_exponent(var) <= 2);
    }
}

TEST_CASE("inverse expansion of the two-clause 3-SAT sample") {
    AlgebraicFormula af = encoded("p cnf 3 2\n1 2 3 0\n1 2 -3 0\n", true);
    SparsePolynomial h = expand(af);
    CHECK(constant_of_inverse_expansion(h) == Rational(-13, 16));
}

TEST_CASE("three routes to the constant agree on random instances") {
    std::mt19937 rng(6061981u);
    for (int it = 0; it < 50; ++it) {
        CnfFormula f = testutil::random_formula(rng, it % 2 ? 2 : 3, 4, it % 2 ? 4 : 3);
        Rational by_count = count_by_enumeration(f).constant_term;
        SparsePolynomial plain = expand(encode(relax(f)));
        Rational by_reduction = idempotent_reduce(plain).constant_term();
        SparsePolynomial laurent = expand(apply_inverse_relaxation(encode(relax(f))));
        Rational by_inverse = constant_of_inverse_expansion(laurent);
        CHECK(by_count == by_reduction);
        CHECK(by_count == by_inverse);
    }
}

TEST_CASE("expansion agrees with direct evaluation at +/-1 points") {
    std::mt19937 rng(777001u);
    for (int it = 0; it < 20; ++it) {
        CnfFormula f = testutil::random_formula(rng, it % 2 ? 2 : 3, 4, 2);
        AlgebraicFormula af = encode(relax(f));
        SparsePolynomial p = expand(af);
        const int n = af.num_variables;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Rational> point(n);
            std::vector<std::complex<double>> cpoint(n);
            for (int j = 0; j < n; ++j) {
                point[j] = (mask >> j) & 1u ? 1 : -1;
                cpoint[j] = (mask >> j) & 1u ? 1.0 : -1.0;
            }
            CHECK(p.evaluate(std::span<const Rational>(point)).get_d() ==
                  doctest::Approx(evaluate(af, cpoint).real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("expansion refuses oversized formulas") {
    std::string text = "p cnf 6 6\n";
    for (int i = 0; i < 6; ++i) text += "1 2 3 0\n"; // 18 occurrences
    AlgebraicFormula af = encoded(text, false);
    CHECK_THROWS_AS(expand(af), TooLarge);
}

TEST_CASE("degenerate factor set expands to a bare constant") {
    AlgebraicFormula af;
    af.num_variables = 1;
    af.prefactor_exponent = 0;
    IorFactor g;
    g.variables = {1};
    g.signs = {1};
    g.inverse = true;
    af.ior_factors.push_back(g);
    // (1/x + 1) + (-1/x + 1) = 2, so the whole formula is the constant 1
    SparsePolynomial p = expand(af);
    CHECK(p.num_terms() == 1);
    CHECK(p.constant_term() == Rational(1));
}

TEST_CASE("interpolation identity holds for reduced expansions") {
    AlgebraicFormula af = encoded("p cnf 2 2\n1 2 0\n-1 2 0\n", false);
    SparsePolynomial reduced = idempotent_reduce(expand(af));
    double worst = interpolation_identity_check(reduced);
    CHECK(worst <= 1e-9);

    std::mt19937 rng(98765u);
    for (int it = 0; it < 10; ++it) {
        CnfFormula f = testutil::random_formula(rng, it % 2 ? 2 : 3, 3, it % 2 ? 4 : 3);
        SparsePolynomial r = idempotent_reduce(expand(encode(relax(f))));
        CHECK(interpolation_identity_check(r, 40) <= 1e-9);
    }
}

TEST_CASE("interpolation identity rejects non-multilinear input") {
    SparsePolynomial p(2);
    p.add_term(ev({2, 0}), Rational(1));
    CHECK_THROWS_AS(interpolation_identity_check(p), NotMultilinear);

    SparsePolynomial big = SparsePolynomial::constant(13, Rational(1));
    CHECK_THROWS_AS(interpolation_identity_check(big), TooLarge);
}
