#include "latcount/polynomial.hpp"
#include "latcount/errors.hpp"

#include <cmath>
#include <sstream>

namespace latcount {

SparsePolynomial SparsePolynomial::constant(int num_variables, const Rational& c) {
    SparsePolynomial p(num_variables);
    p.add_term(ExponentVec(num_variables, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(int num_variables, int var, int power,
                                            const Rational& coeff) {
    SparsePolynomial p(num_variables);
    ExponentVec e(num_variables, 0);
    e[var - 1] = static_cast<std::int8_t>(power);
    p.add_term(e, coeff);
    return p;
}

void SparsePolynomial::add_term(const ExponentVec& exps, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

const Rational* SparsePolynomial::find(const ExponentVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? nullptr : &it->second;
}

Rational SparsePolynomial::coefficient(const ExponentVec& exps) const {
    const Rational* c = find(exps);
    return c ? *c : Rational(0);
}

Rational SparsePolynomial::constant_term() const {
    return coefficient(ExponentVec(n_, 0));
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    SparsePolynomial out(n_);
    ExponentVec sum(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < n_; ++i)
                sum[i] = static_cast<std::int8_t>(ea[i] + eb[i]);
            out.add_term(sum, ca * cb);
        }
    return out;
}

int SparsePolynomial::min_exponent(int var) const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        if (e[var - 1] < m) m = e[var - 1];
    return m;
}

int SparsePolynomial::max_exponent(int var) const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        if (e[var - 1] > m) m = e[var - 1];
    return m;
}

bool SparsePolynomial::is_multilinear() const {
    for (const auto& [e, c] : terms_)
        for (std::int8_t d : e)
            if (d != 0 && d != 1) return false;
    return true;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw DimensionMismatch("point size does not match variable count");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i) {
            int d = e[i];
            if (d == 0) continue;
            if (point[i] == 0 && d < 0) throw Error("zero base with negative exponent");
            Rational base = point[i];
            if (d < 0) {
                base = 1 / base;
                d = -d;
            }
            for (int k = 0; k < d; ++k) term *= base;
        }
        total += term;
    }
    return total;
}

double SparsePolynomial::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw DimensionMismatch("point size does not match variable count");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) term *= std::pow(point[i], static_cast<double>(e[i]));
        total += term;
    }
    return total;
}

std::string SparsePolynomial::dump() const {
    std::ostringstream out;
    for (const auto& [e, c] : terms_) {
        out << c.get_num().get_str() << '/' << c.get_den().get_str();
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) out << " x" << (i + 1) << '^' << static_cast<int>(e[i]);
        out << '\n';
    }
    return out.str();
}

} // namespace latcount
