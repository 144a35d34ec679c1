#include "waring/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace waring {

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
    if (exponents.size() != other.exponents.size())
        throw std::invalid_argument("monomials in different variable sets");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Rational Monomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != exponents.size())
        throw std::invalid_argument("point dimension mismatch");
    Rational out = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (point[i].is_zero()) return 0;
        out *= point[i].pow(static_cast<unsigned long>(exponents[i]));
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: a precedes b when a is lexicographically greater.
    return a.exponents > b.exponents;
}

namespace {

void gen_monomials(std::size_t num_vars, int degree, std::vector<int>& prefix,
                   std::vector<Monomial>& out) {
    if (prefix.size() + 1 == num_vars) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        prefix.push_back(e);
        gen_monomials(num_vars, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (num_vars == 0) {
        if (degree > 0) throw std::invalid_argument("no variables but positive degree");
        return {Monomial(std::vector<int>{})};
    }
    std::vector<Monomial> out;
    out.reserve(monomial_space_dim(num_vars, degree));
    std::vector<int> prefix;
    gen_monomials(num_vars, degree, prefix, out);
    return out;
}

std::size_t monomial_space_dim(std::size_t num_vars, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    const mpz_class c = binomial(num_vars - 1 + static_cast<unsigned long>(degree),
                                 static_cast<unsigned long>(degree));
    if (!c.fits_ulong_p()) throw std::overflow_error("monomial space too large");
    return static_cast<std::size_t>(c.get_ui());
}

Rational multinomial(const Monomial& m) {
    mpz_class denom = 1;
    for (int e : m.exponents)
        if (e > 1) denom *= factorial(static_cast<unsigned long>(e));
    return Rational(factorial(static_cast<unsigned long>(m.degree())), denom);
}

}  // namespace waring
