#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Exponent vector of a monomial in variables x0..x{n-1}.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    std::size_t num_vars() const { return exponents.size(); }
    int degree() const;

    /// Componentwise <=; both monomials must live in the same variable set.
    bool divides(const Monomial& other) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    bool operator==(const Monomial&) const = default;
};

/// Canonical order used everywhere monomials are listed (matrix rows and
/// columns, term maps, printing): ascending total degree, and within a
/// degree descending lexicographic order, so x0^d comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of the given total degree in num_vars variables, in
/// canonical (descending lexicographic) order. Throws on degree < 0 or
/// num_vars = 0 with degree > 0.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

/// Number of monomials of the given degree: C(num_vars - 1 + degree, degree).
std::size_t monomial_space_dim(std::size_t num_vars, int degree);

/// d! / prod(e_i!) for an exponent vector summing to d.
Rational multinomial(const Monomial& m);

}  // namespace waring
