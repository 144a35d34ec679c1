#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/monomial.hpp"

namespace waring {

/// Linear form c0*x0 + ... + c{n-1}*x{n-1}.
class LinearForm {
public:
    explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t num_vars() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const;

    bool operator==(const LinearForm&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Homogeneous polynomial of a fixed degree over Q. The zero form of any
/// degree is representable (empty term map); every stored coefficient is
/// nonzero and every stored monomial has total degree = degree().
class Form {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Form(std::size_t num_vars, int degree);
    Form(std::size_t num_vars, int degree, TermMap terms);

    /// Single-term convenience constructor; drops the term when c = 0.
    static Form term(std::size_t num_vars, Monomial m, const Rational& c);

    std::size_t num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given monomial (0 when absent).
    Rational coeff(const Monomial& m) const;

    /// Adds c * m, erasing the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Indices of variables appearing in some term.
    std::set<std::size_t> support() const;

    /// True when the form is c * x^a for a single monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Dense coefficient vector over monomials_of_degree(num_vars, degree)
    /// in canonical order.
    std::vector<Rational> coefficient_vector() const;

    bool operator==(const Form&) const = default;

private:
    std::size_t num_vars_;
    int degree_;
    TermMap terms_;
};

/// L^d expanded by the multinomial theorem. Requires d >= 1 and L != 0.
Form power(const LinearForm& l, int d);

/// Sum; degrees and variable counts must match.
Form add(const Form& f, const Form& g);

Form scale(const Form& f, const Rational& c);

/// Product (degree adds); variable counts must match.
Form multiply(const Form& f, const Form& g);

/// Substitution x_i -> sum_j a[i][j] * z_j, where a has f.num_vars() rows;
/// the result lives in a.cols() variables and has the same degree.
Form substitute(const Form& f, const MatrixQ& a);

/// Reinterprets f in a larger variable set, shifting variable i to
/// offset + i. Requires offset + f.num_vars() <= total_vars.
Form embed(const Form& f, std::size_t total_vars, std::size_t offset);

/// Contraction (apolar action) of the dual monomial e on f: the iterated
/// partial derivative (d/dx)^e f, with the usual falling-factorial
/// coefficients. Degree drops by deg(e); contracting below degree 0 gives
/// the zero form of degree 0.
Form contract(const Monomial& e, const Form& f);

/// Contraction by a dual form: sum of the contractions of its terms.
Form contract(const Form& op, const Form& f);

}  // namespace waring
