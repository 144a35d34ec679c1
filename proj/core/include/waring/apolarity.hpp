#pragma once

#include <cstddef>
#include <vector>

#include "waring/form.hpp"

namespace waring {

/// The k-th catalecticant of a degree-d form: rows are indexed by the dual
/// monomials of degree k, columns by the monomials of degree d-k, both in
/// canonical order; entry (i, j) is the coefficient of col_monomials[j] in
/// contract(row_monomials[i], F).
struct Catalecticant {
    int k = 0;
    MatrixQ matrix;
    std::vector<Monomial> row_monomials;
    std::vector<Monomial> col_monomials;
};

/// Requires F != 0 and 1 <= k <= deg(F). (k = deg(F) is allowed: the single
/// column is the coefficient space of constants.)
Catalecticant catalecticant(const Form& f, int k);

/// rank of the k-th catalecticant, computed on the submatrix of rows and
/// columns that can be nonzero for the support of F. Agrees with
/// rank(catalecticant(f, k).matrix) but stays cheap for sparse forms in
/// many variables.
std::size_t catalecticant_rank(const Form& f, int k);

/// Basis of the degree-k graded piece of the apolar ideal: all dual forms D
/// of degree k with contract(D, F) = 0, derived from the canonical kernel
/// basis of the transposed catalecticant. Each element is returned as a Form
/// in the dual variables.
std::vector<Form> apolar_graded_piece(const Form& f, int k);

/// Number of essential variables: the rank of the first catalecticant.
/// Requires F != 0.
std::size_t essential_variable_count(const Form& f);

/// Result of rewriting F in the minimal number of variables: F equals
/// substitute(reduced, substitution) where `reduced` uses
/// essential_variable_count(F) variables and `substitution` maps each new
/// variable to a linear form in the originals (rows = new vars, cols = old).
struct EssentialReduction {
    Form reduced;
    MatrixQ substitution;
};

EssentialReduction essential_reduction(const Form& f);

}  // namespace waring
