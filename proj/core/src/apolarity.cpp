#include "waring/apolarity.hpp"

#include <map>
#include <stdexcept>

namespace waring {

namespace {

void check_k(const Form& f, int k) {
    if (f.is_zero()) throw std::invalid_argument("catalecticant of the zero form");
    if (k < 1 || k > f.degree())
        throw std::invalid_argument("catalecticant index must satisfy 1 <= k <= deg(F)");
}

/// Divisors of degree k of the monomial m, i.e. all e with e <= m
/// componentwise and |e| = k.
void degree_k_divisors(const Monomial& m, int k, std::size_t pos, std::vector<int>& acc,
                       int remaining, std::vector<Monomial>& out) {
    if (pos + 1 == m.exponents.size()) {
        if (remaining <= m.exponents[pos]) {
            acc.push_back(remaining);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    const int hi = std::min(m.exponents[pos], remaining);
    for (int e = hi; e >= 0; --e) {
        acc.push_back(e);
        degree_k_divisors(m, k, pos + 1, acc, remaining - e, out);
        acc.pop_back();
    }
}

std::vector<Monomial> degree_k_divisors(const Monomial& m, int k) {
    std::vector<Monomial> out;
    std::vector<int> acc;
    degree_k_divisors(m, k, 0, acc, k, out);
    return out;
}

}  // namespace

Catalecticant catalecticant(const Form& f, int k) {
    check_k(f, k);
    Catalecticant cat;
    cat.k = k;
    cat.row_monomials = monomials_of_degree(f.num_vars(), k);
    cat.col_monomials = monomials_of_degree(f.num_vars(), f.degree() - k);
    std::map<Monomial, std::size_t, MonomialOrder> col_index;
    for (std::size_t j = 0; j < cat.col_monomials.size(); ++j)
        col_index.emplace(cat.col_monomials[j], j);
    cat.matrix = MatrixQ(cat.row_monomials.size(), cat.col_monomials.size());
    for (std::size_t i = 0; i < cat.row_monomials.size(); ++i) {
        const Form row = contract(cat.row_monomials[i], f);
        for (const auto& [m, c] : row.terms()) cat.matrix.at(i, col_index.at(m)) = c;
    }
    return cat;
}

std::size_t catalecticant_rank(const Form& f, int k) {
    check_k(f, k);
    // Only dual monomials dividing some term of F give nonzero rows, and only
    // the residual monomials of those contractions give nonzero columns.
    std::map<Monomial, std::size_t, MonomialOrder> rows, cols;
    for (const auto& [m, c] : f.terms())
        for (const Monomial& e : degree_k_divisors(m, k))
            rows.emplace(e, rows.size());
    // rows.size() assigned via emplace keeps first-seen indices; reindex in
    // canonical order instead for determinism of the matrix layout.
    {
        std::size_t i = 0;
        for (auto& [m, idx] : rows) idx = i++;
    }
    std::vector<Form> contractions(rows.size(), Form(f.num_vars(), f.degree() - k));
    for (const auto& [e, i] : rows) {
        contractions[i] = contract(e, f);
        for (const auto& [m, c] : contractions[i].terms()) cols.emplace(m, cols.size());
    }
    {
        std::size_t j = 0;
        for (auto& [m, idx] : cols) idx = j++;
    }
    MatrixQ mat(rows.size(), cols.size());
    for (const auto& [e, i] : rows)
        for (const auto& [m, c] : contractions[i].terms()) mat.at(i, cols.at(m)) = c;
    return rank(mat);
}

std::vector<Form> apolar_graded_piece(const Form& f, int k) {
    const Catalecticant cat = catalecticant(f, k);
    // Operators live on the row side: D = sum l_e * e annihilates F exactly
    // when the row combination sum l_e * row_e vanishes, i.e. l is in the
    // kernel of the transpose.
    const auto basis = kernel_basis(cat.matrix.transpose());
    std::vector<Form> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        Form d(f.num_vars(), k);
        for (std::size_t i = 0; i < v.size(); ++i) d.add_term(cat.row_monomials[i], v[i]);
        out.push_back(std::move(d));
    }
    return out;
}

std::size_t essential_variable_count(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("essential variables of the zero form");
    return catalecticant_rank(f, 1);
}

EssentialReduction essential_reduction(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("essential reduction of the zero form");
    const std::size_t n = f.num_vars();
    // Degree-1 annihilators: kernel of the transposed first catalecticant.
    const Catalecticant c1 = catalecticant(f, 1);
    const MatrixQ c1t = c1.matrix.transpose();
    const RrefResult r = rref(c1t);
    const std::size_t ess = r.rank;
    const auto kernel = kernel_basis(c1t);

    // Change of basis B: the first `ess` columns are the unit vectors of the
    // pivot variables, the rest the canonical kernel basis. Invertible by
    // construction (pivot coordinates of kernel vectors are determined by the
    // free ones, so the block structure is triangular after permutation).
    MatrixQ b(n, n);
    for (std::size_t j = 0; j < ess; ++j) b.at(r.pivot_cols[j], j) = 1;
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) b.at(i, ess + j) = kernel[j][i];
    const MatrixQ binv = inverse(b);

    // In z-coordinates (x = B z) the form only involves z0..z{ess-1}.
    const Form in_z = substitute(f, b);
    Form reduced(ess, f.degree());
    for (const auto& [m, c] : in_z.terms()) {
        for (std::size_t i = ess; i < n; ++i)
            if (m.exponents[i] != 0)
                throw std::logic_error("essential reduction failed to eliminate a variable");
        std::vector<int> e(m.exponents.begin(), m.exponents.begin() + ess);
        reduced.add_term(Monomial(std::move(e)), c);
    }

    MatrixQ sub(ess, n);
    for (std::size_t i = 0; i < ess; ++i)
        for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = binv.at(i, j);
    return {std::move(reduced), std::move(sub)};
}

}  // namespace waring
