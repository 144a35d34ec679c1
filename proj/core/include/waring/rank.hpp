#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/form.hpp"

namespace waring {

/// One summand c * L^d of a power decomposition.
struct PowerTerm {
    Rational coeff;
    LinearForm linear;

    bool operator==(const PowerTerm&) const = default;
};

/// A list of weighted d-th powers of pairwise non-proportional nonzero
/// linear forms. The empty decomposition expands to the zero form.
class Decomposition {
public:
    Decomposition(std::size_t num_vars, int degree, std::vector<PowerTerm> terms);

    std::size_t num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<PowerTerm>& terms() const { return terms_; }

    Form expand() const;

    bool operator==(const Decomposition&) const = default;

private:
    std::size_t num_vars_;
    int degree_;
    std::vector<PowerTerm> terms_;
};

enum class RankMethod {
    sylvester,
    monomial,
    sac_theorem,
    catalecticant_bound,
    explicit_decomposition,
};

std::string to_string(RankMethod m);

/// Proof-carrying rank information: lower <= upper always; when `exact` is
/// set it equals both bounds. A witness decomposition, when present,
/// expands to the certified form; an apolar pair, when present, is a pair
/// of independent annihilating operators from Sylvester's algorithm.
struct RankCertificate {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<std::size_t> exact;
    RankMethod method = RankMethod::catalecticant_bound;
    std::optional<Decomposition> witness;
    std::optional<std::pair<Form, Form>> apolar_pair;
};

/// Exact rank of a nonzero form with at most two essential variables, by
/// Sylvester's algorithm on the essential reduction. The certificate always
/// carries the exact value; for two essential variables it carries the
/// minimal-degree annihilator (and its degree-(d+2-k) partner), and a
/// decomposition witness whenever that annihilator is squarefree and splits
/// into rational linear factors. Throws std::invalid_argument on the zero
/// form or on more than two essential variables.
RankCertificate binary_rank(const Form& f);

/// True when the binary form has no repeated projective root, i.e.
/// gcd(A, dA/dx0, dA/dx1) is constant. Throws on the zero form.
bool is_squarefree_binary(const Form& a);

/// Exact rank of a monomial x^a with all exponents >= 1: the product of
/// (a_i + 1) over all i except one position achieving the minimal exponent.
std::size_t monomial_rank(const std::vector<int>& exponents);

/// RankCertificate wrapper for monomial_rank, for a single-term form whose
/// exponents are all >= 1 on its support.
RankCertificate monomial_rank_certificate(const Form& f);

/// max over 1 <= k <= deg(F)-1 of the catalecticant ranks (deg(F) = 1 gives
/// 1). A lower bound for the Waring rank. Throws on the zero form.
std::size_t catalecticant_lower_bound(const Form& f);

/// Best certificate this library can produce for an arbitrary nonzero form:
/// exact for monomials with positive exponents, for forms with at most two
/// essential variables, and for forms that become diagonal (a sum of pure
/// d-th powers touching every variable) after essential reduction; otherwise
/// catalecticant lower bound plus a crude universal upper bound.
RankCertificate certify_rank(const Form& f);

/// A nontrivial rational dependence among the d-th powers of the given
/// pairwise non-proportional nonzero linear forms: coefficients l with
/// sum l_i * L_i^d = 0, or nullopt if the powers are independent. The
/// returned vector is the first canonical kernel basis vector.
std::optional<std::vector<Rational>> powers_dependence(const std::vector<LinearForm>& points,
                                                       int d);

/// Repeatedly merges terms of the decomposition whose points lie on a
/// common line (in the projective space of linear forms) and whose powers
/// are linearly dependent, preserving the expanded form. Returns a
/// decomposition with no collinear subfamily of dependent powers.
Decomposition fold_collinear(const Decomposition& d);

}  // namespace waring
