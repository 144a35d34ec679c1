#include "waring/rank.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace waring {

namespace {

std::vector<Rational> normalized_direction(const LinearForm& l) {
    std::vector<Rational> v = l.coeffs();
    for (const Rational& c : v) {
        if (!c.is_zero()) {
            const Rational inv = c.inverse();
            for (Rational& x : v) x *= inv;
            return v;
        }
    }
    throw std::invalid_argument("zero linear form in decomposition");
}

}  // namespace

Decomposition::Decomposition(std::size_t num_vars, int degree, std::vector<PowerTerm> terms)
    : num_vars_(num_vars), degree_(degree), terms_(std::move(terms)) {
    if (degree < 1) throw std::invalid_argument("decomposition degree must be >= 1");
    std::vector<std::vector<Rational>> dirs;
    for (const auto& t : terms_) {
        if (t.linear.num_vars() != num_vars_)
            throw std::invalid_argument("decomposition term in wrong variable count");
        if (t.coeff.is_zero()) throw std::invalid_argument("zero coefficient in decomposition");
        dirs.push_back(normalized_direction(t.linear));
    }
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            if (dirs[i] == dirs[j])
                throw std::invalid_argument("proportional linear forms in decomposition");
}

Form Decomposition::expand() const {
    Form out(num_vars_, degree_);
    for (const auto& t : terms_) out = add(out, scale(power(t.linear, degree_), t.coeff));
    return out;
}

std::string to_string(RankMethod m) {
    switch (m) {
        case RankMethod::sylvester: return "sylvester";
        case RankMethod::monomial: return "monomial";
        case RankMethod::sac_theorem: return "sac-theorem";
        case RankMethod::catalecticant_bound: return "catalecticant-bound";
        case RankMethod::explicit_decomposition: return "explicit-decomposition";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Univariate helpers over Q (coefficients ascending, trimmed; empty = zero).

namespace {

using UPoly = std::vector<Rational>;

UPoly u_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int u_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly u_rem(UPoly a, const UPoly& b) {
    const int db = u_deg(b);
    while (u_deg(a) >= db) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = u_trim(std::move(a));
    }
    return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
    a = u_trim(std::move(a));
    b = u_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = u_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational inv = a.back().inverse();
        for (Rational& c : a) c *= inv;
    }
    return a;
}

/// Coefficients c[j] of x0^j x1^{k-j} for a binary form of degree k.
std::vector<Rational> binary_coeffs(const Form& a) {
    std::vector<Rational> c(static_cast<std::size_t>(a.degree()) + 1);
    for (const auto& [m, q] : a.terms()) c[static_cast<std::size_t>(m.exponents[0])] = q;
    return c;
}

Form as_binary(const Form& a) {
    if (a.num_vars() == 2) return a;
    if (a.num_vars() == 1) return embed(a, 2, 0);
    throw std::invalid_argument("expected a binary form");
}

/// deg gcd(A, B) for binary forms; B may be zero (gcd = A).
int binary_gcd_degree(const Form& a, const Form& b) {
    if (b.is_zero()) return a.degree();
    const UPoly ua = u_trim(binary_coeffs(a));
    const UPoly ub = u_trim(binary_coeffs(b));
    const int mult_a = a.degree() - u_deg(ua);  // power of x1 dividing A
    const int mult_b = b.degree() - u_deg(ub);
    return u_deg(u_gcd(ua, ub)) + std::min(mult_a, mult_b);
}

// ---------------------------------------------------------------------------
// Rational projective roots of a binary form, via the classical p/q
// candidate test. Integer factorization is budgeted; when the budget is
// exhausted the caller simply skips the (optional) decomposition witness.

struct FactorBudget {
    long ops = 0;
    long limit = 400000;
    bool exhausted() const { return ops > limit; }
};

mpz_class pollard_rho(const mpz_class& n, FactorBudget& fb) {
    for (unsigned long c = 1; c <= 24 && !fb.exhausted(); ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            if (++fb.ops > fb.limit) return 0;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (sgn(diff) < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor; try next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) return d;
    }
    return 0;
}

bool factorize(mpz_class n, std::map<mpz_class, int>& out, FactorBudget& fb) {
    if (n < 0) n = -n;
    if (n <= 1) return true;
    for (mpz_class p = 2; p < 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return true;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        ++out[n];
        return true;
    }
    const mpz_class d = pollard_rho(n, fb);
    if (d == 0) return false;
    return factorize(d, out, fb) && factorize(n / d, out, fb);
}

bool divisors_of(const mpz_class& n, std::vector<mpz_class>& out, FactorBudget& fb) {
    std::map<mpz_class, int> factors;
    if (!factorize(n, factors, fb)) return false;
    out = {mpz_class(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        if (base * (e + 1) > 10000) return false;
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return true;
}

/// Primitive direction [p : q] of a projective root; q >= 0, and q = 0
/// only for [1 : 0].
struct ProjRoot {
    mpz_class p, q;
};

/// All rational projective roots of a nonzero binary form, or nullopt when
/// the factorization budget was exhausted.
std::optional<std::vector<ProjRoot>> rational_projective_roots(const Form& a) {
    const int k = a.degree();
    UPoly u = u_trim(binary_coeffs(a));  // A = x1^(k - deg u) * u(x0/x1) * x1^deg u
    std::vector<ProjRoot> roots;
    if (u_deg(u) < k) roots.push_back({1, 0});
    std::size_t low = 0;
    while (low < u.size() && u[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back({0, 1});
        u.erase(u.begin(), u.begin() + static_cast<long>(low));
    }
    if (u_deg(u) < 1) return roots;

    // Integer-primitive version of u.
    mpz_class den_lcm = 1;
    for (const Rational& c : u) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> w(u.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        w[i] = u[i].num() * (den_lcm / u[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
    }
    for (auto& c : w) c /= content;

    FactorBudget fb;
    std::vector<mpz_class> ps, qs;
    if (!divisors_of(w.front(), ps, fb)) return std::nullopt;
    if (!divisors_of(w.back(), qs, fb)) return std::nullopt;

    for (const mpz_class& q : qs) {
        for (const mpz_class& p : ps) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                const mpz_class pp = sign == 0 ? p : mpz_class(-p);
                // w(pp/q) * q^deg, evaluated by Horner over Z: step j adds
                // w[j] * q^(deg - j), so the q power grows with each step.
                mpz_class acc = w.back();
                mpz_class qpow = 1;
                for (std::size_t j = w.size() - 1; j-- > 0;) {
                    qpow *= q;
                    acc = acc * pp + w[j] * qpow;
                }
                if (acc == 0) roots.push_back({pp, q});
            }
        }
    }
    return roots;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_squarefree_binary(const Form& a_in) {
    if (a_in.is_zero()) throw std::invalid_argument("squarefree test on the zero form");
    const Form a = as_binary(a_in);
    const int k = a.degree();
    if (k <= 1) return true;
    // A = x1^m * homog(ua) with ua(x0) = A(x0, 1) trimmed: squarefree iff
    // m <= 1 and ua has no repeated root.
    const UPoly ua = u_trim(binary_coeffs(a));
    if (k - u_deg(ua) >= 2) return false;
    if (u_deg(ua) <= 1) return true;
    UPoly da(ua.size() - 1);
    for (std::size_t j = 1; j < ua.size(); ++j)
        da[j - 1] = ua[j] * Rational(static_cast<long>(j));
    return u_deg(u_gcd(ua, da)) == 0;
}

namespace {

/// Lifts a dual form in the reduced variables to an annihilating dual form
/// in the original variables: operators transform through any right inverse
/// of the substitution matrix (rows: reduced vars, cols: originals).
Form lift_operator(const Form& op, const MatrixQ& sub) {
    const std::size_t ess = sub.rows(), n = sub.cols();
    if (op.num_vars() != ess) throw std::logic_error("operator/substitution mismatch");
    MatrixQ lift(ess, n);
    // Solve sub * S = I columnwise; S^T rows give the images of the duals.
    for (std::size_t i = 0; i < ess; ++i) {
        std::vector<Rational> e(ess);
        e[i] = 1;
        const auto col = solve(sub, e);
        if (!col) throw std::logic_error("substitution matrix lost full row rank");
        for (std::size_t j = 0; j < n; ++j) lift.at(i, j) = (*col)[j];
    }
    return substitute(op, lift);
}

/// Canonical second generator of the apolar ideal of a binary form: the
/// first element of the degree-t graded piece independent of a * S_{t-k}.
Form second_apolar_generator(const Form& g, const Form& a, int t) {
    const int k = a.degree();
    const auto piece = apolar_graded_piece(g, t);
    std::vector<std::vector<Rational>> span_rows;
    for (const Monomial& m : monomials_of_degree(2, t - k))
        span_rows.push_back(multiply(Form::term(2, m, 1), a).coefficient_vector());
    const std::size_t base_rank = rank(MatrixQ::from_rows(span_rows));
    for (const Form& cand : piece) {
        auto rows = span_rows;
        rows.push_back(cand.coefficient_vector());
        if (rank(MatrixQ::from_rows(rows)) > base_rank) return cand;
    }
    throw std::logic_error("apolar ideal of a binary form must have a second generator");
}

/// Attempts a rational decomposition witness for a binary form g of degree d
/// from a squarefree degree-r annihilator with r rational roots, mapped back
/// through the essential substitution. Returns nullopt when the annihilator
/// does not split over Q (or the factorization budget ran out).
std::optional<Decomposition> binary_witness(const Form& g, const Form& ann, int d,
                                            std::size_t orig_vars, const MatrixQ& sub) {
    const int r = ann.degree();
    const auto roots = rational_projective_roots(ann);
    if (!roots || static_cast<int>(roots->size()) != r) return std::nullopt;
    // Root [p : q] of the annihilator corresponds to the direction
    // L = p*z0 + q*z1: contract(A, L^d) is a multiple of A(p, q).
    std::vector<LinearForm> dirs;
    std::vector<std::vector<Rational>> cols;
    for (const ProjRoot& root : *roots) {
        dirs.emplace_back(std::vector<Rational>{Rational(root.p), Rational(root.q)});
        cols.push_back(power(dirs.back(), d).coefficient_vector());
    }
    MatrixQ v(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) v.at(i, j) = cols[j][i];
    const auto coeffs = solve(v, g.coefficient_vector());
    if (!coeffs) return std::nullopt;
    std::vector<PowerTerm> terms;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if ((*coeffs)[i].is_zero()) continue;
        // Map back to the original variables: z0, z1 are linear forms in x.
        std::vector<Rational> lx(orig_vars);
        for (std::size_t j = 0; j < orig_vars; ++j)
            lx[j] = dirs[i].coeff(0) * sub.at(0, j) + dirs[i].coeff(1) * sub.at(1, j);
        terms.push_back({(*coeffs)[i], LinearForm(std::move(lx))});
    }
    return Decomposition(orig_vars, d, std::move(terms));
}

}  // namespace

RankCertificate binary_rank(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("rank of the zero form");
    if (f.degree() < 1) throw std::invalid_argument("rank requires degree >= 1");
    const int d = f.degree();
    const EssentialReduction red = essential_reduction(f);
    const std::size_t ess = red.reduced.num_vars();
    if (ess > 2)
        throw std::invalid_argument("binary_rank requires at most two essential variables");

    RankCertificate cert;
    cert.method = RankMethod::sylvester;

    if (ess == 1) {
        const Rational c = red.reduced.terms().begin()->second;
        cert.exact = 1;
        cert.lower = cert.upper = 1;
        cert.witness = Decomposition(f.num_vars(), d, {{c, LinearForm(red.substitution.row(0))}});
        return cert;
    }

    const Form& g = red.reduced;
    for (int k = 1; 2 * k <= d + 2; ++k) {
        const auto ann = apolar_graded_piece(g, k);
        if (ann.empty()) continue;
        const Form& a = ann.front();
        std::size_t r;
        Form partner(2, 0);
        std::vector<Form> witness_candidates;
        if (ann.size() >= 2) {
            // k = (d+2)/2: both generators appear in the same degree and the
            // rank equals k = d+2-k either way.
            r = static_cast<std::size_t>(k);
            partner = ann[1];
            witness_candidates = {ann[0], ann[1], add(ann[0], ann[1]),
                                  add(ann[0], scale(ann[1], -1))};
        } else {
            r = is_squarefree_binary(a) ? static_cast<std::size_t>(k)
                                        : static_cast<std::size_t>(d + 2 - k);
            partner = second_apolar_generator(g, a, d + 2 - k);
            if (r == static_cast<std::size_t>(k)) {
                witness_candidates = {a};
            } else {
                // Rank sits in degree d+2-k: any squarefree annihilator there
                // splits F. Try the basis and its pairwise combinations.
                const auto high = apolar_graded_piece(g, static_cast<int>(r));
                witness_candidates = high;
                for (std::size_t i = 0; i < high.size(); ++i)
                    for (std::size_t j = i + 1; j < high.size(); ++j) {
                        witness_candidates.push_back(add(high[i], high[j]));
                        witness_candidates.push_back(add(high[i], scale(high[j], -1)));
                    }
            }
        }
        cert.exact = r;
        cert.lower = cert.upper = r;
        cert.apolar_pair = {lift_operator(a, red.substitution),
                            lift_operator(partner, red.substitution)};
        for (const Form& cand : witness_candidates) {
            if (cand.degree() != static_cast<int>(r) || !is_squarefree_binary(cand)) continue;
            if (auto w = binary_witness(g, cand, d, f.num_vars(), red.substitution)) {
                cert.witness = std::move(*w);
                break;
            }
        }
        return cert;
    }
    throw std::logic_error("binary apolar ideal had no generator up to degree (d+2)/2");
}

std::size_t monomial_rank(const std::vector<int>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("empty exponent vector");
    for (int e : exponents)
        if (e < 1) throw std::invalid_argument("monomial rank requires all exponents >= 1");
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < exponents.size(); ++i)
        if (exponents[i] < exponents[argmin]) argmin = i;
    mpz_class prod = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (i != argmin) prod *= exponents[i] + 1;
    if (!prod.fits_ulong_p()) throw std::overflow_error("monomial rank too large");
    return static_cast<std::size_t>(prod.get_ui());
}

RankCertificate monomial_rank_certificate(const Form& f) {
    if (!f.is_monomial()) throw std::invalid_argument("not a monomial");
    const Monomial& m = f.terms().begin()->first;
    std::vector<int> support_exps;
    for (int e : m.exponents)
        if (e > 0) support_exps.push_back(e);
    RankCertificate cert;
    cert.method = RankMethod::monomial;
    cert.exact = monomial_rank(support_exps);
    cert.lower = cert.upper = *cert.exact;
    return cert;
}

std::size_t catalecticant_lower_bound(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("rank bound of the zero form");
    if (f.degree() < 1) throw std::invalid_argument("rank requires degree >= 1");
    if (f.degree() == 1) return 1;
    std::size_t best = 0;
    for (int k = 1; k < f.degree(); ++k) best = std::max(best, catalecticant_rank(f, k));
    return best;
}

RankCertificate certify_rank(const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("rank of the zero form");
    if (f.degree() < 1) throw std::invalid_argument("rank requires degree >= 1");
    const std::size_t ess = essential_variable_count(f);
    if (ess <= 2) return binary_rank(f);
    if (f.is_monomial()) return monomial_rank_certificate(f);

    const EssentialReduction red = essential_reduction(f);
    bool diagonal = true;
    for (const auto& [m, c] : red.reduced.terms()) {
        int nonzero = 0;
        for (int e : m.exponents)
            if (e > 0) ++nonzero;
        if (nonzero != 1) {
            diagonal = false;
            break;
        }
    }
    if (diagonal && red.reduced.term_count() == ess) {
        RankCertificate cert;
        cert.method = RankMethod::explicit_decomposition;
        cert.exact = ess;
        cert.lower = cert.upper = ess;
        std::vector<PowerTerm> terms;
        for (const auto& [m, c] : red.reduced.terms()) {
            std::size_t var = 0;
            for (std::size_t j = 0; j < m.exponents.size(); ++j)
                if (m.exponents[j] > 0) var = j;
            terms.push_back({c, LinearForm(red.substitution.row(var))});
        }
        cert.witness = Decomposition(f.num_vars(), f.degree(), std::move(terms));
        return cert;
    }

    RankCertificate cert;
    cert.method = RankMethod::catalecticant_bound;
    cert.lower = catalecticant_lower_bound(f);
    // Crude but valid upper bounds: the dimension of the degree-d piece in
    // the essential variables, and the sum of the term-wise monomial ranks.
    mpz_class termwise = 0;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> support_exps;
        for (int e : m.exponents)
            if (e > 0) support_exps.push_back(e);
        termwise += static_cast<unsigned long>(monomial_rank(support_exps));
    }
    mpz_class dim = binomial(ess - 1 + static_cast<unsigned long>(f.degree()),
                             static_cast<unsigned long>(f.degree()));
    const mpz_class upper = std::min(termwise, dim);
    cert.upper = upper.fits_ulong_p() ? static_cast<std::size_t>(upper.get_ui())
                                      : static_cast<std::size_t>(-1);
    return cert;
}

std::optional<std::vector<Rational>> powers_dependence(const std::vector<LinearForm>& points,
                                                       int d) {
    if (d < 1) throw std::invalid_argument("powers_dependence requires degree >= 1");
    if (points.empty()) return std::nullopt;
    const std::size_t n = points.front().num_vars();
    std::vector<std::vector<Rational>> dirs;
    for (const auto& l : points) {
        if (l.num_vars() != n) throw std::invalid_argument("mixed variable counts");
        dirs.push_back(normalized_direction(l));
    }
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            if (dirs[i] == dirs[j]) throw std::invalid_argument("proportional points");

    const std::size_t rows = monomial_space_dim(n, d);
    MatrixQ m(rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto col = power(points[j], d).coefficient_vector();
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = col[i];
    }
    const auto basis = kernel_basis(m);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

Decomposition fold_collinear(const Decomposition& d) {
    Decomposition cur = d;
    while (cur.size() >= 3) {
        const auto& terms = cur.terms();
        const std::size_t t = terms.size();
        // Maximal collinear index subsets (>= 3 points on a projective line
        // in the space of linear forms).
        std::set<std::vector<std::size_t>> lines;
        if (cur.num_vars() <= 2) {
            std::vector<std::size_t> all(t);
            for (std::size_t i = 0; i < t; ++i) all[i] = i;
            lines.insert(all);
        } else {
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = i + 1; j < t; ++j) {
                    std::vector<std::size_t> members;
                    for (std::size_t m = 0; m < t; ++m) {
                        MatrixQ probe = MatrixQ::from_rows({terms[i].linear.coeffs(),
                                                            terms[j].linear.coeffs(),
                                                            terms[m].linear.coeffs()});
                        if (rank(probe) <= 2) members.push_back(m);
                    }
                    if (members.size() >= 3) lines.insert(std::move(members));
                }
        }
        // Largest line first; ties broken by the lexicographically smallest
        // member list (std::set orders vectors lexicographically already).
        std::vector<std::vector<std::size_t>> ordered(lines.begin(), lines.end());
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });

        bool folded = false;
        for (const auto& line : ordered) {
            std::vector<LinearForm> pts;
            for (std::size_t idx : line) pts.push_back(terms[idx].linear);
            const auto rel = powers_dependence(pts, cur.degree());
            if (!rel) continue;
            std::size_t epos = 0;
            while ((*rel)[epos].is_zero()) ++epos;
            const std::size_t evict = line[epos];
            const Rational ce = terms[evict].coeff;
            const Rational le = (*rel)[epos];
            std::vector<PowerTerm> next;
            for (std::size_t m = 0; m < t; ++m) {
                if (m == evict) continue;
                PowerTerm term = terms[m];
                const auto pos = std::find(line.begin(), line.end(), m);
                if (pos != line.end()) {
                    const Rational lm = (*rel)[static_cast<std::size_t>(pos - line.begin())];
                    term.coeff -= ce * lm / le;
                }
                if (!term.coeff.is_zero()) next.push_back(std::move(term));
            }
            cur = Decomposition(cur.num_vars(), cur.degree(), std::move(next));
            folded = true;
            break;
        }
        if (!folded) break;
    }
    return cur;
}

}  // namespace waring
