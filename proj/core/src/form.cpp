#include "waring/form.hpp"

#include <stdexcept>

namespace waring {

bool LinearForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Form::Form(std::size_t num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

Form::Form(std::size_t num_vars, int degree, TermMap terms)
    : num_vars_(num_vars), degree_(degree), terms_(std::move(terms)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    for (const auto& [m, c] : terms_) {
        if (m.num_vars() != num_vars_ || m.degree() != degree_)
            throw std::invalid_argument("term does not match ring signature");
        if (c.is_zero()) throw std::invalid_argument("stored zero coefficient");
    }
}

Form Form::term(std::size_t num_vars, Monomial m, const Rational& c) {
    Form f(num_vars, m.degree());
    f.add_term(m, c);
    return f;
}

Rational Form::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.num_vars() != num_vars_ || m.degree() != degree_)
        throw std::invalid_argument("term does not match ring signature");
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::set<std::size_t> Form::support() const {
    std::set<std::size_t> s;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) s.insert(i);
    return s;
}

Rational Form::evaluate(const std::vector<Rational>& point) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_) out += c * m.evaluate(point);
    return out;
}

std::vector<Rational> Form::coefficient_vector() const {
    const auto monos = monomials_of_degree(num_vars_, degree_);
    std::vector<Rational> v(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) v[i] = coeff(monos[i]);
    return v;
}

Form power(const LinearForm& l, int d) {
    if (d < 1) throw std::invalid_argument("power requires degree >= 1");
    if (l.is_zero()) throw std::invalid_argument("power of the zero linear form");
    const std::size_t n = l.num_vars();
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < n; ++i)
        if (!l.coeff(i).is_zero()) supp.push_back(i);
    Form out(n, d);
    // Enumerate exponent patterns over the support only.
    for (const Monomial& pattern : monomials_of_degree(supp.size(), d)) {
        Rational c = multinomial(pattern);
        std::vector<int> exps(n, 0);
        for (std::size_t k = 0; k < supp.size(); ++k) {
            const int e = pattern.exponents[k];
            exps[supp[k]] = e;
            if (e > 0) c *= l.coeff(supp[k]).pow(static_cast<unsigned long>(e));
        }
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Form add(const Form& f, const Form& g) {
    if (f.num_vars() != g.num_vars()) throw std::invalid_argument("variable count mismatch in add");
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch in add");
    Form out = f;
    for (const auto& [m, c] : g.terms()) out.add_term(m, c);
    return out;
}

Form scale(const Form& f, const Rational& c) {
    Form out(f.num_vars(), f.degree());
    if (c.is_zero()) return out;
    for (const auto& [m, k] : f.terms()) out.add_term(m, k * c);
    return out;
}

Form multiply(const Form& f, const Form& g) {
    if (f.num_vars() != g.num_vars())
        throw std::invalid_argument("variable count mismatch in multiply");
    Form out(f.num_vars(), f.degree() + g.degree());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            std::vector<int> e(mf.exponents);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += mg.exponents[i];
            out.add_term(Monomial(std::move(e)), cf * cg);
        }
    return out;
}

Form substitute(const Form& f, const MatrixQ& a) {
    if (a.rows() != f.num_vars())
        throw std::invalid_argument("substitution matrix must have one row per variable");
    const std::size_t new_vars = a.cols();
    std::vector<LinearForm> images;
    images.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) images.emplace_back(a.row(i));

    Form out(new_vars, f.degree());
    for (const auto& [m, c] : f.terms()) {
        Form prod(new_vars, 0);
        prod.add_term(Monomial(std::vector<int>(new_vars, 0)), 1);
        bool vanished = false;
        for (std::size_t i = 0; i < m.exponents.size() && !vanished; ++i) {
            const int e = m.exponents[i];
            if (e == 0) continue;
            if (images[i].is_zero()) {
                vanished = true;
                break;
            }
            prod = multiply(prod, power(images[i], e));
        }
        if (!vanished) out = add(out, scale(prod, c));
    }
    return out;
}

Form embed(const Form& f, std::size_t total_vars, std::size_t offset) {
    if (offset + f.num_vars() > total_vars)
        throw std::invalid_argument("embedding window out of range");
    Form out(total_vars, f.degree());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(total_vars, 0);
        for (std::size_t i = 0; i < m.exponents.size(); ++i) e[offset + i] = m.exponents[i];
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Form contract(const Monomial& e, const Form& f) {
    if (e.num_vars() != f.num_vars())
        throw std::invalid_argument("variable count mismatch in contract");
    const int k = e.degree();
    if (k > f.degree()) return Form(f.num_vars(), 0);
    Form out(f.num_vars(), f.degree() - k);
    for (const auto& [m, c] : f.terms()) {
        if (!e.divides(m)) continue;
        Rational factor = c;
        std::vector<int> rest(m.exponents);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            // Falling factorial a_i * (a_i - 1) * ... * (a_i - e_i + 1).
            for (int j = 0; j < e.exponents[i]; ++j) factor *= Rational(rest[i] - j);
            rest[i] -= e.exponents[i];
        }
        out.add_term(Monomial(std::move(rest)), factor);
    }
    return out;
}

Form contract(const Form& op, const Form& f) {
    if (op.num_vars() != f.num_vars())
        throw std::invalid_argument("variable count mismatch in contract");
    const int result_deg = op.degree() > f.degree() ? 0 : f.degree() - op.degree();
    Form out(f.num_vars(), result_deg);
    for (const auto& [e, c] : op.terms()) out = add(out, scale(contract(e, f), c));
    return out;
}

}  // namespace waring
