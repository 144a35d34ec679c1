#include "waring/parse.hpp"

#include <cctype>
#include <map>

namespace waring {

namespace {

constexpr std::size_t kMaxVarIndex = 31;

/// Working polynomial during parsing: possibly inhomogeneous intermediate
/// states are rejected at every '+'/'-' merge, so a Poly is always
/// homogeneous. `degree` is empty only for the zero polynomial (which is
/// compatible with any degree).
struct Poly {
    using VarKey = std::pair<int, int>;  // (block 0 = x / 1 = y, index)
    using Mono = std::map<VarKey, int>;
    std::map<Mono, Rational> terms;
    std::optional<int> degree;

    static Poly constant(const Rational& c) {
        Poly p;
        if (!c.is_zero()) {
            p.terms.emplace(Mono{}, c);
            p.degree = 0;
        }
        return p;
    }

    static Poly variable(int block, int index) {
        Poly p;
        Mono m;
        m.emplace(VarKey{block, index}, 1);
        p.terms.emplace(std::move(m), Rational(1));
        p.degree = 1;
        return p;
    }
};

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    if (!a.degree || !b.degree) return out;  // zero absorbs
    out.degree = *a.degree + *b.degree;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Poly::Mono m = ma;
            for (const auto& [k, e] : mb) m[k] += e;
            auto it = out.terms.find(m);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    if (out.terms.empty()) out.degree.reset();
    return out;
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long parse_nat(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(std::string("expected ") + what, pos);
        long value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            if (value > 1000000) fail("number too large", start);
            ++pos;
        }
        return value;
    }

    Poly parse_rational() {
        const std::size_t start = pos;
        const long num = parse_nat("a number");
        if (peek() == '/') {
            ++pos;
            const long den = parse_nat("a denominator");
            if (den == 0) fail("zero denominator", start);
            return Poly::constant(Rational(num, den));
        }
        return Poly::constant(Rational(num));
    }

    Poly parse_variable() {
        skip_ws();
        const std::size_t start = pos;
        const char letter = s[pos];
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(std::string("variable '") + letter + "' needs an index", start);
        const long index = parse_nat("a variable index");
        if (index > static_cast<long>(kMaxVarIndex)) fail("variable index too large", start);
        return Poly::variable(letter == 'x' ? 0 : 1, static_cast<int>(index));
    }

    Poly pow(const Poly& base, long e, std::size_t at) {
        if (e == 0) return Poly::constant(Rational(1));
        if (e > 64) fail("exponent too large", at);
        Poly out = base;
        for (long i = 1; i < e; ++i) out = mul(out, base);
        return out;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected a factor", pos);
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (c == 'x' || c == 'y') {
            Poly v = parse_variable();
            if (peek() == '^') {
                const std::size_t at = pos;
                ++pos;
                return pow(v, parse_nat("an exponent"), at);
            }
            return v;
        }
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (peek() != ')') fail("expected ')'", pos);
            ++pos;
            if (peek() == '^') {
                const std::size_t at = pos;
                ++pos;
                return pow(inner, parse_nat("an exponent"), at);
            }
            return inner;
        }
        fail("expected a factor", pos);
    }

    bool starts_factor() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            if (peek() == '*') {
                ++pos;
                p = mul(p, parse_factor());
            } else if (starts_factor()) {
                p = mul(p, parse_factor());  // juxtaposition, e.g. "3x0"
            } else {
                return p;
            }
        }
    }

    /// Adds b into a (with sign), enforcing homogeneity at this position.
    void accumulate(Poly& a, const Poly& b, int sign, std::size_t at) {
        if (a.degree && b.degree && *a.degree != *b.degree)
            fail("inhomogeneous sum: degree " + std::to_string(*a.degree) + " meets degree " +
                     std::to_string(*b.degree),
                 at);
        if (!a.degree) a.degree = b.degree;
        for (const auto& [m, c] : b.terms) {
            const Rational signed_c = sign < 0 ? -c : c;
            auto it = a.terms.find(m);
            if (it == a.terms.end()) {
                a.terms.emplace(m, signed_c);
            } else {
                it->second += signed_c;
                if (it->second.is_zero()) a.terms.erase(it);
            }
        }
        // Cancellation keeps the syntactic degree: "x0^2 - x0^2" is a zero
        // form of degree 2, so `degree` stays set.
    }

    Poly parse_expr() {
        Poly acc;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        accumulate(acc, parse_term(), sign, pos);
        while (peek() == '+' || peek() == '-') {
            const std::size_t at = pos;
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            accumulate(acc, parse_term(), sign, at);
        }
        return acc;
    }
};

}  // namespace

ParsedExpression parse_form(const std::string& text, std::optional<int> expected_degree) {
    Parser parser{text};
    if (parser.at_end()) throw ParseError("empty input", 0);
    const Poly poly = parser.parse_expr();
    if (!parser.at_end()) parser.fail("unexpected character", parser.pos);

    std::optional<int> degree = poly.degree;
    if (expected_degree) {
        if (degree && *degree != *expected_degree)
            throw ParseError("expected a form of degree " + std::to_string(*expected_degree) +
                                 ", got degree " + std::to_string(*degree),
                             0);
        degree = expected_degree;
    }
    if (!degree) throw ParseError("cannot determine the degree of the zero expression", 0);
    if (*degree < 1) throw ParseError("expected a form of positive degree", 0);

    int max_x = -1, max_y = -1;
    for (const auto& [m, c] : poly.terms)
        for (const auto& [key, e] : m) {
            if (key.first == 0)
                max_x = std::max(max_x, key.second);
            else
                max_y = std::max(max_y, key.second);
        }
    const std::size_t nx = static_cast<std::size_t>(max_x + 1);
    const std::size_t ny = static_cast<std::size_t>(max_y + 1);
    const std::size_t total = nx + ny;

    Form f(std::max<std::size_t>(total, 1), *degree);
    for (const auto& [m, c] : poly.terms) {
        std::vector<int> exps(f.num_vars(), 0);
        for (const auto& [key, e] : m)
            exps[key.first == 0 ? static_cast<std::size_t>(key.second)
                                : nx + static_cast<std::size_t>(key.second)] = e;
        f.add_term(Monomial(std::move(exps)), c);
    }
    return {text, std::move(f), nx, ny};
}

std::string print_form(const Form& f, std::size_t x_vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            const int e = m.exponents[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += i < x_vars ? "x" + std::to_string(i) : "y" + std::to_string(i - x_vars);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag.str();  // degree-0 form
        } else if (mag.is_one()) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

}  // namespace waring
