#include "waring/rational.hpp"

#include <ostream>

namespace waring {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) {
            throw std::invalid_argument("malformed rational literal: " + text);
        }
        return Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime; already canonical.
    Rational r;
    r.v_ = mpq_class(n, d);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long d) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), d);
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace waring
