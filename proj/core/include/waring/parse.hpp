#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "waring/form.hpp"

namespace waring {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          pos_(position) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// A parsed homogeneous form together with the variable blocks it uses:
/// x-variables first (x0..x{nx-1}), then y-variables (y0..y{ny-1}). The
/// block sizes are the smallest containing the indices that appear.
struct ParsedExpression {
    std::string source;
    Form form;
    std::size_t x_vars = 0;
    std::size_t y_vars = 0;
};

/// Grammar: sums of terms; a term is a product of factors ('*' optional);
/// factors are rational literals ("3", "4/5"), variables x<i>/y<j> with an
/// optional '^' exponent, or parenthesized subexpressions with an optional
/// '^' exponent. Every sum must be homogeneous; the result must have
/// positive degree (matching expected_degree when given).
ParsedExpression parse_form(const std::string& text,
                            std::optional<int> expected_degree = std::nullopt);

/// Canonical text rendering: terms in canonical monomial order, exponents
/// with '^', explicit '*' between coefficient and variables. Variables
/// below x_vars print as x<i>, the rest as y<i - x_vars>. The zero form
/// prints as "0".
std::string print_form(const Form& f, std::size_t x_vars);

}  // namespace waring
