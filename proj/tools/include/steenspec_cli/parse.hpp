#pragma once

#include <steenspec/error.hpp>
#include <steenspec/groebner.hpp>

#include <string_view>
#include <vector>

namespace steenspec::cli {

/// Parse failure with a 1-based source position.
class ParseError : public Error
{
public:
    ParseError(std::string kind, const std::string& message, int line, int column)
        : Error(std::move(kind), message), line_(line), column_(column)
    {
    }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// expr := term ('+' term)*; term := factor ('*' factor)*;
/// factor := atom ('^' uint)?; atom := xi(n) | h(t,s) | 0 | 1 | '(' expr ')'.
/// With a ring, only its h-variables are accepted and the result is in
/// ring normal form; without one, only xi's are accepted.
Poly parse_poly(std::string_view text, const RingPresentation* ring);

/// Comma-separated expressions; commas inside parentheses do not split.
/// Blank input gives an empty list.
std::vector<Poly> parse_poly_list(std::string_view text, const RingPresentation* ring);

} // namespace steenspec::cli
