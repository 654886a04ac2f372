#pragma once

#include "tristrip/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace tristrip {

struct ParseError {
    std::size_t position = 0;  // byte offset into the input
    std::string expected;
    std::string found;

    std::string message() const;
};

using ParseResult = std::variant<BiPoly, ParseError>;

// Grammar:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*'? factor)*
//   factor   := rational | variable ['^' integer] | '(' expr ')'
//   rational := integer ['/' integer]
// Variables are x and y; '/' only joins two integer literals, so "x/2" is an
// error. Adjacent factors multiply ("2x^2y" works). Whitespace is free.
ParseResult parse_bipoly(std::string_view text);

// {"terms": [{"x": i, "y": j, "num": "<int>", "den": "<positive int>"}, ...]}
// with the numerator and denominator as decimal strings.
ParseResult parse_bipoly_json(std::string_view text);

enum class PolyFormat { Text, LaTeX, Json };

// Terms ordered by descending total degree, ties broken by descending
// x-exponent. Text output parses back to the same polynomial.
std::string format_bipoly(const BiPoly& p, PolyFormat style);
std::string format_unipoly(const UniPoly& p, PolyFormat style);

}  // namespace tristrip
