#pragma once

#include "logdiv/poly.hpp"

#include <string>

namespace logdiv {

/// Parses the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-int)?
///   base   := rational | variable | '(' expr ')'
/// over the given context. No implicit multiplication. Throws InputError with
/// a character position on syntax errors, unknown variables and negative
/// exponents.
Poly parse_poly(const std::string& text, const Context& ctx);

} // namespace logdiv
