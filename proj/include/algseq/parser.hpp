#pragma once

#include "algseq/bipoly.hpp"

namespace algseq {

/// Parses the polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' '-'? nat)?
///   base   := coeff | 'x' | 'y' | 'z' | '(' expr ')'
///   coeff  := nat | '[' nat (',' nat)* ']'
/// over the given field; z is an alias for y so univariate inputs in z work.
/// Negative exponents are accepted on y only (Laurent in y).
BiPoly parse_poly(const std::string& text, const Field& f);

/// Parses a univariate (Laurent) expression: every term must use a single
/// variable, which may be x, y, or z.
UniLaurent parse_laurent(const std::string& text, const Field& f);

}  // namespace algseq
