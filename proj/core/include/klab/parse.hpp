#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "klab/polynomial.hpp"
#include "klab/ring.hpp"

namespace klab {

/// Parses a polynomial over `ring`.
///
/// Grammar: integers, declared variable names, `^` with a non-negative
/// integer exponent, explicit `*` products, `+`/`-` (also unary) and
/// parentheses. When the ring has a uniformizer proxy, the name `p` stands
/// for it unless `p` is itself declared. Throws ParseError with a byte offset.
Polynomial parse_poly(std::string_view text, const RingSpec& ring);

/// Comma-separated list of polynomials; an empty or blank string gives {}.
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingSpec& ring);

/// Comma- or space-separated identifiers.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace klab
