#ifndef RDIM_PARSER_HPP
#define RDIM_PARSER_HPP

#include <string>

#include "rdim/polynomial.hpp"

namespace rdim {

/// Parse a polynomial expression over the given ring.
///
/// Grammar: integer and rational literals (a or a/b), variable identifiers
/// [A-Za-z][A-Za-z0-9_]*, operators + - * ^ (with ^ restricted to
/// non-negative integer exponents) and parentheses. Implicit multiplication
/// is rejected. Throws InputError on any syntax or unknown-variable problem.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace rdim

#endif
