#ifndef RDIM_RATIONAL_HPP
#define RDIM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace rdim {

// Exact arbitrary-precision rational coefficients. mpq_class keeps values
// canonical (reduced, positive denominator), which we rely on for equality.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace rdim

#endif
