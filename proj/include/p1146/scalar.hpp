#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p1146 {

using Integer = mpz_class;

// Exact rational. GMP keeps mpq_class values reduced with a positive denominator
// as long as every value is canonicalized after construction from raw parts.
using Scalar = mpq_class;

Scalar make_scalar(const Integer& num, const Integer& den = 1);

// Accepts "n" or "n/d" with d > 0.
Scalar parse_scalar(std::string_view text);

inline std::string to_string(const Scalar& s) { return s.get_str(); }

} // namespace p1146
