// rational.hpp — exact arbitrary-precision rationals (GMP mpq) plus the
// string format used on every CLI/JSON boundary: "p", "-p" or "p/q".
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starcalc {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (decimal digits only, q > 0 after sign rules).
// Rejects floats, whitespace and empty input. When `allow_negative` is
// false a leading '-' is an error (plain Character payloads are positive).
Rat parse_rational(const std::string& text, bool allow_negative = true);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& q);

double to_double(const Rat& q);

// q^e for small nonnegative exponents.
Rat pow_rat(const Rat& q, unsigned e);

// Smallest integer >= q.
long ceil_to_long(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace starcalc
