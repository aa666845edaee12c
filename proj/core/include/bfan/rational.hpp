#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bfan {

// All arithmetic in the library is exact. Integers are arbitrary precision
// and rationals are kept in lowest terms with a positive denominator, which
// is exactly what canonicalized GMP rationals provide.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string to_string(const Rat& q);

std::string to_string(const Int& n);

/// Parses "p" or "p/q" with an optional leading minus sign. Returns nullopt
/// on malformed input or zero denominator.
std::optional<Rat> parse_rat(std::string_view text);

/// Largest integer <= q.
Int rat_floor(const Rat& q);

/// Smallest integer >= q.
Int rat_ceil(const Rat& q);

}  // namespace bfan
