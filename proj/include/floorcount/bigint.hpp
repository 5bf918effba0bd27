#pragma once

#include <gmpxx.h>

#include <string>

namespace floorcount {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt factorial(unsigned long n);

/// Parses a signed decimal integer; throws std::invalid_argument on junk.
BigInt parse_bigint(const std::string& text);

}  // namespace floorcount
