#pragma once

#include <gmpxx.h>

#include <string>

namespace hermspec {

/// Arbitrary-precision integer. Characteristic-polynomial coefficients
/// overflow 64 bits well before n = 20 vertices, so every exact ring in
/// this library is built on top of this type.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace hermspec
