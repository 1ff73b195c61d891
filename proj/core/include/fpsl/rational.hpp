#pragma once

#include <gmpxx.h>

#include <string>

namespace fpsl {

// Exact rational backed by GMP; arithmetic results are always canonical.
// Rat(num, den) does not reduce; use rat() for values that may not be in lowest terms.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Accepts "a", "a/b", "-a/b"; throws Error(Config) on malformed input.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

// Integer power with negative exponents allowed; 0^0 = 1.
Rat pow_int(const Rat& base, long e);

Int factorial(unsigned n);
Int binomial(long n, long k);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_unit(const Rat& r) { return sgn(r) != 0; }
inline Rat unit_inverse(const Rat& r) { return Rat(1) / r; }

} // namespace fpsl
