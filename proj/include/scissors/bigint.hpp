#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace scissors {

using Int = mpz_class;

std::string to_string(const Int& x);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Int parse_int(std::string_view text);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Nearest integer to a/b, ties going toward negative infinity.
Int round_half_down(const Int& a, const Int& b);

/// Non-negative gcd.
Int gcd(const Int& a, const Int& b);

bool divides(const Int& d, const Int& a);

/// Rational primality. Deterministic trial division below 10^12, GMP's
/// strong probabilistic test above.
bool is_rational_prime(const Int& n);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

/// d with every factor 2 removed; 0 stays 0.
Int strip_two(const Int& d);

/// True when |d| is a power of two (including 1).
bool is_two_power(const Int& d);

std::int64_t to_i64(const Int& x);

}  // namespace scissors
