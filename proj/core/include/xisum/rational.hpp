#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "xisum/errors.hpp"

namespace xisum {

// Arbitrary-precision signed integer. Values produced by this library are
// canonical by construction (GMP keeps no leading-zero limbs) and the
// combinatorial quantities are non-negative.
using BigInt = mpz_class;

// Exact fraction, kept in lowest terms with positive denominator.
// Arithmetic through mpq preserves canonical form; construction goes
// through make_rational which canonicalizes explicitly.
using Rational = mpq_class;

// num/den reduced to lowest terms, den forced positive.
// Throws domain_error when den == 0.
Rational make_rational(BigInt num, BigInt den);

// Accepts "p", "p/q", optional leading '-'. Result canonical.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering, denominator always explicit ("2" -> "2/1").
std::string to_fraction_string(const Rational& value);

// base^exp over Q with 0^0 = 1. Throws domain_error on 0^negative.
Rational pow_rational(const Rational& base, std::int64_t exp);

// base^exp over Z, exp >= 0.
BigInt pow_big(const BigInt& base, std::uint64_t exp);

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Nearest-double conversion (through GMP).
double to_double(const Rational& value);

// Exact rational equal to the given double (doubles are dyadic rationals).
// Throws domain_error for non-finite input.
Rational rational_from_double(double value);

// |approx - exact| / |exact| as an exact rational; exact must be nonzero.
Rational exact_relative_error(double approx, const Rational& exact);

}  // namespace xisum
