#ifndef MOMILP_RATIONAL_HPP
#define MOMILP_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace momilp {

/// Exact rational scalar. Backed by GMP; always stored in lowest terms with a
/// positive denominator, so equality is syntactic and arithmetic never rounds.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

/// Build a rational from integer numerator/denominator with sign and
/// canonical-form normalisation (safe for negative denominators).
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parse "n", "-n", "n/d" with optional sign on either part.
/// Throws InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Render as "n" or "n/d" in lowest terms, denominator positive.
std::string rational_to_string(const Rational& value);

/// Nearest double, for lossy plot output only.
double rational_to_double(const Rational& value);

/// Floor/ceil to BigInt.
BigInt rational_floor(const Rational& value);
BigInt rational_ceil(const Rational& value);

bool is_integer(const Rational& value);

} // namespace momilp

#endif
