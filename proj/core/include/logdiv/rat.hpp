#pragma once

#include <gmpxx.h>

#include <string>

namespace logdiv {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator
/// (GMP keeps arithmetic results canonical; inputs are canonicalized on parse).
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" with arbitrary-precision parts. Throws InputError
/// on malformed text or zero denominator.
Rat rat_from_string(const std::string& s);

/// "p" for integers, "p/q" otherwise; '-' bound to the numerator.
std::string rat_to_string(const Rat& r);

bool is_integer(const Rat& r);

/// Exact conversion; throws MathError("not-an-integer") if r has denominator > 1.
Int rat_to_int(const Rat& r);

Int binomial(unsigned n, unsigned k);

Rat rat_pow(const Rat& base, unsigned e);

} // namespace logdiv
