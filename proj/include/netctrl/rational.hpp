#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace netctrl {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "7", "-3/4", "0.125", "1e-3", "2.5E2". Throws std::invalid_argument
// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace netctrl
