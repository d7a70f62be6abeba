#pragma once

#include <gmpxx.h>

#include <string>

namespace p3d {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor path calls canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace p3d
