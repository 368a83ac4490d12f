#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace toricarc {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

std::string to_string(const Int& value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with an optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const IntVector& v);

/// Comma separated integers, e.g. "1,-2,0". Throws ParseError.
IntVector parse_int_vector(std::string_view text);

IntVector make_int_vector(std::initializer_list<long> values);

bool is_nonnegative(const IntVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);

}  // namespace toricarc
