#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zzc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "3/2" or "-10/4" into a normalized rational.
/// Throws Error(ParseError) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3" for integers, "3/2" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace zzc
