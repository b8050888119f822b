#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gf2lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer "p", or a decimal "0.375" into an exact rational.
/// Throws InvalidArgument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

BigInt from_int128(__int128 v);

/// 2^e as an exact rational; e may be negative.
Rational pow2(std::int64_t e);

/// r^e for e >= 0.
Rational pow(const Rational& r, unsigned e);
BigInt pow(const BigInt& b, unsigned e);

/// If r is a positive integral power of two 2^e (e may be negative), returns
/// true and writes e.
bool exact_log2(const Rational& r, std::int64_t& e);

} // namespace gf2lab
