#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace arsss {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& value);

bool is_integer(const Rational& value);

/// "p/q" for non-integers, plain "p" otherwise.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view token);

bool is_prime(std::int64_t n);
/// Smallest prime >= n.
std::int64_t next_prime_at_least(std::int64_t n);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
/// Inverse of a modulo a prime p; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
/// Least non-negative residue.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Checked narrowing of a big integer to int64.
std::int64_t to_int64(const BigInt& value);

}  // namespace arsss
