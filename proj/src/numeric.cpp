#include "arsss/numeric.hpp"

#include <cmath>
#include <limits>

#include "arsss/error.hpp"

namespace arsss {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double log2_big(const BigInt& value) {
  if (value <= 0) {
    throw Error(ErrorCode::BadParams, "log2 of a non-positive integer");
  }
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) {
    return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  }
  const std::size_t shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift);
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view token) {
  auto parse_int = [&](std::string_view text) {
    if (text.empty()) {
      throw Error(ErrorCode::ParseError, "empty number in '" + std::string(token) + "'");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(token) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw Error(ErrorCode::ParseError, "bad number '" + std::string(token) + "'");
      }
    }
    return BigInt(std::string(text[0] == '+' ? text.substr(1) : text));
  };
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(token));
  }
  const BigInt num = parse_int(token.substr(0, slash));
  const BigInt den = parse_int(token.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(token) + "'");
  }
  return Rational(num, den);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t next_prime_at_least(std::int64_t n) {
  std::int64_t candidate = std::max<std::int64_t>(n, 2);
  while (!is_prime(candidate)) {
    ++candidate;
  }
  return candidate;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1;
  __int128 b = mod_floor(base, mod);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod_floor(a, p);
  if (r == 0) {
    throw Error(ErrorCode::Singular, "zero has no modular inverse");
  }
  return mod_pow(r, p - 2, p);
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::TooLarge, "integer " + value.str() + " exceeds 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace arsss
