#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grac {

/// Exact non-negative integer used for derived lengths and positions.
using BigInt = boost::multiprecision::cpp_int;

/// Smallest k with 2^k >= v (0 for v <= 1).
std::size_t ceil_log2(const BigInt& v);
std::size_t ceil_log2(std::uint64_t v);

inline BigInt pow_big(std::uint64_t base, std::size_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Throws Error(parse_error) on anything but a plain non-negative decimal.
BigInt parse_decimal(const std::string& text);

}  // namespace grac
