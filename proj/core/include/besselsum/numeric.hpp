#pragma once

#include <cstdint>
#include <limits>
#include <numbers>

#include "besselsum/types.hpp"

namespace besselsum {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// sin(2*pi*p/q) with exact zeros and unit values, and exact oddness
/// sin(2*pi*(q-p)/q) == -sin(2*pi*p/q).
double sin_2pi_fraction(std::int64_t p, std::int64_t q);

/// cos(2*pi*p/q) with the same exactness guarantees as sin_2pi_fraction.
double cos_2pi_fraction(std::int64_t p, std::int64_t q);

/// e^{2*pi*i*p/q}.
inline Complex root_of_unity(std::int64_t p, std::int64_t q) {
  return {cos_2pi_fraction(p, q), sin_2pi_fraction(p, q)};
}

/// cot(pi*p/q) for p not divisible by q; exactly 0 when 2p == q (mod 2q).
double cot_pi_fraction(std::int64_t p, std::int64_t q);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace besselsum
