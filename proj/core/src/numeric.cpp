#include "besselsum/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace besselsum {
namespace {

std::int64_t floor_mod(std::int64_t p, std::int64_t q) {
  std::int64_t r = p % q;
  return r < 0 ? r + q : r;
}

// sin(2*pi*p/q) for 0 <= p <= q/4 (scaled: 4p <= q).
double sin_first_quadrant(std::int64_t p, std::int64_t q) {
  if (p == 0) return 0.0;
  if (4 * p == q) return 1.0;
  return std::sin(2.0 * kPi * static_cast<double>(p) / static_cast<double>(q));
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

double sin_2pi_fraction(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("sin_2pi_fraction: denominator must be positive");
  p = floor_mod(p, q);
  // Reduce to [0, q/2] using sin(2pi - x) = -sin(x).
  if (2 * p > q) return -sin_2pi_fraction(q - p, q);
  if (2 * p == q) return 0.0;
  // [0, q/2): reflect into the first quadrant via sin(pi - x) = sin(x).
  if (4 * p > q) {
    // sin(2pi p/q) = sin(2pi (q/2 - p)/q) = sin(2pi (q - 2p)/(2q)).
    return sin_first_quadrant(q - 2 * p, 2 * q);
  }
  return sin_first_quadrant(p, q);
}

double cos_2pi_fraction(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("cos_2pi_fraction: denominator must be positive");
  // cos(2pi p/q) = sin(2pi (q + 4p)/(4q)).
  p = floor_mod(p, q);
  return sin_2pi_fraction(q + 4 * p, 4 * q);
}

double cot_pi_fraction(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("cot_pi_fraction: denominator must be positive");
  // cot(pi p/q) = cos(2pi p/(2q)) / sin(2pi p/(2q)).
  const double s = sin_2pi_fraction(p, 2 * q);
  if (s == 0.0) throw DomainError("cot_pi_fraction: pole at integer argument");
  const double c = cos_2pi_fraction(p, 2 * q);
  return c / s;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long n = std::stoll(text, &used);
      if (used != text.size()) throw DomainError("trailing characters");
      return make(n, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const long long n = std::stoll(a, &used);
    if (used != a.size()) throw DomainError("trailing characters");
    const long long d = std::stoll(b, &used);
    if (used != b.size()) throw DomainError("trailing characters");
    return make(n, d);
  } catch (const std::logic_error&) {
    throw DomainError("not an exact fraction: '" + text + "'");
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace besselsum
