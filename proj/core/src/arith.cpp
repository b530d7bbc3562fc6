#include "besselsum/arith.hpp"

#include <algorithm>
#include <cmath>

#include "besselsum/numeric.hpp"

namespace besselsum::arith {

std::string to_string(ExactInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

ArithmeticSequence ArithmeticSequence::sum_of_squares(int k, ExactInt at_zero,
                                                      std::vector<ExactInt> values) {
  ArithmeticSequence seq;
  seq.kind_ = SequenceKind::SumOfSquares;
  seq.parameter_ = k;
  seq.label_ = "r_" + std::to_string(k);
  seq.exact_ = true;
  seq.at_zero_ = at_zero;
  seq.exact_values_ = std::move(values);
  return seq;
}

ArithmeticSequence ArithmeticSequence::complex_valued(SequenceKind kind, std::string label,
                                                      std::vector<Complex> values) {
  ArithmeticSequence seq;
  seq.kind_ = kind;
  seq.label_ = std::move(label);
  seq.complex_values_ = std::move(values);
  return seq;
}

ExactInt ArithmeticSequence::exact(std::size_t n) const {
  if (!exact_) throw DomainError("sequence " + label_ + " has no exact values");
  if (n == 0) return at_zero_;
  if (n > exact_values_.size()) throw DomainError("index beyond table length");
  return exact_values_[n - 1];
}

Complex ArithmeticSequence::operator[](std::size_t n) const {
  if (exact_) return Complex(static_cast<double>(exact(n)));
  if (n == 0 || n > complex_values_.size()) throw DomainError("index outside 1..size()");
  return complex_values_[n - 1];
}

ArithmeticSequence rk_table(int k, std::size_t n_max) {
  if (k < 1) throw DomainError("rk_table: k must be at least 1");
  if (n_max < 1) throw DomainError("rk_table: n_max must be at least 1");
  // Every partial sum is bounded by the total lattice count (2 sqrt(N) + 1)^k.
  const double log2_bound = k * std::log2(2.0 * std::sqrt(static_cast<double>(n_max)) + 1.0);
  if (log2_bound >= 125.0) throw OverflowError("rk_table: values may exceed 128-bit range");

  const std::size_t len = n_max + 1;
  std::vector<ExactInt> current(len, 0);
  for (std::size_t m = 0; m * m < len; ++m) current[m * m] = (m == 0) ? 1 : 2;

  std::vector<ExactInt> next(len);
  for (int step = 1; step < k; ++step) {
    std::copy(current.begin(), current.end(), next.begin());
    for (std::size_t m = 1; m * m < len; ++m) {
      const std::size_t shift = m * m;
      for (std::size_t n = shift; n < len; ++n) next[n] += 2 * current[n - shift];
    }
    current.swap(next);
  }
  const ExactInt at_zero = current[0];
  current.erase(current.begin());
  return ArithmeticSequence::sum_of_squares(k, at_zero, std::move(current));
}

namespace {

std::int64_t count_representations(int k, std::int64_t n) {
  if (k == 1) {
    if (n == 0) return 1;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return root * root == n ? 2 : 0;
  }
  std::int64_t total = count_representations(k - 1, n);
  for (std::int64_t a = 1; a * a <= n; ++a) total += 2 * count_representations(k - 1, n - a * a);
  return total;
}

}  // namespace

std::int64_t rk_bruteforce(int k, std::int64_t n) {
  if (k < 1 || k > 8) throw DomainError("rk_bruteforce: requires 1 <= k <= 8");
  if (n < 0 || n > 10000) throw DomainError("rk_bruteforce: requires 0 <= n <= 10^4");
  return count_representations(k, n);
}

ArithmeticSequence d_chi_table(const characters::DirichletCharacter& chi, std::size_t n_max) {
  if (n_max < 1) throw DomainError("d_chi_table: n_max must be at least 1");
  std::vector<Complex> values(n_max, Complex(0.0));
  for (std::size_t d = 1; d <= n_max; ++d) {
    const Complex c = chi(static_cast<std::int64_t>(d));
    if (c == Complex(0.0)) continue;
    for (std::size_t m = d; m <= n_max; m += d) values[m - 1] += c;
  }
  return ArithmeticSequence::complex_valued(
      SequenceKind::TwistedDivisor,
      "d_chi[q=" + std::to_string(chi.modulus()) + ",j=" + std::to_string(chi.index()) + "]",
      std::move(values));
}

double sine_divisor_sum(std::int64_t n, const Rational& theta) {
  if (n < 1) throw DomainError("sine_divisor_sum: n must be positive");
  if (theta.num <= 0 || theta.num >= theta.den) {
    throw DomainError("sine_divisor_sum: theta must lie in (0, 1)");
  }
  const std::int64_t q = theta.den;
  double sum = 0.0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += sin_2pi_fraction(d % q * theta.num % q, q);
    const std::int64_t e = n / d;
    if (e != d) sum += sin_2pi_fraction(e % q * theta.num % q, q);
  }
  return sum;
}

std::int64_t divisor_count(std::int64_t n) {
  if (n < 1) throw DomainError("divisor_count: n must be positive");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

double rk_summatory_bound(int k, double u) {
  const double radius = std::sqrt(u) + 0.5 * std::sqrt(static_cast<double>(k));
  const double half_k = 0.5 * k;
  const double unit_ball = std::pow(kPi, half_k) / std::tgamma(half_k + 1.0);
  return unit_ball * std::pow(radius, k);
}

}  // namespace besselsum::arith
