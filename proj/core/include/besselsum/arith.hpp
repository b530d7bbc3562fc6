#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "besselsum/characters.hpp"
#include "besselsum/types.hpp"

/// Exact arithmetic coefficient tables: r_k(n), d_chi(n), and twisted
/// divisor sine sums.
namespace besselsum::arith {

using ExactInt = __int128;

std::string to_string(ExactInt value);

enum class SequenceKind { SumOfSquares, TwistedDivisor, Custom };

/// Dense coefficient table indexed 1..size(). Sums-of-squares tables hold
/// exact integers and keep the n = 0 value separately; twisted divisor
/// tables hold complex values.
class ArithmeticSequence {
 public:
  static ArithmeticSequence sum_of_squares(int k, ExactInt at_zero, std::vector<ExactInt> values);
  static ArithmeticSequence complex_valued(SequenceKind kind, std::string label,
                                           std::vector<Complex> values);

  SequenceKind kind() const { return kind_; }
  /// k for sums of squares, 0 otherwise.
  int parameter() const { return parameter_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return exact_ ? exact_values_.size() : complex_values_.size(); }
  bool is_exact() const { return exact_; }

  /// Coefficient at n = 0 (only meaningful for exact tables).
  ExactInt at_zero() const { return at_zero_; }
  /// Exact coefficient, 0 <= n <= size(). Requires is_exact().
  ExactInt exact(std::size_t n) const;
  /// Coefficient as a complex number, 1 <= n <= size() (n = 0 allowed for
  /// exact tables).
  Complex operator[](std::size_t n) const;

  std::span<const ExactInt> exact_values() const { return exact_values_; }
  std::span<const Complex> complex_values() const { return complex_values_; }

 private:
  ArithmeticSequence() = default;

  SequenceKind kind_ = SequenceKind::Custom;
  int parameter_ = 0;
  std::string label_;
  bool exact_ = false;
  ExactInt at_zero_ = 0;
  std::vector<ExactInt> exact_values_;
  std::vector<Complex> complex_values_;
};

/// r_k(n) for 1 <= n <= n_max by k-fold convolution of the one-square
/// sequence. Throws OverflowError if 128-bit integers could overflow.
ArithmeticSequence rk_table(int k, std::size_t n_max);

/// Number of integer k-tuples with squared norm n, by direct recursion.
/// Oracle scale only: k <= 8, n <= 10^4.
std::int64_t rk_bruteforce(int k, std::int64_t n);

/// d_chi(n) = sum over d | n of chi(d), by sieving over d.
ArithmeticSequence d_chi_table(const characters::DirichletCharacter& chi, std::size_t n_max);

/// sum over d | n of sin(2 pi d theta), with theta an exact fraction in (0, 1).
double sine_divisor_sum(std::int64_t n, const Rational& theta);

/// Number of positive divisors of n.
std::int64_t divisor_count(std::int64_t n);

/// Upper bound for sum_{1 <= n <= u} r_k(n): lattice points in the ball of
/// radius sqrt(u) + sqrt(k)/2 cover the unit cubes of all counted points.
double rk_summatory_bound(int k, double u);

}  // namespace besselsum::arith
