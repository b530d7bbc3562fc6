#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace besselsum {

using Complex = std::complex<double>;

/// Argument outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series cannot be certified at the requested parameters
/// (convergence guard violated, or a bounded-only summation point).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer representation would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Adaptive evaluation ran out of its work budget before reaching the
/// requested tolerance. Carries the best estimate obtained.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Exact fraction num/den with den > 0, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  static Rational parse(const std::string& text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Value with a bound on its truncation/approximation error.
template <class T>
struct EvalResult {
  T value{};
  double abs_error_bound = 0.0;
};

}  // namespace besselsum
