#pragma once

#include "besselsum/types.hpp"

/// Gamma, J_nu and exponentially scaled I_nu with error bounds on the
/// truncation of their series/asymptotic expansions.
///
/// Ascending series are accumulated in extended precision, so a J series at
/// the switch point (where the largest term is ~10^11 times the result) still
/// carries the result to full binary64 accuracy. The reported bounds include
/// the cancellation loss of that accumulation.
namespace besselsum::special {

/// Arguments above which the large-argument expansions are used.
struct SwitchPoints {
  double bessel_j = 30.0;
  double bessel_i = 30.0;
};

/// Process-wide switch points used when none are passed explicitly. Set
/// before evaluation starts; reads are lock-free.
SwitchPoints default_switch_points();
void set_default_switch_points(const SwitchPoints& switches);

/// Gamma(x) for x > 0.
EvalResult<double> gamma_real(double x);

/// J_nu(x) for nu >= 0, x >= 0.
EvalResult<double> bessel_j(double nu, double x, const SwitchPoints& switches = default_switch_points());
EvalResult<double> bessel_j_series(double nu, double x);
/// Hankel expansion, truncated at its smallest term. Requires x > 0.
EvalResult<double> bessel_j_asymptotic(double nu, double x);

/// e^{-Re w} I_nu(w) for nu >= 0 and Re w >= 0.
EvalResult<Complex> bessel_i_scaled(double nu, Complex w, const SwitchPoints& switches = default_switch_points());
EvalResult<Complex> bessel_i_scaled_series(double nu, Complex w);
/// Large-|w| expansion with coefficients (nu, m), truncated at the smallest
/// term; the bound also covers the exponentially small e^{-w} companion.
EvalResult<Complex> bessel_i_scaled_asymptotic(double nu, Complex w);

/// (nu, m) = Gamma(nu + m + 1/2) / (m! Gamma(nu - m + 1/2)), via the
/// finite product prod_{j<=m} (4 nu^2 - (2j-1)^2) / (4^m m!).
double hankel_coefficient(double nu, int m);

/// Upper bound for |J_nu(y)|, nu >= 0, y >= 0 (Krasikov's uniform bound
/// where it applies, 1 elsewhere).
double bessel_j_envelope(double nu, double y);

/// kappa >= 1 with |J_nu(y)| <= kappa sqrt(2/(pi y)) for all y >= y_min.
double bessel_j_envelope_constant(double nu, double y_min);

}  // namespace besselsum::special
