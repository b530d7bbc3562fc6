#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "besselsum/characters.hpp"
#include "besselsum/report.hpp"
#include "besselsum/special.hpp"
#include "besselsum/types.hpp"

/// Truncated series with tail bounds, adaptive quadrature, the
/// functional-equation instances (A_q, Q_q, D_q), and checks of the
/// closed-form Bessel integrals the identities rest on.
namespace besselsum::summation {

/// One evaluated series term and the bound on its evaluation error.
struct Term {
  Complex value{};
  double error = 0.0;
};

enum class TailKind {
  /// tail_bound is a proven upper bound for the truncated remainder.
  Certified,
  /// tail_bound is an a-posteriori estimate from a converging sequence of
  /// smoothed truncations (used where the series converges only
  /// conditionally).
  Estimated,
};

struct TruncatedSum {
  Complex value{};
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
  /// Accumulated evaluation error of the included terms.
  double eval_error = 0.0;
  /// Sum of |term|, the scale for rounding.
  double magnitude = 0.0;
  TailKind tail_kind = TailKind::Certified;

  double total_error() const { return tail_bound + eval_error; }
  Side as_side() const { return {value, total_error(), terms_used, magnitude}; }
};

// ---------------------------------------------------------------------------
// Exponentially decaying single sums.

/// |term(n)| <= constant * n^growth * e^{-decay n} for every n >= 1.
struct ExponentialMajorant {
  double decay = 1.0;
  double constant = 1.0;
  double growth = 0.0;
};

/// Upper bound for sum_{m > n} constant m^growth e^{-decay m}, by comparison
/// with the integral and an upper incomplete gamma estimate. Requires the
/// summand to be decreasing beyond n (the bound is +inf otherwise).
double exponential_tail_bound(const ExponentialMajorant& majorant, std::size_t n);

/// Smallest n with exponential_tail_bound(majorant, n) <= tol.
std::size_t exponential_truncation(const ExponentialMajorant& majorant, double tol);

using TermFn = std::function<Term(std::int64_t n)>;

/// sum_{n >= 1} term(n), truncated where the majorant's tail drops below tol.
TruncatedSum sum_exponential(const TermFn& term, const ExponentialMajorant& majorant, double tol);

// ---------------------------------------------------------------------------
// Double sums over m >= 1, r >= 0.

/// |term(m, r)| <= constant * e^{-decay * m * (r + offset)}, offset > 0.
struct LatticeMajorant {
  double decay = 1.0;
  double offset = 1.0;
  double constant = 1.0;
};

/// Upper bound for the majorant summed over m (r + offset) > cutoff.
double lattice_tail_bound(const LatticeMajorant& majorant, double cutoff);

using LatticeTermFn = std::function<Term(std::int64_t m, std::int64_t r)>;

/// Sums the triangular region m (r + offset) <= T, T chosen so the lattice
/// tail bound is <= tol. terms_used counts (m, r) pairs.
TruncatedSum sum_double_exponential(const LatticeTermFn& term, const LatticeMajorant& majorant,
                                    double tol);

// ---------------------------------------------------------------------------
// Quadrature.

struct QuadratureOptions {
  std::size_t max_subdivisions = 4000;
};

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
struct PanelEstimate {
  double kronrod = 0.0;
  double gauss = 0.0;
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive bisection on [a, b]; the error bound is the summed
/// Kronrod-Gauss discrepancy. Throws BudgetExceeded (carrying the best
/// estimate) if tol is not met within the subdivision budget.
EvalResult<double> quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                              const QuadratureOptions& options = {});

/// Upper bound for Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt, s > 0, x > max(0, s - 1).
double upper_incomplete_gamma_bound(double s, double x);

// ---------------------------------------------------------------------------
// Smoothed truncation of conditionally convergent series.

/// Window w(rho): 1 on [0, 1/4], C-infinity decay to 0 at rho = 1.
double smoothing_window(double rho);

struct SmoothingOptions {
  std::size_t initial_terms = 400;
  std::size_t max_terms = 1638400;
};

/// Appends terms first..last (1-based, inclusive) to out.
using TermBatchFn = std::function<void(std::size_t first, std::size_t last, std::vector<Term>& out)>;

/// S(T) = sum_{n <= T} w(sqrt(n / T)) term(n) for T = T0, 4 T0, 16 T0, ...
/// Stops once |S(T) - S(T/4)| <= tol and no longer growing; that difference is
/// reported as an Estimated tail bound. Throws BudgetExceeded if max_terms is
/// reached first.
TruncatedSum smoothed_sum(const TermBatchFn& terms, double tol, const SmoothingOptions& options = {});

// ---------------------------------------------------------------------------
// Functional equation Gamma(s) phi(s) = Gamma(r - s) psi(r - s).

struct FunctionalEquationInstance {
  std::string name;
  /// Frequencies lambda_n, mu_n (n >= 1), strictly increasing and positive.
  std::function<double(std::int64_t)> lambda;
  std::function<double(std::int64_t)> mu;
  /// Coefficient tables a(1..N), b(1..N).
  std::function<std::vector<Complex>(std::size_t)> a_table;
  std::function<std::vector<Complex>(std::size_t)> b_table;
  double r = 1.0;
  /// Closed form of the residual function Q_q(x).
  std::function<Complex(double q, double x)> q_closed;
  /// Q_0'(x).
  std::function<Complex(double x)> q0_derivative;
  Complex phi_at_zero{};
  /// Abscissa beta > sigma_a^* used by the convergence guard.
  double beta = 1.0;
  /// |a(n)|, |b(n)| <= growth_constant * n^growth_exponent.
  double growth_constant = 1.0;
  double growth_exponent = 1.0;
  /// Upper bound for p * int_N^inf S(u) u^{-p-1} du, S(u) >= sum_{n<=u} |b(n)|;
  /// +inf when that integral diverges.
  std::function<double(double n, double p)> b_tail_moment;
};

inline constexpr double kGuardEpsilon = 1e-6;
inline constexpr double kDefaultSnap = 1e-12;

/// lambda_n = mu_n = pi n, a = b = r_k, r = k/2.
FunctionalEquationInstance rk_instance(int k);
/// lambda_n = mu_n = 2 pi n / sqrt(q), a = d_chi, b = -i tau(chi) d_conj(chi) / sqrt(q), r = 1.
/// chi must be odd and primitive.
FunctionalEquationInstance dchi_instance(const characters::DirichletCharacter& chi);

/// (1/Gamma(q+1)) sum'_{lambda_n <= x} a(n) (x - lambda_n)^q. For q = 0 a
/// term whose lambda_n lies within snap * x of x counts with weight 1/2.
Complex A_q(const FunctionalEquationInstance& instance, double q, double x, double snap = kDefaultSnap);

/// 2 beta - r - 3/2: D_q is only attempted for q at or above this.
double convergence_threshold(const FunctionalEquationInstance& instance);

/// sum_n b(n) mu_n^{-(r+q)} x_n^{(r+q)/2} J_{r+q}(2 sqrt(x_n)), x_n = mu_n x.
/// Uses a certified Bessel-envelope tail bound when the envelope series is
/// summable to tol within reach, and smoothed truncation otherwise.
/// Throws ConvergenceError if q is below the guard, or if q = 0 and x sits on
/// a jump lambda_n.
TruncatedSum D_q(const FunctionalEquationInstance& instance, double q, double x, double tol,
                 double snap = kDefaultSnap, const SmoothingOptions& smoothing = {});

// ---------------------------------------------------------------------------
// Closed-form Bessel integrals.

enum class IntegralCase {
  /// int_0^inf u^{k/4-1/2} J_{k/2-1}(2 pi sqrt(z u)) e^{-pi t u} du
  ///   = z^{k/4-1/2} e^{-pi z/t} / (pi t^{k/2}).
  SingleBessel,
  /// int_0^inf J_nu(2 pi sqrt(n u)) J_nu(2 pi sqrt(z u)) e^{-pi t u} du
  ///   = e^{-pi (n+z)/t} I_nu(2 pi sqrt(n z)/t) / (pi t), nu = k/2 - 1.
  BesselPair,
  /// int_0^inf J_0(4 pi sqrt(z u/q)) e^{-pi t u/q} du = (q/(pi t)) e^{-4 pi z/t}.
  SingleBesselModular,
  /// int_0^inf J_0(4 pi sqrt(n u/q)) J_0(4 pi sqrt(z u/q)) e^{-pi t u/q} du
  ///   = (q/(pi t)) e^{-4 pi (n+z)/t} I_0(8 pi sqrt(n z)/t).
  BesselPairModular,
};

std::string to_string(IntegralCase c);
IntegralCase parse_integral_case(const std::string& name);

struct IntegralParams {
  int k = 2;
  std::int64_t modulus = 3;
  std::int64_t n = 1;
  double z = 0.5;
  double t = 1.0;
  double tol = 1e-10;
};

/// Left side by quadrature (after u = v^2 and truncation at a bounded
/// remainder), right side from the closed form.
IdentityReport verify_integral_closed_form(IntegralCase which, const IntegralParams& params);

}  // namespace besselsum::summation
