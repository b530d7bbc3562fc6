#pragma once

#include <cstdint>
#include <vector>

#include "besselsum/characters.hpp"
#include "besselsum/report.hpp"
#include "besselsum/summation.hpp"
#include "besselsum/types.hpp"

/// Both sides of each identity, evaluated independently, with their error
/// budgets. All ops throw DomainError on parameters outside their
/// hypotheses.
namespace besselsum::identities {

inline constexpr double kDefaultTol = 1e-9;

/// Sum over r_k(n) J_{k/2-1}(2 pi sqrt(n z)) e^{-pi n t} against its I-Bessel
/// transform at 1/t. k >= 2, z >= 0, Re t > 0.
IdentityReport popov(int k, double z, Complex t, double tol = kDefaultTol);

/// sum_{n>=0} r_k(n) e^{-pi n y} = y^{-k/2} sum_{n>=0} r_k(n) e^{-pi n / y}.
/// k >= 1, Re y > 0.
IdentityReport theta(int k, Complex y, double tol = kDefaultTol);

/// A_q(x) against Q_q(x) + D_q(x). Propagates ConvergenceError from D_q.
IdentityReport cn(const summation::FunctionalEquationInstance& instance, double q, double x,
                  double tol = kDefaultTol, ParamList extra_params = {},
                  double snap = summation::kDefaultSnap);

/// Summation formula with test function f(pi u) = e^{-pi s u}:
///   sum'_{n <= x} r_k(n) e^{-pi n s} = -1 + main integral + Bessel series.
/// k >= 2, s > 0, x > 0 and not an integer.
IdentityReport voronoi(int k, double s, double x, double tol = kDefaultTol);

/// Divisor sum d_chi(n) against J_0 for an odd primitive character.
IdentityReport odd_char(const characters::DirichletCharacter& chi, double z, Complex t,
                        double tol = kDefaultTol);

/// Twisted sine divisor sums against the (m, r) lattice of I_0 terms.
/// 0 < theta < 1, z > 0, Re t > 0.
IdentityReport sine(const Rational& theta, double z, Complex t, double tol = kDefaultTol);

/// Character-average reduction from the odd-character identity to the sine
/// identity at theta = a/q. Returns four reports, distinguished by their
/// "part" parameter: "lhs" (character-averaged left sides against the sine
/// divisor left side), "l0" (averaged L(0) term against cot(pi a/q)/2),
/// "l1" (averaged L(1) term against pi (1/2 - a/q)), and "iseries" (averaged
/// I_0 series against its (m, r) rearrangement).
std::vector<IdentityReport> character_reduction(std::int64_t q, std::int64_t a, double z, Complex t,
                                                double tol = kDefaultTol);

}  // namespace besselsum::identities
