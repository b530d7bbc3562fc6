#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "besselsum/arith.hpp"
#include "besselsum/characters.hpp"
#include "besselsum/numeric.hpp"
#include "besselsum/summation.hpp"

namespace sm = besselsum::summation;
using besselsum::Complex;
using besselsum::kPi;

TEST(SumExponential, GeometricSeries) {
  const auto sum = sm::sum_exponential([](std::int64_t n) { return sm::Term{std::exp(-static_cast<double>(n)), 0.0}; },
                                       {1.0, 1.0, 0.0}, 1e-12);
  EXPECT_NEAR(sum.value.real(), 1.0 / (std::exp(1.0) - 1.0), 1e-12);
  EXPECT_LE(sum.tail_bound, 1e-12);
  EXPECT_EQ(sum.tail_kind, sm::TailKind::Certified);
}

TEST(SumExponential, SumOfTwoSquaresTheta) {
  const auto table = besselsum::arith::rk_table(2, 400);
  auto term = [&](std::int64_t n) {
    return sm::Term{static_cast<double>(table.exact(static_cast<std::size_t>(n))) * std::exp(-kPi * n), 0.0};
  };
  const auto sum = sm::sum_exponential(term, {kPi, 9.0, 1.0}, 1e-10);
  Complex direct = 0.0;
  for (std::int64_t n = 200; n >= 1; --n) direct += term(n).value;
  EXPECT_LE(std::abs(sum.value - direct), 1e-10);
}

TEST(SumExponential, TailBoundCoversObservedRemainder) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> decay(0.05, 3.0);
  std::uniform_real_distribution<double> growth(0.0, 4.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const sm::ExponentialMajorant maj{decay(rng), 1.0, growth(rng)};
    const double omega = phase(rng);
    auto term = [&](std::int64_t n) {
      const double m = std::pow(static_cast<double>(n), maj.growth) * std::exp(-maj.decay * static_cast<double>(n));
      return sm::Term{std::polar(m, omega * static_cast<double>(n)), 0.0};
    };
    const auto sum = sm::sum_exponential(term, maj, 1e-8);
    const std::size_t n = sum.terms_used;
    Complex extra = 0.0;
    for (std::size_t i = 2 * n; i > n; --i) extra += term(static_cast<std::int64_t>(i)).value;
    EXPECT_LE(std::abs(extra), sum.tail_bound * (1 + 1e-12) + 1e-300) << trial;
    EXPECT_LE(sum.tail_bound, 1e-8);
  }
}

TEST(ExponentialTailBound, MonotoneInCutoff) {
  for (const sm::ExponentialMajorant maj : {sm::ExponentialMajorant{1.0, 1.0, 0.0},
                                            sm::ExponentialMajorant{0.3, 81.0, 2.0},
                                            sm::ExponentialMajorant{kPi, 6561.0, 4.0}}) {
    double previous = INFINITY;
    for (std::size_t n = 1; n < 400; ++n) {
      const double bound = sm::exponential_tail_bound(maj, n);
      ASSERT_LE(bound, previous) << n;
      previous = bound;
    }
  }
}

TEST(ExponentialTailBound, NotBelowExactTail) {
  const sm::ExponentialMajorant maj{0.5, 2.0, 1.5};
  for (std::size_t n : {5u, 10u, 40u}) {
    double exact = 0.0;
    for (std::size_t m = 4000; m > n; --m) exact += 2.0 * std::pow(m, 1.5) * std::exp(-0.5 * m);
    EXPECT_GE(sm::exponential_tail_bound(maj, n), exact);
  }
}

TEST(SumExponential, RejectsNonDecaying) {
  EXPECT_THROW(sm::sum_exponential([](std::int64_t) { return sm::Term{}; }, {0.0, 1.0, 0.0}, 1e-9),
               besselsum::DomainError);
}

TEST(UpperIncompleteGamma, DominatesNumericalValue) {
  for (double s : {0.5, 1.0, 2.5, 4.0}) {
    for (double x : {s + 0.5, s + 3.0, 20.0}) {
      const auto value = sm::quadrature(
          [s](double u) { return std::pow(u, s - 1.0) * std::exp(-u); }, x, x + 200.0, 1e-12);
      EXPECT_GE(sm::upper_incomplete_gamma_bound(s, x), value.value - value.abs_error_bound) << s << " " << x;
    }
  }
}

TEST(SumDoubleExponential, InnerGeometricClosedForm) {
  auto term = [](std::int64_t m, std::int64_t r) {
    return sm::Term{std::exp(-static_cast<double>(m) * static_cast<double>(r + 1)), 0.0};
  };
  const auto sum = sm::sum_double_exponential(term, {1.0, 1.0, 1.0}, 1e-10);
  double expected = 0.0;
  for (int m = 200; m >= 1; --m) expected += std::exp(-m) / -std::expm1(-m);
  EXPECT_NEAR(sum.value.real(), expected, 1e-10);
  EXPECT_LE(sum.tail_bound, 1e-10);
}

TEST(SumDoubleExponential, DoublingCutoffStaysWithinTail) {
  const double offset = 2.0 / 7.0;
  auto term = [&](std::int64_t m, std::int64_t r) {
    const double phase = std::sin(static_cast<double>(m * 3 + r));
    return sm::Term{phase * std::exp(-0.9 * static_cast<double>(m) * (static_cast<double>(r) + offset)), 0.0};
  };
  const auto coarse = sm::sum_double_exponential(term, {0.9, offset, 1.0}, 1e-7);
  const auto fine = sm::sum_double_exponential(term, {0.9, offset, 1.0}, 1e-13);
  EXPECT_LE(std::abs(coarse.value - fine.value), coarse.tail_bound + fine.tail_bound);
  EXPECT_GT(fine.terms_used, coarse.terms_used);
}

TEST(LatticeTailBound, RejectsZeroOffset) {
  EXPECT_THROW(sm::lattice_tail_bound({1.0, 0.0, 1.0}, 10.0), besselsum::DomainError);
}

TEST(Quadrature, Exponential) {
  const auto r = sm::quadrature([](double u) { return std::exp(-u); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(r.value, 1.0 - std::exp(-1.0), 1e-13);
  EXPECT_LE(r.abs_error_bound, 1e-13);
}

TEST(Quadrature, PolynomialsExactOnOnePanel) {
  for (int degree = 0; degree <= 13; ++degree) {
    const auto panel = sm::gauss_kronrod_15([degree](double u) { return std::pow(u, degree); }, -0.5, 2.0);
    const double exact = (std::pow(2.0, degree + 1) - std::pow(-0.5, degree + 1)) / (degree + 1);
    EXPECT_NEAR(panel.kronrod, exact, 1e-13 * std::max(1.0, std::abs(exact))) << degree;
    if (degree <= 13) EXPECT_NEAR(panel.gauss, exact, 1e-13 * std::max(1.0, std::abs(exact))) << degree;
  }
}

TEST(Quadrature, SemiInfiniteBesselClosedForms) {
  // J_0 integral against exp weight, mapped to v = sqrt(u) on a truncated range.
  const double z = 0.7;
  const double t = 1.3;
  const auto r = sm::quadrature(
      [&](double v) {
        return 2.0 * v * besselsum::special::bessel_j(0.0, 2.0 * kPi * std::sqrt(z) * v).value * std::exp(-kPi * t * v * v);
      },
      0.0, 6.0, 1e-12);
  EXPECT_NEAR(r.value, std::exp(-kPi * z / t) / (kPi * t), 1e-9);
}

TEST(Quadrature, BudgetExceededCarriesEstimate) {
  sm::QuadratureOptions options;
  options.max_subdivisions = 8;
  try {
    sm::quadrature([](double u) { return std::sin(1.0 / u); }, 1e-4, 1.0, 1e-14, options);
    FAIL() << "expected BudgetExceeded";
  } catch (const besselsum::BudgetExceeded& e) {
    EXPECT_TRUE(std::isfinite(e.estimate()));
    EXPECT_GT(e.error(), 1e-14);
  }
}

TEST(SmoothingWindow, Shape) {
  EXPECT_EQ(sm::smoothing_window(0.0), 1.0);
  EXPECT_EQ(sm::smoothing_window(0.25), 1.0);
  EXPECT_EQ(sm::smoothing_window(1.0), 0.0);
  EXPECT_EQ(sm::smoothing_window(1.5), 0.0);
  double previous = 1.0;
  for (double rho = 0.25; rho <= 1.0; rho += 0.01) {
    const double w = sm::smoothing_window(rho);
    EXPECT_LE(w, previous);
    previous = w;
  }
}

TEST(SmoothedSum, AlternatingHarmonicSeries) {
  auto terms = [](std::size_t first, std::size_t last, std::vector<sm::Term>& out) {
    for (std::size_t n = first; n <= last; ++n) out.push_back({(n % 2 ? 1.0 : -1.0) / static_cast<double>(n), 0.0});
  };
  const auto sum = sm::smoothed_sum(terms, 1e-9);
  EXPECT_EQ(sum.tail_kind, sm::TailKind::Estimated);
  EXPECT_NEAR(sum.value.real(), std::log(2.0), 1e-9);
}

TEST(Instances, SumOfSquaresFields) {
  const auto inst = sm::rk_instance(4);
  EXPECT_DOUBLE_EQ(inst.lambda(3), 3.0 * kPi);
  EXPECT_DOUBLE_EQ(inst.r, 2.0);
  EXPECT_EQ(inst.phi_at_zero, Complex(-1.0, 0.0));
  const auto a = inst.a_table(50);
  const auto b = inst.b_table(50);
  const auto r4 = besselsum::arith::rk_table(4, 50);
  for (std::size_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(a[n - 1], static_cast<double>(r4.exact(n)));
    EXPECT_EQ(b[n - 1], a[n - 1]);
  }
  for (double x : {0.5, 3.0, 17.0}) {
    const double expected = -1.0 + x * x / besselsum::special::gamma_real(3.0).value;
    EXPECT_NEAR(inst.q_closed(0.0, x).real(), expected, 1e-12 * std::abs(expected));
  }
  EXPECT_NEAR(sm::convergence_threshold(inst), 2.0 * (2.0 + sm::kGuardEpsilon) - 2.0 - 1.5, 1e-15);
}

TEST(Instances, TwistedDivisorFields) {
  const auto chi = besselsum::characters::odd_characters(5).front();
  const auto inst = sm::dchi_instance(chi);
  EXPECT_DOUBLE_EQ(inst.lambda(2), 4.0 * kPi / std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(inst.r, 1.0);
  const auto a = inst.a_table(60);
  const auto b = inst.b_table(60);
  const auto d = besselsum::arith::d_chi_table(chi, 60);
  const auto d_bar = besselsum::arith::d_chi_table(chi.conjugate(), 60);
  const Complex factor = Complex(0.0, -1.0) * besselsum::characters::gauss_sum(chi) / std::sqrt(5.0);
  for (std::size_t n = 1; n <= 60; ++n) {
    EXPECT_LT(std::abs(a[n - 1] - d[n]), 1e-14);
    EXPECT_LT(std::abs(b[n - 1] - factor * d_bar[n]), 1e-14);
  }
  const Complex l0 = besselsum::characters::L_zero(chi);
  const Complex l1 = besselsum::characters::L_one(chi);
  const double x = 2.3;
  EXPECT_LT(std::abs(inst.q_closed(0.0, x) - (-0.5 * l0 + std::sqrt(5.0) / (2.0 * kPi) * l1 * x)), 1e-14);
  EXPECT_THROW(sm::dchi_instance(besselsum::characters::enumerate_characters(5).front()), besselsum::DomainError);
}

TEST(RieszMean, HalfWeightAtJumps) {
  const auto inst = sm::rk_instance(2);
  EXPECT_EQ(sm::A_q(inst, 0.0, kPi * 3.5), Complex(8.0, 0.0));
  EXPECT_EQ(sm::A_q(inst, 0.0, kPi * 2.0), Complex(6.0, 0.0));
  EXPECT_EQ(sm::A_q(inst, 0.0, 0.5 * kPi), Complex(0.0, 0.0));
  EXPECT_EQ(sm::A_q(inst, 1.0, 0.5 * kPi), Complex(0.0, 0.0));
}

TEST(RieszMean, JumpEqualsCoefficient) {
  const auto inst = sm::rk_instance(3);
  const auto r3 = besselsum::arith::rk_table(3, 20);
  for (std::int64_t n = 1; n <= 20; ++n) {
    const double x = kPi * static_cast<double>(n);
    const Complex jump = sm::A_q(inst, 0.0, x * (1 + 1e-9)) - sm::A_q(inst, 0.0, x * (1 - 1e-9));
    EXPECT_EQ(jump.real(), static_cast<double>(r3.exact(static_cast<std::size_t>(n)))) << n;
    // Constant on (lambda_n, lambda_{n+1}), so right-continuous at lambda_n.
    EXPECT_EQ(sm::A_q(inst, 0.0, x * (1 + 1e-9)), sm::A_q(inst, 0.0, x + 0.5 * kPi));
  }
}

TEST(RieszMean, FirstOrderMean) {
  const auto inst = sm::rk_instance(2);
  const double x = 2.0 * kPi + 0.3;
  // (x - pi) r_2(1) + (x - 2 pi) r_2(2).
  EXPECT_NEAR(sm::A_q(inst, 1.0, x).real(), 4.0 * (x - kPi) + 4.0 * (x - 2.0 * kPi), 1e-13);
}

TEST(BesselSeries, MatchesRieszMeanAtSafeOrder) {
  const auto inst = sm::rk_instance(2);
  const double x = 2.0;
  const auto d = sm::D_q(inst, 1.0, x, 1e-8);
  const Complex lhs = sm::A_q(inst, 1.0, x) - inst.q_closed(1.0, x);
  EXPECT_LE(std::abs(lhs - d.value), d.total_error() + 1e-12);
}

TEST(BesselSeries, CertifiedEnvelopeTailAtHighOrder) {
  const auto inst = sm::rk_instance(2);
  const double x = 3.7;
  const auto d = sm::D_q(inst, 4.0, x, 1e-8);
  EXPECT_EQ(d.tail_kind, sm::TailKind::Certified);
  EXPECT_LE(d.tail_bound, 1e-8);
  const Complex lhs = sm::A_q(inst, 4.0, x) - inst.q_closed(4.0, x);
  EXPECT_LE(std::abs(lhs - d.value), d.total_error() + 1e-12);
}

TEST(BesselSeries, GuardRefusesDivergentOrder) {
  EXPECT_THROW(sm::D_q(sm::rk_instance(4), 0.0, 7.3, 1e-8), besselsum::ConvergenceError);
  EXPECT_NO_THROW(sm::D_q(sm::rk_instance(4), 1.0, 7.3, 1e-8));
}

TEST(BesselSeries, RefusesJumpAtOrderZero) {
  EXPECT_THROW(sm::D_q(sm::rk_instance(2), 0.0, 2.0 * kPi, 1e-8), besselsum::ConvergenceError);
}

TEST(BesselSeries, ZeroCoefficientsGiveZero) {
  auto inst = sm::rk_instance(2);
  inst.b_table = [](std::size_t n) { return std::vector<Complex>(n, Complex(0.0, 0.0)); };
  inst.b_tail_moment = [](double, double) { return 0.0; };
  const auto d = sm::D_q(inst, 1.0, 3.0, 1e-8);
  EXPECT_EQ(d.value, Complex(0.0, 0.0));
}

class IntegralGrid : public ::testing::TestWithParam<sm::IntegralCase> {};

TEST_P(IntegralGrid, ClosedFormsHoldOnGrid) {
  const sm::IntegralCase which = GetParam();
  const bool modular = which == sm::IntegralCase::SingleBesselModular || which == sm::IntegralCase::BesselPairModular;
  const bool pair = which == sm::IntegralCase::BesselPair || which == sm::IntegralCase::BesselPairModular;
  const std::vector<int> first = modular ? std::vector<int>{3, 5, 7} : std::vector<int>{2, 4, 8};
  for (int a : first) {
    for (double z : {0.3, 0.7, 1.5}) {
      for (double t : {0.8, 1.0, 1.3}) {
        sm::IntegralParams params;
        if (modular) params.modulus = a; else params.k = a;
        params.n = pair ? 2 : 1;
        params.z = z;
        params.t = t;
        const auto report = sm::verify_integral_closed_form(which, params);
        EXPECT_TRUE(report.pass) << sm::to_string(which) << " " << a << " " << z << " " << t;
        EXPECT_LE(report.residual, 1e-8);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllCases, IntegralGrid,
                         ::testing::Values(sm::IntegralCase::SingleBessel, sm::IntegralCase::BesselPair,
                                           sm::IntegralCase::SingleBesselModular,
                                           sm::IntegralCase::BesselPairModular),
                         [](const auto& info) {
                           std::string name = sm::to_string(info.param);
                           std::erase(name, '-');
                           return name;
                         });

TEST(IntegralCase, NamesRoundTrip) {
  for (auto c : {sm::IntegralCase::SingleBessel, sm::IntegralCase::BesselPair,
                 sm::IntegralCase::SingleBesselModular, sm::IntegralCase::BesselPairModular}) {
    EXPECT_EQ(sm::parse_integral_case(sm::to_string(c)), c);
  }
  EXPECT_THROW(sm::parse_integral_case("nope"), besselsum::DomainError);
}
