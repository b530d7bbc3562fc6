#include <gtest/gtest.h>

#include <cmath>

#include "besselsum/numeric.hpp"
#include "besselsum/special.hpp"

namespace bs = besselsum::special;
using besselsum::Complex;
using besselsum::kPi;

namespace {

struct JReference {
  double nu;
  double x;
  double value;
};
struct IReference {
  double nu;
  double w_re;
  double w_im;
  double value_re;
  double value_im;
};

#include "special_reference_values.inc"

}  // namespace

TEST(Gamma, ClosedForms) {
  EXPECT_DOUBLE_EQ(bs::gamma_real(1.0).value, 1.0);
  EXPECT_NEAR(bs::gamma_real(0.5).value / std::sqrt(kPi), 1.0, 1e-14);
  EXPECT_NEAR(bs::gamma_real(2.5).value / (0.75 * std::sqrt(kPi)), 1.0, 1e-14);
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    EXPECT_NEAR(bs::gamma_real(n).value / factorial, 1.0, 1e-14) << n;
    factorial *= n;
  }
  EXPECT_THROW(bs::gamma_real(0.0), besselsum::DomainError);
  EXPECT_THROW(bs::gamma_real(-1.5), besselsum::DomainError);
}

TEST(Gamma, AgreesWithLibm) {
  for (double x = 0.05; x < 40.0; x += 0.173) {
    const auto g = bs::gamma_real(x);
    EXPECT_NEAR(g.value / std::tgamma(x), 1.0, 1e-13) << x;
  }
}

TEST(BesselJ, ReferenceValues) {
  for (const auto& ref : kJReference) {
    const auto j = bs::bessel_j(ref.nu, ref.x);
    EXPECT_NEAR(j.value, ref.value, 2e-15 + 2.0 * j.abs_error_bound) << ref.nu << " " << ref.x;
    EXPECT_LE(j.abs_error_bound, 1e-12) << ref.nu << " " << ref.x;
  }
}

TEST(BesselJ, Examples) {
  EXPECT_EQ(bs::bessel_j(0.0, 0.0).value, 1.0);
  EXPECT_NEAR(bs::bessel_j(0.5, kPi).value, 0.0, 1e-15);
  EXPECT_NEAR(bs::bessel_j(0.0, 2.404825557695773).value, 0.0, 1e-12);
  EXPECT_THROW(bs::bessel_j(-0.5, 1.0), besselsum::DomainError);
  EXPECT_THROW(bs::bessel_j(0.0, -1.0), besselsum::DomainError);
}

TEST(BesselJ, BoundedByOne) {
  int count = 0;
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 7.5, 15.0, 31.0}) {
    for (int i = 0; i < 1200; ++i) {
      const double x = 0.05 * i;
      const auto j = bs::bessel_j(nu, x);
      ASSERT_LE(std::abs(j.value) - j.abs_error_bound, 1.0) << nu << " " << x;
      ++count;
    }
  }
  EXPECT_GE(count, 10000);
}

TEST(BesselJ, HalfOrderClosedForm) {
  for (double x = 0.1; x <= 30.0; x += 0.0371) {
    EXPECT_NEAR(bs::bessel_j(0.5, x).value * std::sqrt(kPi * x / 2.0), std::sin(x), 1e-12) << x;
  }
}

TEST(BesselJ, BranchConsistency) {
  for (double nu : {0.0, 0.5, 1.0, 3.0}) {
    for (double x = 25.0; x <= 40.0; x += 0.5) {
      const auto series = bs::bessel_j_series(nu, x);
      const auto asymptotic = bs::bessel_j_asymptotic(nu, x);
      EXPECT_LE(std::abs(series.value - asymptotic.value),
                series.abs_error_bound + asymptotic.abs_error_bound + 1e-15)
          << nu << " " << x;
    }
  }
}

TEST(BesselJ, Recurrence) {
  for (double nu : {1.0, 1.5, 2.0, 3.5, 6.0}) {
    for (double x : {0.3, 2.0, 7.7, 19.0, 29.5, 31.0, 55.0, 120.0}) {
      const auto lo = bs::bessel_j(nu - 1.0, x);
      const auto mid = bs::bessel_j(nu, x);
      const auto hi = bs::bessel_j(nu + 1.0, x);
      const double scale = 2.0 * nu / x;
      const double bound = lo.abs_error_bound + hi.abs_error_bound + scale * mid.abs_error_bound +
                           8.0 * besselsum::kEps * (std::abs(lo.value) + std::abs(hi.value) + scale * std::abs(mid.value));
      EXPECT_LE(std::abs(lo.value + hi.value - scale * mid.value), bound) << nu << " " << x;
    }
  }
}

TEST(BesselJ, SeriesDoublingConsistency) {
  for (double nu : {0.0, 2.5}) {
    for (double x : {1.0, 10.0, 29.0}) {
      const auto a = bs::bessel_j(nu, x);
      const auto b = bs::bessel_j_series(nu, x);
      EXPECT_LE(std::abs(a.value - b.value), a.abs_error_bound + b.abs_error_bound + 1e-16);
    }
  }
}

TEST(BesselJ, ConfigurableSwitchPoint) {
  const bs::SwitchPoints early{10.0, 30.0};
  const auto series = bs::bessel_j(1.0, 20.0);
  const auto asymptotic = bs::bessel_j(1.0, 20.0, early);
  EXPECT_LE(std::abs(series.value - asymptotic.value), series.abs_error_bound + asymptotic.abs_error_bound + 1e-15);
  EXPECT_GT(asymptotic.abs_error_bound, 0.0);
}

TEST(BesselIScaled, ReferenceValues) {
  for (const auto& ref : kIScaledReference) {
    const auto v = bs::bessel_i_scaled(ref.nu, Complex(ref.w_re, ref.w_im));
    const Complex expected(ref.value_re, ref.value_im);
    EXPECT_LE(std::abs(v.value - expected), 4e-15 + 2.0 * v.abs_error_bound) << ref.nu << " " << ref.w_re;
  }
}

TEST(BesselIScaled, Examples) {
  EXPECT_EQ(bs::bessel_i_scaled(0.0, 0.0).value, Complex(1.0, 0.0));
  for (double w : {1e3, 1e4, 1e6}) {
    EXPECT_NEAR(bs::bessel_i_scaled(0.0, w).value.real() * std::sqrt(2.0 * kPi * w), 1.0, 1.0 / w);
  }
  EXPECT_THROW(bs::bessel_i_scaled(0.0, Complex(-1.0, 0.0)), besselsum::DomainError);
}

TEST(BesselIScaled, RealOrderZeroBoundsAndMonotone) {
  double previous = 1.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = 0.025 * i;
    const double v = bs::bessel_i_scaled(0.0, x).value.real();
    ASSERT_GT(v, 0.0) << x;
    ASSERT_LE(v, 1.0) << x;
    ASSERT_LE(v, previous + 1e-15) << x;
    previous = v;
  }
}

TEST(BesselIScaled, BranchConsistency) {
  for (double nu : {0.0, 0.5, 1.0, 3.0}) {
    for (double r = 30.0; r <= 60.0; r += 2.5) {
      for (double angle : {0.0, 0.4, 1.0, 1.4}) {
        const Complex w = std::polar(r, angle);
        const auto series = bs::bessel_i_scaled_series(nu, w);
        const auto asymptotic = bs::bessel_i_scaled_asymptotic(nu, w);
        EXPECT_LE(std::abs(series.value - asymptotic.value),
                  series.abs_error_bound + asymptotic.abs_error_bound + 1e-15)
            << nu << " " << w;
      }
    }
  }
  const auto series = bs::bessel_i_scaled_series(0.0, 50.0);
  const auto asymptotic = bs::bessel_i_scaled_asymptotic(0.0, 50.0);
  EXPECT_LE(std::abs(series.value - asymptotic.value), 1e-10);
}

TEST(BesselIScaled, HalfOrderClosedForm) {
  // e^{-x} I_{1/2}(x) = (1 - e^{-2x}) / sqrt(2 pi x).
  for (double x = 0.1; x <= 80.0; x += 0.37) {
    const double expected = -std::expm1(-2.0 * x) / std::sqrt(2.0 * kPi * x);
    EXPECT_NEAR(bs::bessel_i_scaled(0.5, x).value.real(), expected, 1e-14) << x;
  }
}

TEST(BesselIScaled, Recurrence) {
  // I_{nu-1}(w) - I_{nu+1}(w) = (2 nu / w) I_nu(w), same scaling on every term.
  for (double nu : {1.0, 2.5, 4.0}) {
    for (Complex w : {Complex(0.7, 0.2), Complex(12.0, -3.0), Complex(35.0, 10.0), Complex(90.0, 1.0)}) {
      const auto lo = bs::bessel_i_scaled(nu - 1.0, w);
      const auto mid = bs::bessel_i_scaled(nu, w);
      const auto hi = bs::bessel_i_scaled(nu + 1.0, w);
      const Complex scale = 2.0 * nu / w;
      const double bound = lo.abs_error_bound + hi.abs_error_bound + std::abs(scale) * mid.abs_error_bound +
                           16.0 * besselsum::kEps * (std::abs(lo.value) + std::abs(hi.value));
      EXPECT_LE(std::abs(lo.value - hi.value - scale * mid.value), bound) << nu << " " << w;
    }
  }
}

TEST(HankelCoefficient, Values) {
  EXPECT_DOUBLE_EQ(bs::hankel_coefficient(0.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(bs::hankel_coefficient(0.0, 1), -1.0 / 4.0);
  // (nu, m) vanishes for half-integer nu once m > nu - 1/2.
  EXPECT_EQ(bs::hankel_coefficient(0.5, 1), 0.0);
  EXPECT_EQ(bs::hankel_coefficient(2.5, 3), 0.0);
}

TEST(BesselJEnvelope, DominatesSamples) {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    for (double y = 0.0; y < 200.0; y += 0.113) {
      ASSERT_LE(std::abs(bs::bessel_j(nu, y).value), bs::bessel_j_envelope(nu, y) * (1 + 1e-12)) << nu << " " << y;
    }
    const double kappa = bs::bessel_j_envelope_constant(nu, 1.0);
    for (double y = 1.0; y < 200.0; y += 0.0917) {
      ASSERT_LE(std::abs(bs::bessel_j(nu, y).value), kappa * std::sqrt(2.0 / (kPi * y)) * (1 + 1e-12));
    }
  }
}
