#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "besselsum/arith.hpp"
#include "besselsum/characters.hpp"

namespace ba = besselsum::arith;
namespace bc = besselsum::characters;

TEST(RkTable, SmallValues) {
  EXPECT_EQ(ba::rk_table(2, 10).exact(5), 8);
  EXPECT_EQ(ba::rk_table(3, 10).exact(7), 0);
  EXPECT_EQ(ba::rk_table(4, 10).exact(1), 8);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(ba::rk_table(k, 3).exact(0), 1) << k;
}

TEST(RkTable, MatchesBruteforce) {
  for (int k = 1; k <= 8; ++k) {
    const auto table = ba::rk_table(k, 200);
    ASSERT_EQ(table.size(), 200u);
    for (std::int64_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(table.exact(static_cast<std::size_t>(n)), ba::rk_bruteforce(k, n)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(RkBruteforce, KnownCounts) {
  EXPECT_EQ(ba::rk_bruteforce(2, 1), 4);
  EXPECT_EQ(ba::rk_bruteforce(2, 3), 0);
  EXPECT_EQ(ba::rk_bruteforce(8, 2), 112);
  EXPECT_EQ(ba::rk_bruteforce(3, 0), 1);
}

TEST(RkTable, ConvolutionConsistency) {
  const std::size_t n_max = 100;
  for (int k1 = 1; k1 <= 4; ++k1) {
    for (int k2 = 1; k2 <= 4; ++k2) {
      const auto a = ba::rk_table(k1, n_max);
      const auto b = ba::rk_table(k2, n_max);
      const auto c = ba::rk_table(k1 + k2, n_max);
      for (std::size_t n = 0; n <= n_max; ++n) {
        ba::ExactInt sum = 0;
        for (std::size_t m = 0; m <= n; ++m) sum += a.exact(m) * b.exact(n - m);
        ASSERT_EQ(sum, c.exact(n)) << k1 << "+" << k2 << " n=" << n;
      }
    }
  }
}

TEST(RkTable, LargeTablesStayExact) {
  const auto table = ba::rk_table(8, 100000);
  // r_8(n) = 16 sum_{d | n} (-1)^{n+d} d^3.
  for (std::int64_t n : {1, 2, 97, 1000, 65536, 99991, 100000}) {
    ba::ExactInt expected = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) expected += (((n + d) % 2 == 0) ? 1 : -1) * static_cast<ba::ExactInt>(d) * d * d;
    }
    EXPECT_EQ(table.exact(static_cast<std::size_t>(n)), 16 * expected) << n;
  }
}

TEST(RkTable, RejectsInvalidArguments) {
  EXPECT_THROW(ba::rk_table(0, 10), besselsum::DomainError);
  EXPECT_THROW(ba::rk_table(2, 0), besselsum::DomainError);
}

TEST(ExactInt, ToString) {
  EXPECT_EQ(ba::to_string(0), "0");
  EXPECT_EQ(ba::to_string(-42), "-42");
  EXPECT_EQ(ba::to_string(static_cast<ba::ExactInt>(1) << 100), "1267650600228229401496703205376");
}

TEST(DChiTable, OddCharacterModFour) {
  const auto table = ba::d_chi_table(bc::odd_character_mod4(), 10);
  EXPECT_NEAR(std::abs(table[5] - besselsum::Complex(2, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(table[2] - besselsum::Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(table[1] - besselsum::Complex(1, 0)), 0.0, 1e-15);
}

TEST(DChiTable, DivisorBoundAndMultiplicativity) {
  for (std::int64_t q : {3, 5, 7, 11}) {
    for (const auto& chi : bc::enumerate_characters(q)) {
      const auto table = ba::d_chi_table(chi, 500);
      for (std::size_t n = 1; n <= 500; ++n) {
        ASSERT_LE(std::abs(table[n]), static_cast<double>(ba::divisor_count(static_cast<std::int64_t>(n))) + 1e-12);
      }
      for (std::size_t m = 1; m <= 500; ++m) {
        for (std::size_t n = 1; m * n <= 500; ++n) {
          if (std::gcd(m, n) != 1) continue;
          ASSERT_LT(std::abs(table[m * n] - table[m] * table[n]), 1e-12) << m << "," << n;
        }
      }
    }
  }
}

TEST(SineDivisorSum, Values) {
  EXPECT_NEAR(ba::sine_divisor_sum(1, besselsum::Rational::make(1, 4)), 1.0, 1e-15);
  EXPECT_NEAR(ba::sine_divisor_sum(2, besselsum::Rational::make(1, 4)), 1.0, 1e-15);
  for (std::int64_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(ba::sine_divisor_sum(n, besselsum::Rational::make(1, 2)), 0.0);
  }
  EXPECT_THROW(ba::sine_divisor_sum(3, besselsum::Rational::make(3, 2)), besselsum::DomainError);
}

TEST(SineDivisorSum, MatchesCharacterDecomposition) {
  for (std::int64_t q : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto odd = bc::odd_characters(q);
    const double phi = static_cast<double>(q - 1);
    for (std::int64_t a = 1; a < q; ++a) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        besselsum::Complex total = 0.0;
        for (std::int64_t d = 1; d <= n; ++d) {
          if (n % d != 0) continue;
          for (const auto& chi : odd) total += chi(a) * bc::gauss_sum(chi.conjugate()) * chi(d);
        }
        total /= besselsum::Complex(0.0, phi);
        const double direct = ba::sine_divisor_sum(n, besselsum::Rational::make(a, q));
        ASSERT_NEAR(total.real(), direct, 1e-11) << q << " " << a << " " << n;
        ASSERT_NEAR(total.imag(), 0.0, 1e-11);
      }
    }
  }
}

TEST(RkSummatoryBound, CoversPartialSums) {
  for (int k : {1, 2, 3, 4, 8}) {
    const auto table = ba::rk_table(k, 2000);
    double partial = 0.0;
    for (std::size_t n = 1; n <= 2000; ++n) {
      partial += static_cast<double>(table.exact(n));
      ASSERT_LE(partial, ba::rk_summatory_bound(k, static_cast<double>(n))) << k << " " << n;
    }
  }
}
