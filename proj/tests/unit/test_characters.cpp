#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "besselsum/characters.hpp"
#include "besselsum/numeric.hpp"

namespace bc = besselsum::characters;
using besselsum::Complex;
using besselsum::kPi;

namespace {
const std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
const std::int64_t kOddPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};
}  // namespace

TEST(Characters, Counts) {
  EXPECT_EQ(bc::enumerate_characters(3).size(), 2u);
  EXPECT_EQ(bc::odd_characters(3).size(), 1u);
  EXPECT_EQ(bc::enumerate_characters(2).size(), 1u);
  EXPECT_EQ(bc::odd_characters(2).size(), 0u);
  EXPECT_EQ(bc::enumerate_characters(5).size(), 4u);
  EXPECT_EQ(bc::odd_characters(5).size(), 2u);
  EXPECT_THROW(bc::enumerate_characters(9), besselsum::DomainError);
}

TEST(Characters, TableInvariants) {
  for (std::int64_t q : kPrimes) {
    for (const auto& chi : bc::enumerate_characters(q)) {
      EXPECT_EQ(chi(1), Complex(1.0, 0.0));
      EXPECT_EQ(chi.is_odd(), std::abs(chi(q - 1) + 1.0) < 1e-12);
      EXPECT_EQ(chi.is_primitive(), !chi.is_principal());
      for (std::int64_t n = 0; n < q; ++n) {
        if (std::gcd(n, q) > 1) {
          EXPECT_EQ(chi(n), Complex(0.0, 0.0));
        } else {
          EXPECT_NEAR(std::abs(chi(n)), 1.0, 1e-14);
        }
        for (std::int64_t m = 0; m < q; ++m) {
          ASSERT_LT(std::abs(chi(m * n % q) - chi(m) * chi(n)), 1e-13) << q << " " << m << " " << n;
        }
      }
      EXPECT_EQ(chi(q + 2), chi(2));
      EXPECT_EQ(chi(-1), chi(q - 1));
    }
  }
}

TEST(Characters, PrimitiveRoots) {
  EXPECT_EQ(bc::primitive_root(7), 3);
  EXPECT_EQ(bc::primitive_root(23), 5);
  EXPECT_EQ(bc::euler_phi(12), 4);
  EXPECT_EQ(bc::euler_phi(23), 22);
}

TEST(GaussSum, KnownValues) {
  const auto chi3 = bc::odd_characters(3).front();
  EXPECT_LT(std::abs(bc::gauss_sum(chi3) - Complex(0.0, std::sqrt(3.0))), 1e-14);
  EXPECT_LT(std::abs(bc::gauss_sum(bc::odd_character_mod4()) - Complex(0.0, 2.0)), 1e-14);
}

TEST(GaussSum, PrimitiveMagnitudeAndOddProduct) {
  for (std::int64_t q : kPrimes) {
    for (const auto& chi : bc::enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      const Complex tau = bc::gauss_sum(chi);
      EXPECT_NEAR(std::norm(tau), static_cast<double>(q), 1e-12);
      if (chi.is_odd()) {
        EXPECT_LT(std::abs(tau * bc::gauss_sum(chi.conjugate()) + static_cast<double>(q)), 1e-10);
      }
    }
  }
}

TEST(LValues, ModFour) {
  const auto chi = bc::odd_character_mod4();
  EXPECT_LT(std::abs(bc::L_one(chi) - kPi / 4.0), 1e-12);
  EXPECT_LT(std::abs(bc::L_zero(chi) - 0.5), 1e-12);
}

TEST(LValues, ModThree) {
  const auto chi = bc::odd_characters(3).front();
  EXPECT_LT(std::abs(bc::L_one(chi) - kPi / (3.0 * std::sqrt(3.0))), 1e-12);
  EXPECT_LT(std::abs(bc::L_zero(chi) - 1.0 / 3.0), 1e-12);
}

TEST(LValues, CrossIdentity) {
  for (std::int64_t q : kOddPrimes) {
    for (const auto& chi : bc::odd_characters(q)) {
      const Complex via_one = Complex(0.0, -1.0) * bc::gauss_sum(chi) * bc::L_one(chi.conjugate()) / kPi;
      EXPECT_LT(std::abs(bc::L_zero(chi) - via_one), 1e-12) << q << " " << chi.index();
    }
  }
}

TEST(LValues, PartialSumsOfDirichletSeries) {
  for (const auto& chi : {bc::odd_character_mod4(), bc::odd_characters(5).front(), bc::odd_characters(7).back()}) {
    Complex partial = 0.0;
    for (std::int64_t n = 1; n <= 1000000; ++n) partial += chi(n) / static_cast<double>(n);
    EXPECT_LT(std::abs(partial - bc::L_one(chi)), 1e-5);
  }
}

TEST(LValues, RejectEvenCharacters) {
  const auto principal = bc::enumerate_characters(5).front();
  EXPECT_THROW(bc::L_zero(principal), besselsum::DomainError);
  EXPECT_THROW(bc::L_one(principal), besselsum::DomainError);
}

TEST(OddOrthogonality, Values) {
  EXPECT_LT(std::abs(bc::odd_orthogonality(5, 2, 2) - 2.0), 1e-12);
  EXPECT_LT(std::abs(bc::odd_orthogonality(5, 2, 3) + 2.0), 1e-12);
  EXPECT_LT(std::abs(bc::odd_orthogonality(7, 2, 3)), 1e-12);
  EXPECT_THROW(bc::odd_orthogonality(5, 5, 1), besselsum::DomainError);
}

TEST(OddOrthogonality, AllUnitPairs) {
  for (std::int64_t q : kOddPrimes) {
    const double half = static_cast<double>(q - 1) / 2.0;
    for (std::int64_t a = 1; a < q; ++a) {
      for (std::int64_t h = 1; h < q; ++h) {
        const double expected = h == a ? half : (h == q - a ? -half : 0.0);
        ASSERT_LT(std::abs(bc::odd_orthogonality(q, a, h) - expected), 1e-10) << q << " " << a << " " << h;
      }
    }
  }
}

TEST(SineDecomposition, Examples) {
  EXPECT_LE(bc::sine_decomposition_check(3, 1, 1), 1e-12);
  EXPECT_LE(bc::sine_decomposition_check(5, 2, 5), 1e-12);
  EXPECT_LE(bc::sine_decomposition_check(7, 3, 10), 1e-12);
}

TEST(SineDecomposition, RandomPairs) {
  std::mt19937_64 rng(20261016);
  for (std::int64_t q : kOddPrimes) {
    std::uniform_int_distribution<std::int64_t> unit(1, q - 1);
    std::uniform_int_distribution<std::int64_t> index(1, 10000);
    for (int i = 0; i < 50; ++i) {
      const auto a = unit(rng);
      const auto n = index(rng);
      ASSERT_LE(bc::sine_decomposition_check(q, a, n), 1e-12) << q << " " << a << " " << n;
    }
  }
}
