#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zdg/numtheory.hpp"

using zdg::Factorization;
using zdg::PrimePower;

TEST(Factorize, Examples) {
  EXPECT_TRUE(zdg::factorize(1).factors.empty());
  EXPECT_EQ(zdg::factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(zdg::factorize(49).factors, (std::vector<PrimePower>{{7, 2}}));
  EXPECT_EQ(zdg::factorize(30030).factors.size(), 6u);
}

TEST(Factorize, RejectsZero) { EXPECT_THROW(zdg::factorize(0), std::invalid_argument); }

TEST(Factorize, ProductAndPrimality) {
  for (zdg::integer n = 1; n <= 5000; ++n) {
    const auto f = zdg::factorize(n);
    zdg::integer product = 1;
    zdg::integer last = 0;
    for (const auto& [p, e] : f.factors) {
      EXPECT_TRUE(zdg::testing::is_prime_by_scan(p)) << n;
      EXPECT_GE(e, 1u);
      EXPECT_GT(p, last);
      last = p;
      product *= zdg::checked_pow(p, e);
    }
    EXPECT_EQ(product, n);
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(zdg::euler_phi(1), 1u);
  EXPECT_EQ(zdg::euler_phi(12), 4u);
  for (zdg::integer p : {2, 3, 5, 7, 97, 7919}) EXPECT_EQ(zdg::euler_phi(p), p - 1);
}

TEST(EulerPhi, MatchesCountingOracle) {
  for (zdg::integer n = 1; n <= 1500; ++n) EXPECT_EQ(zdg::euler_phi(n), zdg::testing::phi_by_count(n)) << n;
}

TEST(EulerPhi, SumOverDivisorsIsN) {
  for (zdg::integer n = 1; n <= 3000; ++n) {
    zdg::integer sum = 0;
    for (auto d : zdg::divisors(n)) sum += zdg::euler_phi(d);
    EXPECT_EQ(sum, n);
  }
}

TEST(EulerPhi, Multiplicative) {
  for (zdg::integer m = 1; m <= 80; ++m)
    for (zdg::integer n = 1; n <= 80; ++n)
      if (zdg::gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)) == 1) {
        EXPECT_EQ(zdg::euler_phi(m * n), zdg::euler_phi(m) * zdg::euler_phi(n));
      }
}

TEST(ProperDivisors, Examples) {
  EXPECT_EQ(zdg::proper_divisors(9), (std::vector<zdg::integer>{3}));
  EXPECT_EQ(zdg::proper_divisors(12), (std::vector<zdg::integer>{2, 3, 4, 6}));
  EXPECT_EQ(zdg::proper_divisors(18), (std::vector<zdg::integer>{2, 3, 6, 9}));
  EXPECT_TRUE(zdg::proper_divisors(7).empty());
  EXPECT_THROW(zdg::proper_divisors(1), std::invalid_argument);
}

TEST(ProperDivisors, CountAndScanOracle) {
  for (zdg::integer n = 2; n <= 3000; ++n) {
    const auto f = zdg::factorize(n);
    const auto pd = zdg::proper_divisors(f);
    EXPECT_EQ(pd.size(), f.divisor_count() - 2);
    auto scan = zdg::testing::divisors_by_scan(n);
    std::vector<zdg::integer> expected(scan.begin() + 1, scan.end() - 1);
    EXPECT_EQ(pd, expected);
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(zdg::gcd(0, 7), 7u);
  EXPECT_EQ(zdg::gcd(12, 18), 6u);
  EXPECT_EQ(zdg::gcd(15, 4), 1u);
  EXPECT_EQ(zdg::gcd(0, 0), 0u);
  EXPECT_EQ(zdg::gcd(-12, 18), 6u);
}

TEST(CheckedArithmetic, Overflow) {
  EXPECT_THROW(zdg::checked_mul(zdg::integer{1} << 40, zdg::integer{1} << 40), std::overflow_error);
  EXPECT_THROW(zdg::checked_pow(10, 25), std::overflow_error);
}

TEST(Factorization, Predicates) {
  EXPECT_TRUE(zdg::factorize(15).is_two_distinct_primes());
  EXPECT_FALSE(zdg::factorize(12).is_two_distinct_primes());
  EXPECT_TRUE(zdg::factorize(64).is_prime_power());
  EXPECT_TRUE(zdg::has_zero_divisors(zdg::factorize(4)));
  EXPECT_FALSE(zdg::has_zero_divisors(zdg::factorize(7)));
  EXPECT_FALSE(zdg::has_zero_divisors(zdg::factorize(1)));
  EXPECT_EQ(zdg::zero_divisor_count(18), 11u);
}
