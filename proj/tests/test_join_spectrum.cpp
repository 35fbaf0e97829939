#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "zdg/join_spectrum.hpp"

using Shape = std::vector<std::pair<double, std::size_t>>;

namespace {

Shape shape(const zdg::SpectrumMultiset& s) {
  Shape out;
  for (const auto& e : s.entries()) out.emplace_back(e.value, e.multiplicity);
  return out;
}

}  // namespace

TEST(ClassSpectrum, Examples) {
  EXPECT_EQ(shape(zdg::class_spectrum(zdg::ClassKind::Complete, 4)), (Shape{{0, 1}, {4, 3}}));
  EXPECT_EQ(shape(zdg::class_spectrum(zdg::ClassKind::Null, 6)), (Shape{{0, 6}}));
  EXPECT_EQ(shape(zdg::class_spectrum(zdg::ClassKind::Complete, 1)), (Shape{{0, 1}}));
  EXPECT_TRUE(zdg::class_spectrum(zdg::ClassKind::Complete, 4).all_exact());
}

TEST(ReducedSpectrum, Fifteen) {
  const auto a = zdg::reduced_spectrum(15);
  EXPECT_EQ(shape(a.total), (Shape{{0, 1}, {2, 3}, {4, 1}, {6, 1}}));
  EXPECT_TRUE(a.total.all_exact());
  EXPECT_EQ(shape(a.quotient_spectrum), (Shape{{0, 1}, {6, 1}}));
}

TEST(ReducedSpectrum, EighteenClassPart) {
  const auto a = zdg::reduced_spectrum(18);
  ASSERT_EQ(a.class_contributions.size(), 4u);
  // Classes K-bar_6, K-bar_2, K_2, K_1 shifted by M = 1, 2, 3, 8.
  using Values = std::vector<std::pair<zdg::integer, std::size_t>>;
  EXPECT_EQ(a.class_contributions[0].values, (Values{{1, 5}}));
  EXPECT_EQ(a.class_contributions[1].values, (Values{{2, 1}}));
  EXPECT_EQ(a.class_contributions[2].values, (Values{{5, 1}}));
  EXPECT_TRUE(a.class_contributions[3].values.empty());

  // Quotient roots: 0 and the roots of x^3 - 14x^2 + 47x - 22.
  const std::vector<double> cubic_roots{0.556742633633674, 4.34156005699679, 9.10169730936954};
  const auto q = a.quotient_spectrum.expanded();
  ASSERT_EQ(q.size(), 4u);
  EXPECT_NEAR(q[0], 0.0, 1e-12);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(q[i + 1], cubic_roots[i], 1e-12);
  EXPECT_EQ(a.total.total_multiplicity(), 11u);
  EXPECT_EQ(a.total.multiplicity_of(1.0), 5u);
}

TEST(ReducedSpectrum, FourIsSingleZero) {
  EXPECT_EQ(shape(zdg::reduced_spectrum(4).total), (Shape{{0, 1}}));
}

TEST(ReducedSpectrum, RejectsPrimes) { EXPECT_THROW(zdg::reduced_spectrum(13), zdg::empty_graph_error); }

TEST(ReducedSpectrum, CountTraceAndConnectivity) {
  for (auto n : zdg::testing::composites(4, 1500)) {
    const auto g = zdg::build_divisor_graph(n);
    const auto a = zdg::reduced_spectrum(g);
    EXPECT_EQ(a.total.total_multiplicity(), n - zdg::euler_phi(n) - 1);
    EXPECT_EQ(a.quotient_spectrum.total_multiplicity(), g.order());
    EXPECT_GE(a.quotient_spectrum.multiplicity_of(0.0), 1u);
    for (const auto& c : a.class_contributions) {
      std::size_t count = 0;
      for (const auto& v : c.values) count += v.second;
      EXPECT_EQ(count, c.size - 1);
    }
    const double degree_sum = static_cast<double>(zdg::zero_divisor_degree_sum(g));
    EXPECT_NEAR(a.total.weighted_sum(), degree_sum, 1e-8 * std::max(1.0, degree_sum));
    EXPECT_EQ(a.total.multiplicity_of(0.0), 1u) << n;
  }
}

TEST(PrimePowerSpectrum, Examples) {
  EXPECT_EQ(shape(zdg::prime_power_spectrum(3, 2)), (Shape{{0, 1}, {2, 1}}));
  EXPECT_EQ(shape(zdg::prime_power_spectrum(2, 2)), (Shape{{0, 1}}));
  EXPECT_EQ(shape(zdg::prime_power_spectrum(2, 3)), (Shape{{0, 1}, {1, 1}, {3, 1}}));
  EXPECT_EQ(shape(zdg::prime_power_spectrum(2, 4)), (Shape{{0, 1}, {1, 4}, {3, 1}, {7, 1}}));
  EXPECT_THROW(zdg::prime_power_spectrum(4, 2), std::invalid_argument);
  EXPECT_THROW(zdg::prime_power_spectrum(3, 1), std::invalid_argument);
}

TEST(PrimePowerSpectrum, CountAndLargestEigenvalue) {
  for (zdg::integer p : {2, 3, 5, 7, 11, 13})
    for (unsigned t = 2; zdg::checked_pow(p, t) <= 100000; ++t) {
      const auto s = zdg::prime_power_spectrum(p, t);
      const auto order = zdg::checked_pow(p, t - 1) - 1;
      EXPECT_EQ(s.total_multiplicity(), order);
      EXPECT_TRUE(s.all_exact());
      if (zdg::checked_pow(p, t) != 4) {
        EXPECT_EQ(s.max(), static_cast<double>(order));
      }
    }
}

TEST(PrimePowerCharPoly, RootsAreTheClosedFormSpectrum) {
  for (zdg::integer p : {2, 3, 5, 7})
    for (unsigned t = 2; zdg::checked_pow(p, t) <= 3000; ++t) {
      const auto theta = zdg::prime_power_char_poly(p, t);
      const auto roots = zdg::integer_roots_complete(theta);
      ASSERT_TRUE(roots.fully_factored);
      Shape from_poly;
      for (const auto& [r, m] : roots.roots) from_poly.emplace_back(r.convert_to<double>(), m);
      EXPECT_EQ(from_poly, shape(zdg::prime_power_spectrum(p, t))) << p << "^" << t;
    }
}

TEST(BruteSpectrum, Examples) {
  EXPECT_EQ(shape(zdg::brute_spectrum(8)), (Shape{{0, 1}, {1, 1}, {3, 1}}));
  EXPECT_EQ(shape(zdg::brute_spectrum(9)), (Shape{{0, 1}, {2, 1}}));
  EXPECT_TRUE(zdg::compare_spectra(zdg::brute_spectrum(15), zdg::reduced_spectrum(15).total, 1e-10).match);
}

TEST(BruteSpectrum, CapExceeded) {
  EXPECT_THROW(zdg::brute_spectrum(100, 10), zdg::oracle_cap_error);
  try {
    zdg::brute_spectrum(100, 10);
  } catch (const zdg::oracle_cap_error& e) {
    EXPECT_EQ(e.vertices(), 59u);
    EXPECT_EQ(e.cap(), 10u);
  }
}

TEST(OracleCap, EnvironmentOverride) {
  ::unsetenv("ZDG_ORACLE_CAP");
  EXPECT_EQ(zdg::oracle_cap_from_env(), 1200u);
  ::setenv("ZDG_ORACLE_CAP", "50", 1);
  EXPECT_EQ(zdg::oracle_cap_from_env(), 50u);
  ::setenv("ZDG_ORACLE_CAP", "bogus", 1);
  EXPECT_EQ(zdg::oracle_cap_from_env(), 1200u);
  ::unsetenv("ZDG_ORACLE_CAP");
}

TEST(ReducedSpectrum, MatchesOracleOnSmallRange) {
  for (auto n : zdg::testing::composites(4, 200)) {
    const auto cmp = zdg::compare_spectra(zdg::reduced_spectrum(n).total, zdg::brute_spectrum(n));
    EXPECT_TRUE(cmp.match) << "n=" << n << " max deviation " << cmp.max_deviation;
  }
}
