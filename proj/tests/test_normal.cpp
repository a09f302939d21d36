#include "anticonc/normal.hpp"

#include <doctest.h>

#include <cmath>

using namespace anticonc;

TEST_SUITE_BEGIN("normal");

TEST_CASE("normal cdf reference values") {
  CHECK(std::abs(std_normal_cdf(0.0) - 0.5) <= 1e-15);
  CHECK(std::abs(std_normal_cdf(1.0) - 0.8413447460685429) <= 1e-13);
  CHECK(std::abs(std_normal_cdf(-1.96) - 0.024997895148220435) <= 1e-13);
  CHECK(std::abs(std_normal_cdf(3.0) - 0.9986501019683699) <= 1e-13);
  for (double z = -6.0; z <= 6.0; z += 0.37)
    CHECK(std::abs(std_normal_cdf(z) + std_normal_cdf(-z) - 1.0) <= 1e-14);
}

TEST_CASE("interval moments, odd sizes") {
  NormalGapReport r = normal_approx_gap(5, 2);
  CHECK(r.sigma2 == Rational(2));
  CHECK(r.abs_third_moment == Rational(18, 5));  // 576/160
  CHECK(std::abs(r.rho - 3.6 / (2.0 * std::sqrt(2.0))) <= 1e-12);

  for (std::size_t n : {3, 7, 9, 101}) {
    NormalGapReport g = normal_approx_gap(n, 1);
    CHECK(g.sigma2 == Rational(BigInt(n) * n - 1, 12));
    const BigInt nn = BigInt(n) * n - 1;
    CHECK(g.abs_third_moment == Rational(nn * nn, BigInt(32) * n));
  }
}

TEST_CASE("interval moments, even sizes use the translate") {
  for (std::size_t n : {4, 6, 10}) {
    NormalGapReport g = normal_approx_gap(n, 1);
    CHECK(g.sigma2 == Rational(BigInt(n) * n - 1, 12));
    CHECK(g.abs_third_moment == Rational(BigInt(n) * (BigInt(n) * n - 2), 32));
  }
}

TEST_CASE("skewness ratio approaches 3*sqrt(3)/4") {
  NormalGapReport r = normal_approx_gap(101, 1);
  CHECK(std::abs(r.rho - 3.0 * std::sqrt(3.0) / 4.0) <= 1e-3);
}

TEST_CASE("gap stays within the Berry-Esseen budget") {
  NormalGapReport r = normal_approx_gap(5, 4);
  CHECK(r.within_budget);
  CHECK(r.sup_gap > 0.0);
  CHECK(std::abs(r.budget - kBerryEsseenC * r.rho / 2.0) <= 1e-15);
}

TEST_CASE("jump-point supremum dominates a dense grid scan") {
  for (unsigned ellp : {1u, 2u, 5u}) {
    for (std::size_t n : {4, 5}) {
      NormalGapReport r = normal_approx_gap(n, ellp);
      // Oracle: sample |Psi - Phi| on a fine grid; the step CDF is
      // reconstructed from the exact law.
      GroundSet interval = centered_interval_set(n);
      ExactDist sum = exact_iid_sum(interval, ellp);
      Rational mean = 0;
      for (const BigInt& v : interval.elements()) mean += Rational(v);
      mean /= static_cast<long>(n);
      const double sigma = std::sqrt(to_double(r.sigma2));
      const double scale = sigma * std::sqrt(static_cast<double>(ellp));

      double grid_sup = 0.0;
      for (double z = -5.0; z <= 5.0; z += 0.001) {
        Rational psi = 0;
        for (std::size_t i = 0; i < sum.size(); ++i) {
          const BigInt x = sum.lo() + static_cast<long>(i);
          if (to_double(Rational(x) - Rational(ellp) * mean) / scale <= z)
            psi += sum.mass()[i];
        }
        grid_sup = std::max(grid_sup, std::abs(to_double(psi) - std_normal_cdf(z)));
      }
      CHECK(grid_sup <= r.sup_gap + 1e-12);
      CHECK(r.sup_gap <= grid_sup + 0.05);  // grid misses the jumps by at most a step
    }
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(normal_approx_gap(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(normal_approx_gap(5, 0), std::invalid_argument);
}

TEST_SUITE_END();
