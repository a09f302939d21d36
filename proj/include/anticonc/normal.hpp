#pragma once

#include "anticonc/distribution.hpp"

namespace anticonc {

/// Standard normal CDF via the complementary error function (absolute
/// accuracy well below 1e-12).
double std_normal_cdf(double z);

/// Berry-Esseen constant from the sharpest published bound used here.
inline constexpr double kBerryEsseenC = 0.7655;

struct NormalGapReport {
  Rational sigma2;            // exact variance of one interval summand
  Rational abs_third_moment;  // exact E|Y - EY|^3
  double rho;                 // E|Y|^3 / sigma^3
  double sup_gap;             // sup_z |Psi(z) - Phi(z)|, exact CDF vs normal
  double budget;              // 0.7655 * rho / sqrt(ell')
  bool within_budget;
};

/// Exact CDF of the normalized sum of ell' interval summands versus the
/// standard normal CDF. The supremum over all z is attained at the jump
/// points of the step CDF, where both one-sided limits are evaluated.
NormalGapReport normal_approx_gap(std::size_t n, unsigned ell_prime);

}  // namespace anticonc
