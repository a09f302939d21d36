#include "anticonc/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace anticonc {

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

NormalGapReport normal_approx_gap(std::size_t n, unsigned ell_prime) {
  if (n < 2) throw std::invalid_argument("interval size must be >= 2");
  if (ell_prime < 1) throw std::invalid_argument("summand count must be >= 1");

  GroundSet interval = centered_interval_set(n);
  Rational mean = 0;
  for (const BigInt& v : interval.elements()) mean += Rational(v);
  mean /= static_cast<long>(n);

  Rational sigma2 = 0, third = 0;
  for (const BigInt& v : interval.elements()) {
    Rational c = Rational(v) - mean;
    Rational c2 = c * c;
    sigma2 += c2;
    third += (c < 0 ? -c : c) * c2;
  }
  sigma2 /= static_cast<long>(n);
  third /= static_cast<long>(n);

  const double sigma = std::sqrt(to_double(sigma2));
  const double rho = to_double(third) / (sigma * sigma * sigma);
  const double scale = sigma * std::sqrt(static_cast<double>(ell_prime));

  ExactDist sum = exact_iid_sum(interval, ell_prime);
  const Rational shift = Rational(ell_prime) * mean;

  double sup_gap = 0.0;
  Rational cum = 0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const Rational& m = sum.mass()[i];
    if (m == 0) continue;
    const BigInt x = sum.lo() + static_cast<long>(i);
    const double z = to_double(Rational(x) - shift) / scale;
    const double phi = std_normal_cdf(z);
    const double below = to_double(cum);  // left limit of the step CDF at z
    cum += m;
    const double at = to_double(cum);
    sup_gap = std::max(sup_gap, std::max(std::abs(below - phi), std::abs(at - phi)));
  }

  const double budget = kBerryEsseenC * rho / std::sqrt(static_cast<double>(ell_prime));
  return {sigma2, third, rho, sup_gap, budget, sup_gap <= budget};
}

}  // namespace anticonc
