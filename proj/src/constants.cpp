#include "anticonc/constants.hpp"

#include "anticonc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace anticonc {

namespace {

constexpr double kLn3 = 1.0986122886681098;

// Root of gap(x) = 0 in (a, b) for gap increasing, gap(a) < 0 < gap(b).
template <class Fn>
double bisect_root(Fn&& gap, double a, double b) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    (gap(mid) < 0.0 ? a : b) = mid;
  }
  return 0.5 * (a + b);
}

// Golden-section maximum of a unimodal objective on [a, b].
template <class Fn>
double golden_max(Fn&& objective, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c), fd = objective(d);
  for (int i = 0; i < 120 && d - c > 0.0; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  return fc > fd ? c : d;
}

struct ScanResult {
  double arg = 0.0;
  double objective = -std::numeric_limits<double>::infinity();
};

// Maximizes objective(x) over {x0 + i*step : i in [1, cells]}, lowest index
// winning ties, then refines around the best cell and finishes with a
// golden section. Deterministic for any thread count.
template <class Fn>
ScanResult scan_maximize(Fn&& objective, double x0, double step, std::size_t cells,
                         int refine_passes, int threads) {
  std::vector<double> values(cells);
  parallel_for(cells, threads, [&](std::size_t i) {
    values[i] = objective(x0 + static_cast<double>(i + 1) * step);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < cells; ++i)
    if (values[i] > values[best]) best = i;

  double center = x0 + static_cast<double>(best + 1) * step;
  double radius = step;
  double fine = step;
  for (int pass = 0; pass < refine_passes; ++pass) {
    fine /= 100.0;
    double arg = center;
    double val = objective(center);
    for (int i = -100; i <= 100; ++i) {
      const double x = center + static_cast<double>(i) * fine;
      if (x <= x0) continue;
      const double v = objective(x);
      if (v > val) {
        val = v;
        arg = x;
      }
    }
    center = arg;
    radius = fine;
  }
  const double arg = golden_max(objective, std::max(x0 + fine, center - radius),
                                center + radius);
  return {arg, objective(arg)};
}

}  // namespace

double c1_surface_gap(double eps1, double eps2) {
  const double u = 4.0 * eps1 + 3.0 * eps2;
  return (3.0 + 1.0 / 9.0) / (4.0 * (1.0 - u)) + 3.0 * u - (1.0 - eps1 * eps2);
}

double c2_surface_gap(double c1, double eps3) {
  return c1 / (1.0 - eps3) + 3.0 * eps3 - (1.0 - eps3);
}

double c3_surface_gap(double c2, double eps4, double eps5) {
  const double om4 = 1.0 - eps4;
  return 3.0 * (eps4 + eps5) + c2 / (om4 * om4 * om4 * (1.0 - eps5)) -
         (1.0 - eps4 * eps5);
}

C1Solution solve_c1(int threads) {
  // eps2 root exists iff the gap is negative at eps2 = 0.
  const auto gap_at_zero = [](double e1) { return c1_surface_gap(e1, 0.0); };
  if (gap_at_zero(1e-12) >= 0.0) throw std::runtime_error("c1 surface has no feasible point");
  const double e1_max = bisect_root(gap_at_zero, 1e-12, 0.2499);

  const auto eps2_on_surface = [](double e1) {
    const double hi = (1.0 - 4.0 * e1) / 3.0 * (1.0 - 1e-12);
    return bisect_root([e1](double e2) { return c1_surface_gap(e1, e2); }, 0.0, hi);
  };
  const auto objective = [&](double e1) {
    if (e1 <= 0.0 || e1 >= e1_max) return -1.0;
    return e1 * eps2_on_surface(e1);
  };

  const double step = 1e-6;
  const std::size_t cells = static_cast<std::size_t>(e1_max / step);
  const int passes = 2;
  ScanResult best = scan_maximize(objective, 0.0, step, cells, passes, threads);
  if (best.objective <= 0.0) throw std::runtime_error("c1 optimization found no feasible point");

  const double eps1 = best.arg;
  const double eps2 = eps2_on_surface(eps1);
  const double product = eps1 * eps2;
  return {eps1,     eps2, product, 1.0 - product, std::abs(c1_surface_gap(eps1, eps2)),
          step,     cells, passes};
}

C2Solution solve_c2(double c1) {
  if (!(c1 > 0.0 && c1 < 1.0)) throw std::invalid_argument("c2 step requires 0 < C1 < 1");
  // (1-e3)(1-4e3) = C1; smaller root, written without the 5 - sqrt(...)
  // cancellation.
  const double q = 1.0 - c1;
  const double disc = 25.0 - 16.0 * q;
  if (disc < 0.0) throw std::runtime_error("c2 discriminant negative");
  double eps3 = 2.0 * q / (5.0 + std::sqrt(disc));
  // One Newton step on (1-e3)(1-4e3) - C1 sharpens the last bits.
  const double f = (1.0 - eps3) * (1.0 - 4.0 * eps3) - c1;
  const double df = -5.0 + 8.0 * eps3;
  eps3 -= f / df;
  return {eps3, 1.0 - eps3, std::abs(c2_surface_gap(c1, eps3))};
}

C3Solution solve_c3(double c2, int threads) {
  if (!(c2 > 0.0 && c2 < 1.0)) throw std::invalid_argument("c3 step requires 0 < C2 < 1");
  constexpr double kEps5Cap = 0.1;

  const auto gap_at_zero = [c2](double e4) { return c3_surface_gap(c2, e4, 0.0); };
  if (gap_at_zero(1e-16) >= 0.0) throw std::runtime_error("c3 surface has no feasible point");
  const double e4_max = bisect_root(gap_at_zero, 1e-16, 0.3);

  const auto eps5_on_surface = [c2](double e4) {
    // Root must land below the 1/10 cap to be admissible.
    if (c3_surface_gap(c2, e4, kEps5Cap) <= 0.0)
      return std::numeric_limits<double>::quiet_NaN();
    return bisect_root([c2, e4](double e5) { return c3_surface_gap(c2, e4, e5); }, 0.0,
                       kEps5Cap);
  };
  const auto objective = [&](double e4) {
    if (e4 <= 0.0 || e4 >= e4_max) return -1.0;
    const double e5 = eps5_on_surface(e4);
    return std::isnan(e5) ? -1.0 : e4 * e5;
  };

  const double step = (1.0 - c2) / 1e4;
  const std::size_t cells = static_cast<std::size_t>(e4_max / step);
  const int passes = 2;
  ScanResult best = scan_maximize(objective, 0.0, step, cells, passes, threads);
  if (best.objective <= 0.0) throw std::runtime_error("c3 optimization found no feasible point");

  const double eps4 = best.arg;
  const double eps5 = eps5_on_surface(eps4);
  const double product = eps4 * eps5;
  const double nu = -std::log1p(-product) / kLn3;
  return {eps4,  eps5, product, 1.0 - product, nu, std::abs(c3_surface_gap(c2, eps4, eps5)),
          step,  cells, passes};
}

ConstantsReport solve_constants(int threads) {
  C1Solution c1 = solve_c1(threads);
  C2Solution c2 = solve_c2(c1.c1);
  C3Solution c3 = solve_c3(c2.c2, threads);
  return {c1, c2, c3};
}

NestedBound nested_bound(unsigned ell0, double lambda, double one_minus_c3, double nu) {
  if (ell0 < 3) throw std::invalid_argument("nested bound requires ell0 >= 3");
  if (!(lambda > 0.0 && lambda <= 0.9))
    throw std::invalid_argument("nested bound requires 0 < lambda <= 9/10");
  int k = 0;
  unsigned long long pow3 = 1;
  while (pow3 * 3 <= ell0) {
    pow3 *= 3;
    ++k;
  }
  // Both sides are 1 - (tiny); compare the tiny parts, computed stably.
  const double log_c3k = static_cast<double>(k) * std::log1p(-one_minus_c3);
  const double log_closed = nu * std::log(3.0 / static_cast<double>(ell0));
  const double bound = lambda * std::exp(log_c3k);
  const double closed = lambda * std::exp(log_closed);
  return {k, bound, closed, log_c3k < log_closed};
}

double required_prime_threshold(unsigned ell0, double lambda, double one_minus_c3,
                                double nu) {
  if (ell0 < 3) throw std::invalid_argument("threshold requires ell0 >= 3");
  if (!(lambda > 0.0 && lambda <= 0.9))
    throw std::invalid_argument("threshold requires 0 < lambda <= 9/10");
  return 2.0 * (1.0 - one_minus_c3) * std::exp(nu * std::log(static_cast<double>(ell0))) /
         lambda;
}

}  // namespace anticonc
