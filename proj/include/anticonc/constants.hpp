#pragma once

#include <cstddef>

namespace anticonc {

// Reproduction of the explicit-constant chain C1 -> C2 -> C3 -> nu by
// numerical optimization over the three proof surfaces. Everything runs in
// double precision except the C3 step, where eps4*eps5 ~ 1e-12 sits at the
// edge of double resolution relative to 1: the product is kept as its own
// quantity (never recovered from a rounded 1 - C3) and nu comes from
// -log1p(-eps4*eps5)/ln 3.

/// LHS - RHS of the first surface (multiplied through by n, which cancels):
///   (3+1/9) / (4(1-4e1-3e2)) + 3(4e1+3e2)  =  1 - e1*e2.
/// Strictly increasing in e2 on the feasible region 4e1+3e2 < 1.
double c1_surface_gap(double eps1, double eps2);

/// LHS - RHS of  C1/(1-e3) + 3*e3 = 1 - e3.
double c2_surface_gap(double c1, double eps3);

/// LHS - RHS of  3(e4+e5) + C2/((1-e4)^3 (1-e5)) = 1 - e4*e5.
/// Strictly increasing in e5 for e4, e5 in (0,1).
double c3_surface_gap(double c2, double eps4, double eps5);

struct C1Solution {
  double eps1;
  double eps2;
  double product;   // eps1 * eps2
  double c1;        // 1 - product
  double residual;  // |c1_surface_gap| at the solution
  double scan_step;
  std::size_t grid_cells;
  int refine_passes;
};

struct C2Solution {
  double eps3;
  double c2;
  double residual;
};

struct C3Solution {
  double eps4;
  double eps5;
  double product;   // eps4 * eps5, the trustworthy form of 1 - C3
  double c3;
  double nu;        // -log_3(C3), from log1p on the product
  double residual;
  double scan_step;
  std::size_t grid_cells;
  int refine_passes;
};

struct ConstantsReport {
  C1Solution c1;
  C2Solution c2;
  C3Solution c3;
};

/// Maximizes eps1*eps2 on the first surface: outer scan over eps1 (step
/// 1e-6, two refinement passes, golden-section finish), bisection for eps2.
C1Solution solve_c1(int threads = 1);

/// Closed form: the surface reduces to (1-e3)(1-4e3) = C1; returns the
/// smaller root (evaluated in the cancellation-free form) and C2 = 1 - e3.
C2Solution solve_c2(double c1);

/// Maximizes eps4*eps5 on the third surface under eps5 < 1/10; same
/// scan-plus-bisection strategy with step (1-C2)/1e4.
C3Solution solve_c3(double c2, int threads = 1);

/// Full chain with metadata.
ConstantsReport solve_constants(int threads = 1);

struct NestedBound {
  int k;                    // floor(log_3 ell0), computed in integers
  double bound;             // C3^k * lambda
  double closed_form;       // lambda * (3/ell0)^nu
  bool exponent_dominates;  // C3^k < (3/ell0)^nu, strict
};

/// Iterated-tripling bound for ell >= ell0 summands.
NestedBound nested_bound(unsigned ell0, double lambda, double one_minus_c3, double nu);

/// Sufficient prime-size threshold 2*C3*ell0^nu / lambda.
double required_prime_threshold(unsigned ell0, double lambda, double one_minus_c3, double nu);

}  // namespace anticonc
