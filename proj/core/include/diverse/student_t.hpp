#pragma once

namespace diverse {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
/// x in [0, 1], by Lentz's continued fraction iterated to a relative
/// tolerance of 1e-10.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided tail probability P(|T| >= |t|) of Student's t distribution
/// with `dof` degrees of freedom, via I_x(dof/2, 1/2) at
/// x = dof / (dof + t^2). Accurate to ~1e-6 over dof in [1, 1e7].
double student_t_two_sided_p(double t, double dof);

}  // namespace diverse
