#pragma once

#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"

namespace deltaflow {

struct QuadratureResult {
    Complex value;               // midpoint estimate on the grid_size grid
    int grid_size = 0;
    double refinement_gap = 0.0; // |I_m - I_{2m}|
};

/// With f(u) = p(u/2) e^{iu/2}, the integrand of I is
///
///     (f(x) - f(y))^2 (e^{ix} + e^{iy}) / (e^{ix} - e^{iy})^2
///
/// on [0, 2pi]^2. The diagonal singularity is removable: the squared vanishing
/// of the numerator matches the denominator, and for |x - y| below a small
/// threshold the value is replaced by the limit -2 e^{-is} f'(s)^2 at the
/// midpoint s = (x + y)/2, which dodges the cancellation in (e^{ix}-e^{iy})^2.
Complex integrand(double x, double y, const Profile& profile);

/// Tensor-product midpoint rule on an m x m grid of [0, 2pi]^2; the exact
/// diagonal cells take the limit value. refinement_gap compares against the
/// doubled grid.
QuadratureResult integral_I(const Profile& profile, int grid_size);

/// C = exp(-I pi^2 / 128).
double limit_constant(double I_real);

}  // namespace deltaflow
