#pragma once

#include <utility>

#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"

namespace deltaflow {

struct BindingReport {
    double c_max = 0.0;
    std::pair<int, int> binding_pair{-1, -1};
    double binding_angle = 0.0;  // radians between the pair, in (0, pi]
    int iterations = 0;
};

/// The pair of maximum distance among the pairs the feasibility predicate
/// actually tests (everything except the translated diameter pairs
/// (k, k + n/2)), together with its subtended angle.
struct BindingDiagnosis {
    int i = -1;
    int j = -1;
    double distance = 0.0;
    double angle = 0.0;
};
BindingDiagnosis diagnose_binding(const Configuration& config);

/// Feasibility predicates behind the bisections. The translated diameter
/// pairs are exactly 2 by construction and are excluded so the test never
/// sits on a floating-point knife edge.
bool push_within_diameter(int n, double c, const Profile& profile);
bool move_within_diameter(int n, double eps);

/// Largest push strength keeping every tested pair distance <= 2, found by
/// bisection on [0, 8] to absolute width tol. The returned c_max is the
/// certified-feasible lower end of the final bracket. Each pair distance is
/// convex in c, so the feasible set is an interval and bisection is sound.
BindingReport c_max(int n, const Profile& profile, double tol = 1e-10);

/// Flow-time form of the same constraint: c_max / n.
double t_max(int n, const Profile& profile, double tol = 1e-10);

/// Largest eps for which single_diameter_move keeps every distance involving
/// the moved pair <= 2 (the moved pair itself excluded); bisection on [0, 1].
double eps_max(int n, double tol = 1e-12);

/// Chord-based rate estimate at the regular n-gon:
/// min over tested pairs of -log(|z_i - z_j| / 2) / Re(rho_ij).
/// A first-order cross-check of t_max, not a replacement for the bisection.
double t_max_estimate(int n, const Profile& profile);

}  // namespace deltaflow
