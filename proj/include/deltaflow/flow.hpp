#pragma once

#include <cstddef>
#include <vector>

#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"

namespace deltaflow {

/// Principal argument in [-pi, pi); points on the negative real axis get -pi.
double arg_branch(Complex z);

/// v(z) = p(|arg z|) z/|z|. Continuous, but not differentiable across the
/// positive real axis where |arg z| kinks; undefined at the origin.
Complex vector_field_at(Complex z, const Profile& profile);

/// Straight-line map z + t v(z). For radial trajectories arg z, and hence v,
/// is constant along the flow, so this is the exact solution of z' = v(z).
Configuration flow_map(const Configuration& config, double t, const Profile& profile);

/// Fixed-step explicit Euler companion to flow_map, kept around to probe the
/// velocity-constancy claim rather than to integrate anything general.
Configuration flow_map_euler(const Configuration& config, double t, const Profile& profile,
                             int steps = 200);

/// Symmetric matrix of differentials rho_ij = (v_i - v_j)/(z_i - z_j),
/// stored as the packed upper triangle. Diagonal entries are unset.
class RhoMatrix {
public:
    int n() const { return n_; }
    Complex operator()(int i, int j) const;
    double max_abs() const;

private:
    explicit RhoMatrix(int n);
    std::size_t index(int i, int j) const;  // requires i < j

    friend RhoMatrix rho_matrix(const Configuration&, const Profile&);
    friend std::vector<Complex> power_sums(const RhoMatrix&, int);
    friend double remainder_power_sum(const RhoMatrix&, double);

    int n_ = 0;
    std::vector<Complex> upper_;
};

RhoMatrix rho_matrix(const Configuration& config, const Profile& profile);

/// S_m = sum_{i != j} rho_ij^m for m = 1..max_power; result[m-1] = S_m.
/// Compensated sums in fixed index order.
std::vector<Complex> power_sums(const RhoMatrix& rho, int max_power);

/// sum_{i != j} |rho_ij|^4 / (1 - |rho_ij| t)^4: the uniform envelope for the
/// fourth-order Taylor remainder of sum log|1 + rho t| over [0, t]. Requires
/// |rho_ij| t < 1 for every pair, otherwise the expansion is invalid.
double remainder_power_sum(const RhoMatrix& rho, double t);
double remainder_power_sum(const Configuration& config, const Profile& profile, double t);

}  // namespace deltaflow
