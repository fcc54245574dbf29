#include "deltaflow/flow.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace deltaflow {

double arg_branch(Complex z) {
    const double a = std::arg(z);
    return a == std::numbers::pi ? -std::numbers::pi : a;
}

Complex vector_field_at(Complex z, const Profile& profile) {
    const double r = std::abs(z);
    if (r == 0.0) throw std::domain_error("vector field is undefined at the origin");
    return profile(std::abs(arg_branch(z))) * (z / r);
}

Configuration flow_map(const Configuration& config, double t, const Profile& profile) {
    Configuration out = config;
    for (Complex& z : out.points) z += t * vector_field_at(z, profile);
    return out;
}

Configuration flow_map_euler(const Configuration& config, double t, const Profile& profile,
                             int steps) {
    if (steps < 1) throw std::invalid_argument("flow_map_euler: steps must be positive");
    Configuration out = config;
    const double h = t / steps;
    for (int s = 0; s < steps; ++s)
        for (Complex& z : out.points) z += h * vector_field_at(z, profile);
    return out;
}

RhoMatrix::RhoMatrix(int n) : n_(n) {
    upper_.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
}

std::size_t RhoMatrix::index(int i, int j) const {
    const std::size_t un = static_cast<std::size_t>(n_);
    const std::size_t ui = static_cast<std::size_t>(i);
    return ui * (2 * un - ui - 1) / 2 + static_cast<std::size_t>(j - i) - 1;
}

Complex RhoMatrix::operator()(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("rho index out of range");
    if (i == j) throw std::invalid_argument("diagonal entries of the rho matrix are unset");
    return i < j ? upper_[index(i, j)] : upper_[index(j, i)];
}

double RhoMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& r : upper_) best = std::max(best, std::norm(r));
    return std::sqrt(best);
}

RhoMatrix rho_matrix(const Configuration& config, const Profile& profile) {
    const int n = config.n();
    if (n < 2) throw std::invalid_argument("rho matrix needs at least 2 points");
    const auto& z = config.points;
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = vector_field_at(z[i], profile);
    RhoMatrix rho(n);
    std::size_t at = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex dz = z[i] - z[j];
            if (dz == 0.0)
                throw std::domain_error("degenerate configuration: points " + std::to_string(i) +
                                        " and " + std::to_string(j) + " coincide");
            rho.upper_[at++] = (v[i] - v[j]) / dz;
        }
    }
    return rho;
}

std::vector<Complex> power_sums(const RhoMatrix& rho, int max_power) {
    if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
    std::vector<CompensatedSum> re(max_power), im(max_power);
    for (const Complex& r : rho.upper_) {
        Complex w = r;
        for (int m = 0; m < max_power; ++m) {
            re[m].add(w.real());
            im[m].add(w.imag());
            w *= r;
        }
    }
    std::vector<Complex> sums(max_power);
    for (int m = 0; m < max_power; ++m)
        sums[m] = 2.0 * Complex(re[m].value(), im[m].value());  // rho_ij = rho_ji
    return sums;
}

double remainder_power_sum(const RhoMatrix& rho, double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("remainder_power_sum: t must be finite and non-negative");
    CompensatedSum acc;
    for (const Complex& r : rho.upper_) {
        const double a = std::abs(r);
        const double x = a * t;
        if (x >= 1.0)
            throw std::domain_error("Taylor expansion invalid: |rho t| >= 1 for some pair");
        const double a2 = a * a;
        const double g = 1.0 - x;
        const double g2 = g * g;
        acc.add((a2 * a2) / (g2 * g2));
    }
    return 2.0 * acc.value();
}

double remainder_power_sum(const Configuration& config, const Profile& profile, double t) {
    return remainder_power_sum(rho_matrix(config, profile), t);
}

}  // namespace deltaflow
