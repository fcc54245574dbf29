#include "deltaflow/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace deltaflow {

namespace {

void require_even(int n, const char* who) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": n must be even and at least 4, got " +
                                    std::to_string(n));
}

}  // namespace

double circle_angle(int k, int n) { return (2.0 * std::numbers::pi * k) / n; }

Configuration regular_ngon(int n) {
    if (n < 2) throw std::invalid_argument("regular_ngon: n must be at least 2");
    Configuration config;
    config.label = "ngon-" + std::to_string(n);
    config.points.resize(n);
    if (n % 2 == 0) {
        for (int k = 0; k < n / 2; ++k) {
            config.points[k] = std::polar(1.0, circle_angle(k, n));
            config.points[k + n / 2] = -config.points[k];
        }
    } else {
        const double radius = 1.0 / std::cos(std::numbers::pi / (2.0 * n));
        for (int k = 0; k < n; ++k) config.points[k] = std::polar(radius, circle_angle(k, n));
    }
    return config;
}

std::vector<double> push_offsets(int n, double c, const Profile& profile) {
    require_even(n, "push_construction");
    if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("push strength c must be finite and non-negative");
    std::vector<double> delta(n / 2);
    for (int k = 0; k < n / 2; ++k) delta[k] = (c / n) * profile(circle_angle(k, n));
    return delta;
}

Configuration push_construction(int n, double c, const Profile& profile) {
    const std::vector<double> delta = push_offsets(n, c, profile);
    Configuration config;
    config.label = "push-" + profile.name() + "-n" + std::to_string(n);
    config.points.resize(n);
    for (int k = 0; k < n / 2; ++k) {
        const Complex u = std::polar(1.0, circle_angle(k, n));
        config.points[k] = (1.0 + delta[k]) * u;
        config.points[k + n / 2] = (-(1.0 - delta[k])) * u;
    }
    return config;
}

Configuration push_construction(const ConstructionSpec& spec) {
    return push_construction(spec.n, spec.c, spec.profile);
}

Configuration single_diameter_move(int n, double eps) {
    require_even(n, "single_diameter_move");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("eps must be finite and non-negative");
    Configuration config = regular_ngon(n);
    config.label = "move-n" + std::to_string(n);
    config.points[0] += eps;
    config.points[n / 2] += eps;
    return config;
}

}  // namespace deltaflow
