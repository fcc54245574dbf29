#include "deltaflow/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace deltaflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDiagonalThreshold = 1e-6;
constexpr int kMaxGrid = 1 << 20;

Complex f_value(double u, const Profile& p) { return p(0.5 * u) * std::polar(1.0, 0.5 * u); }

// f'(u) = (1/2) e^{iu/2} (p'(u/2) + i p(u/2))
Complex f_derivative(double u, const Profile& p) {
    return 0.5 * std::polar(1.0, 0.5 * u) * Complex(p.derivative(0.5 * u), p(0.5 * u));
}

Complex diagonal_limit(double s, const Profile& p) {
    const Complex fp = f_derivative(s, p);
    return -2.0 * std::polar(1.0, -s) * fp * fp;
}

Complex midpoint_sum(const Profile& profile, int m) {
    const double h = kTwoPi / m;
    std::vector<Complex> f(m), e(m);
    CompensatedSum re, im;
    for (int i = 0; i < m; ++i) {
        const double u = (i + 0.5) * h;
        f[i] = f_value(u, profile);
        e[i] = std::polar(1.0, u);
        const Complex d = diagonal_limit(u, profile);
        re.add(d.real());
        im.add(d.imag());
    }
    // The integrand is symmetric in (x, y), bit-for-bit, so each off-diagonal
    // cell is counted twice.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Complex df = f[i] - f[j];
            const Complex de = e[i] - e[j];
            const Complex g = df * df * (e[i] + e[j]) / (de * de);
            re.add(2.0 * g.real());
            im.add(2.0 * g.imag());
        }
    }
    return h * h * Complex(re.value(), im.value());
}

}  // namespace

Complex integrand(double x, double y, const Profile& profile) {
    if (!(x >= -1e-9 && x <= kTwoPi + 1e-9 && y >= -1e-9 && y <= kTwoPi + 1e-9))
        throw std::invalid_argument("integrand arguments must lie in [0, 2pi]");
    if (std::abs(x - y) < kDiagonalThreshold) return diagonal_limit(0.5 * (x + y), profile);
    const Complex ex = std::polar(1.0, x);
    const Complex ey = std::polar(1.0, y);
    const Complex df = f_value(x, profile) - f_value(y, profile);
    const Complex de = ex - ey;
    return df * df * (ex + ey) / (de * de);
}

QuadratureResult integral_I(const Profile& profile, int grid_size) {
    if (grid_size < 8) throw std::invalid_argument("quadrature grid must be at least 8");
    if (grid_size > kMaxGrid) throw std::invalid_argument("quadrature grid is unreasonably large");
    const Complex coarse = midpoint_sum(profile, grid_size);
    const Complex fine = midpoint_sum(profile, 2 * grid_size);
    return {coarse, grid_size, std::abs(coarse - fine)};
}

double limit_constant(double I_real) {
    if (!std::isfinite(I_real)) throw std::invalid_argument("I must be finite");
    return std::exp(-I_real * std::numbers::pi * std::numbers::pi / 128.0);
}

}  // namespace deltaflow
