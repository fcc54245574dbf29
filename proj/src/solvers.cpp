#include "deltaflow/solvers.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "deltaflow/constructions.hpp"
#include "deltaflow/flow.hpp"

namespace deltaflow {

namespace {

constexpr double kPushBracket = 8.0;
constexpr double kMoveBracket = 1.0;
constexpr int kMaxIterations = 200;

struct Bisection {
    double feasible = 0.0;
    int iterations = 0;
};

Bisection bisect_feasible(const std::function<bool(double)>& feasible, double hi, double tol,
                          const char* what) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be positive");
    if (!feasible(tol))
        throw std::runtime_error(std::string(what) + ": infeasible already at the tolerance");
    if (feasible(hi))
        throw std::runtime_error(std::string(what) + ": bracket failure, still feasible at " +
                                 std::to_string(hi));
    double lo = 0.0;
    int it = 0;
    while (hi - lo > tol) {
        if (++it > kMaxIterations)
            throw std::runtime_error(std::string(what) + ": bisection failed to converge");
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return {lo, it};
}

}  // namespace

BindingDiagnosis diagnose_binding(const Configuration& config) {
    const auto& z = config.points;
    const int n = config.n();
    if (n < 2) throw std::invalid_argument("binding diagnosis needs at least 2 points");
    const int stride = n % 2 == 0 ? n / 2 : -1;
    BindingDiagnosis out;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j - i == stride) continue;
            const double d2 = std::norm(z[i] - z[j]);
            if (d2 > best) {
                best = d2;
                out.i = i;
                out.j = j;
            }
        }
    }
    if (out.i < 0) throw std::domain_error("binding diagnosis: every pair is excluded");
    out.distance = std::sqrt(best);
    double angle = std::abs(arg_branch(z[out.i]) - arg_branch(z[out.j]));
    if (angle > std::numbers::pi) angle = 2.0 * std::numbers::pi - angle;
    out.angle = angle;
    return out;
}

bool push_within_diameter(int n, double c, const Profile& profile) {
    const Configuration config = push_construction(n, c, profile);
    const auto& z = config.points;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j - i == n / 2) continue;
            if (std::norm(z[i] - z[j]) > 4.0) return false;
        }
    }
    return true;
}

bool move_within_diameter(int n, double eps) {
    const Configuration config = single_diameter_move(n, eps);
    const auto& z = config.points;
    for (const int moved : {0, n / 2}) {
        for (int j = 0; j < n; ++j) {
            if (j == 0 || j == n / 2) continue;
            if (std::norm(z[moved] - z[j]) > 4.0) return false;
        }
    }
    return true;
}

BindingReport c_max(int n, const Profile& profile, double tol) {
    const auto result = bisect_feasible([&](double c) { return push_within_diameter(n, c, profile); },
                                        kPushBracket, tol, "c_max");
    const BindingDiagnosis diag = diagnose_binding(push_construction(n, result.feasible, profile));
    return {result.feasible, {diag.i, diag.j}, diag.angle, result.iterations};
}

double t_max(int n, const Profile& profile, double tol) { return c_max(n, profile, tol).c_max / n; }

double eps_max(int n, double tol) {
    return bisect_feasible([&](double eps) { return move_within_diameter(n, eps); }, kMoveBracket,
                           tol, "eps_max")
        .feasible;
}

double t_max_estimate(int n, const Profile& profile) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("t_max_estimate: n must be even and at least 4");
    const Configuration config = regular_ngon(n);
    const auto& z = config.points;
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = vector_field_at(z[i], profile);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j - i == n / 2) continue;
            const Complex dz = z[i] - z[j];
            const double rate = ((v[i] - v[j]) / dz).real();
            if (rate <= 0.0) continue;  // the pair contracts or stalls
            best = std::min(best, -std::log(0.5 * std::abs(dz)) / rate);
        }
    }
    if (!std::isfinite(best))
        throw std::runtime_error("t_max_estimate: no expanding pair found");
    return best;
}

}  // namespace deltaflow
