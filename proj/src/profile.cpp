#include "deltaflow/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace deltaflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEndpointSlack = 1e-9;

double clamp_theta(double theta, double lo, double hi) { return std::clamp(theta, lo, hi); }

}  // namespace

Profile Profile::linear() { return Profile(Kind::Linear, "linear"); }

Profile Profile::cosine() { return Profile(Kind::Cosine, "cosine"); }

Profile Profile::table(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("table profile needs at least two samples");
    Profile p(Kind::Table, "table");
    p.theta_.reserve(samples.size());
    p.value_.reserve(samples.size());
    for (const auto& [theta, value] : samples) {
        if (!std::isfinite(theta) || !std::isfinite(value))
            throw std::invalid_argument("table profile contains a non-finite sample");
        if (!p.theta_.empty() && theta <= p.theta_.back())
            throw std::invalid_argument(
                "table profile abscissae must be strictly increasing (duplicate or "
                "decreasing theta breaks the Lipschitz requirement)");
        p.theta_.push_back(theta);
        p.value_.push_back(value);
    }
    if (std::abs(p.theta_.front()) > kEndpointSlack || p.theta_.back() < kPi - kEndpointSlack)
        throw std::invalid_argument("table profile must cover [0, pi]");
    return p;
}

Profile Profile::load_table(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open profile table: " + file.string());
    std::vector<std::pair<double, double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream fields(body);
        double theta = 0.0, value = 0.0;
        std::string rest;
        if (!(fields >> theta >> value) || (fields >> rest))
            throw std::invalid_argument("profile table line " + std::to_string(lineno) +
                                        ": expected \"theta p\"");
        samples.emplace_back(theta, value);
    }
    return table(std::move(samples));
}

Profile Profile::from_spec(const std::string& spec) {
    if (spec == "linear") return linear();
    if (spec == "cosine") return cosine();
    if (spec.rfind("table:", 0) == 0) return load_table(spec.substr(6));
    throw std::invalid_argument("unknown profile '" + spec +
                                "' (expected linear, cosine, or table:PATH)");
}

double Profile::operator()(double theta) const {
    switch (kind_) {
        case Kind::Linear:
            theta = clamp_theta(theta, 0.0, kPi);
            return 1.0 - 2.0 * theta / kPi;
        case Kind::Cosine:
            theta = clamp_theta(theta, 0.0, kPi);
            return std::cos(theta);
        case Kind::Table:
            break;
    }
    theta = clamp_theta(theta, theta_.front(), theta_.back());
    auto hi = std::upper_bound(theta_.begin(), theta_.end(), theta);
    if (hi == theta_.end()) --hi;
    if (hi == theta_.begin()) ++hi;
    const std::size_t j = static_cast<std::size_t>(hi - theta_.begin());
    const double t = (theta - theta_[j - 1]) / (theta_[j] - theta_[j - 1]);
    return value_[j - 1] + t * (value_[j] - value_[j - 1]);
}

double Profile::derivative(double theta) const {
    switch (kind_) {
        case Kind::Linear:
            return -2.0 / kPi;
        case Kind::Cosine:
            return -std::sin(clamp_theta(theta, 0.0, kPi));
        case Kind::Table:
            break;
    }
    theta = clamp_theta(theta, theta_.front(), theta_.back());
    const auto slope = [this](std::size_t j) {
        return (value_[j + 1] - value_[j]) / (theta_[j + 1] - theta_[j]);
    };
    // Exact interior node: average the two one-sided slopes.
    auto node = std::lower_bound(theta_.begin(), theta_.end(), theta);
    if (node != theta_.end() && *node == theta) {
        const std::size_t j = static_cast<std::size_t>(node - theta_.begin());
        if (j == 0) return slope(0);
        if (j + 1 == theta_.size()) return slope(j - 1);
        return 0.5 * (slope(j - 1) + slope(j));
    }
    auto hi = std::upper_bound(theta_.begin(), theta_.end(), theta);
    if (hi == theta_.end()) --hi;
    return slope(static_cast<std::size_t>(hi - theta_.begin()) - 1);
}

double Profile::lipschitz_bound() const {
    switch (kind_) {
        case Kind::Linear:
            return 2.0 / kPi;
        case Kind::Cosine:
            return 1.0;
        case Kind::Table:
            break;
    }
    double bound = 0.0;
    for (std::size_t j = 0; j + 1 < theta_.size(); ++j)
        bound = std::max(bound,
                         std::abs((value_[j + 1] - value_[j]) / (theta_[j + 1] - theta_[j])));
    return bound;
}

}  // namespace deltaflow
