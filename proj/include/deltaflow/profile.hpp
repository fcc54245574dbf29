#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace deltaflow {

/// Push-amount interpolation p(theta) on [0, pi].
///
/// The linear kind is p(theta) = 1 - 2 theta/pi and the cosine kind is
/// cos(theta); both have p(0) = 1. A table profile interpolates
/// piecewise-linearly between user samples, which must have strictly
/// increasing abscissae covering all of [0, pi] (finite slopes everywhere is
/// what keeps the profile Lipschitz; the flow and quadrature require that).
class Profile {
public:
    enum class Kind { Linear, Cosine, Table };

    static Profile linear();
    static Profile cosine();
    static Profile table(std::vector<std::pair<double, double>> samples);
    static Profile load_table(const std::filesystem::path& file);

    /// Accepts "linear", "cosine", or "table:PATH".
    static Profile from_spec(const std::string& spec);

    /// p(theta). Arguments are clamped into [0, pi].
    double operator()(double theta) const;

    /// p'(theta); at interior table kinks the two one-sided slopes are
    /// averaged, at the endpoints the one-sided slope is used.
    double derivative(double theta) const;

    double lipschitz_bound() const;

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    Profile(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::vector<double> theta_;
    std::vector<double> value_;
};

}  // namespace deltaflow
