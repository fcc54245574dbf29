#include "deltaflow/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace deltaflow {

namespace {

void require_points(const Configuration& config, int min_n) {
    if (config.n() < min_n)
        throw std::invalid_argument("configuration needs at least " + std::to_string(min_n) +
                                    " points, got " + std::to_string(config.n()));
    for (const Complex& z : config.points)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("configuration contains a non-finite point");
}

}  // namespace

double diameter(const Configuration& config) {
    require_points(config, 2);
    const auto& z = config.points;
    const int n = config.n();
    double best = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            best = std::max(best, std::abs(z[i] - z[j]));
    return best;
}

double log_discriminant(const Configuration& config) {
    require_points(config, 2);
    const auto& z = config.points;
    const int n = config.n();
    CompensatedSum acc;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = std::abs(z[i] - z[j]);
            if (d == 0.0)
                throw std::domain_error("degenerate configuration: points " + std::to_string(i) +
                                        " and " + std::to_string(j) + " coincide");
            acc.add(std::log(d));
        }
    }
    return 2.0 * acc.value();
}

double log_ratio(const Configuration& config) {
    const double n = static_cast<double>(config.n());
    return log_discriminant(config) - n * std::log(n);
}

Configuration rescale_to_diameter(const Configuration& config, double target) {
    if (!(target > 0.0) || !std::isfinite(target))
        throw std::invalid_argument("target diameter must be positive and finite");
    const double d = diameter(config);
    if (d == 0.0) throw std::domain_error("cannot rescale a zero-diameter configuration");
    Configuration out = config;
    const double scale = target / d;
    for (Complex& z : out.points) z *= scale;
    return out;
}

Configuration read_configuration(std::istream& in, std::string label) {
    Configuration config;
    config.label = std::move(label);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream fields(body);
        double re = 0.0, im = 0.0;
        std::string rest;
        if (!(fields >> re >> im) || (fields >> rest))
            throw std::invalid_argument("configuration line " + std::to_string(lineno) +
                                        ": expected \"re im\"");
        config.points.emplace_back(re, im);
    }
    require_points(config, 2);
    return config;
}

Configuration read_configuration(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open configuration file: " + file.string());
    return read_configuration(in, file.stem().string());
}

void write_configuration(const Configuration& config, std::ostream& out) {
    char buf[80];
    for (const Complex& z : config.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
        out << buf;
    }
}

void write_configuration(const Configuration& config, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::invalid_argument("cannot open output file: " + file.string());
    write_configuration(config, out);
}

}  // namespace deltaflow
