#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace deltaflow {

using Complex = std::complex<double>;

/// Ordered planar point set. The order is significant: construction formulas
/// address points by index (index k + n/2 holds the antipode of index k).
struct Configuration {
    std::vector<Complex> points;
    std::string label;

    int n() const { return static_cast<int>(points.size()); }
};

/// Neumaier compensated accumulator. Keeps sums with n^2/2 terms accurate to
/// near machine epsilon by carrying the rounding residue of every add.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Largest pairwise Euclidean distance, by exhaustive O(n^2) scan.
double diameter(const Configuration& config);

/// log of the squared product of all pairwise distances,
/// 2 * sum_{i<j} log|z_i - z_j|, accumulated with compensated summation.
/// The product itself is never formed; it overflows double well before
/// n = 200. Coincident points raise std::domain_error.
double log_discriminant(const Configuration& config);

/// log_discriminant(config) - n log n. Zero for a regular even n-gon of
/// diameter 2.
double log_ratio(const Configuration& config);

/// Uniformly scaled copy with the requested diameter.
Configuration rescale_to_diameter(const Configuration& config, double target = 2.0);

/// Text format: one "re im" pair per line, '#' starts a comment, blank lines
/// ignored. The writer emits 17 significant digits so values round-trip.
Configuration read_configuration(std::istream& in, std::string label = "stdin");
Configuration read_configuration(const std::filesystem::path& file);
void write_configuration(const Configuration& config, std::ostream& out);
void write_configuration(const Configuration& config, const std::filesystem::path& file);

}  // namespace deltaflow
