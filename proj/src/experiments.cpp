#include "deltaflow/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "deltaflow/constructions.hpp"
#include "deltaflow/flow.hpp"
#include "deltaflow/solvers.hpp"

namespace deltaflow {

namespace {

// Absorbs the floating-point residue of the odd power sums and of
// log Delta at the starting n-gon, both of which vanish analytically.
constexpr double kAuditSlack = 1e-8;

}  // namespace

CMode CMode::parse(const std::string& text) {
    if (text == "max") return {true, 0.0};
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty())
        throw std::invalid_argument("c must be \"max\" or a number, got '" + text + "'");
    return {false, value};
}

std::vector<SweepRecord> run_sweep(const std::vector<int>& n_list, const Profile& profile,
                                   const CMode& mode,
                                   const std::function<void(const SweepRecord&)>& on_record) {
    if (n_list.empty()) throw std::invalid_argument("sweep needs at least one n");
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        if (n_list[k] < 4 || n_list[k] % 2 != 0)
            throw std::invalid_argument("sweep n values must be even and at least 4");
        if (k > 0 && n_list[k] <= n_list[k - 1])
            throw std::invalid_argument("sweep n values must be strictly ascending");
    }

    std::vector<SweepRecord> records;
    records.reserve(n_list.size());
    for (const int n : n_list) {
        const auto started = std::chrono::steady_clock::now();
        SweepRecord rec;
        rec.n = n;
        rec.profile = profile.name();
        if (mode.use_max) {
            const BindingReport report = c_max(n, profile);
            rec.c = report.c_max;
            rec.binding_angle = report.binding_angle;
        } else {
            rec.c = mode.fixed_c;
        }
        const Configuration pushed = push_construction(n, rec.c, profile);
        if (!mode.use_max) rec.binding_angle = diagnose_binding(pushed).angle;
        rec.log_ratio = log_ratio(pushed);
        rec.max_rho = rho_matrix(pushed, profile).max_abs();
        const RhoMatrix start_rho = rho_matrix(regular_ngon(n), profile);
        rec.s2_over_n2 = power_sums(start_rho, 2)[1].real() / (static_cast<double>(n) * n);
        rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        if (on_record) on_record(rec);
        records.push_back(std::move(rec));
    }
    return records;
}

ExtrapolationResult fit_inverse_n(const std::vector<double>& ns, const std::vector<double>& ys) {
    if (ns.size() != ys.size() || ns.size() < 2)
        throw std::invalid_argument("fit needs matching n and y lists of size >= 2");
    const double count = static_cast<double>(ns.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (!(ns[k] > 0.0) || !std::isfinite(ns[k]) || !std::isfinite(ys[k]))
            throw std::invalid_argument("fit needs positive n and finite values");
        mean_x += 1.0 / ns[k];
        mean_y += ys[k];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const double dx = 1.0 / ns[k] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ys[k] - mean_y);
    }
    if (sxx == 0.0) throw std::runtime_error("fit needs at least two distinct n");
    ExtrapolationResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const double r = ys[k] - (fit.intercept + fit.slope / ns[k]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / count);
    return fit;
}

ExtrapolationResult extrapolate(const std::vector<SweepRecord>& records) {
    std::set<int> distinct;
    for (const SweepRecord& r : records) distinct.insert(r.n);
    if (records.size() < 3 || distinct.size() < 3)
        throw std::runtime_error("extrapolation needs at least 3 records with distinct n");
    std::vector<double> ns, ys;
    ns.reserve(records.size());
    ys.reserve(records.size());
    for (const SweepRecord& r : records) {
        ns.push_back(static_cast<double>(r.n));
        ys.push_back(r.log_ratio);
    }
    return fit_inverse_n(ns, ys);
}

bool pommerenke_check(const Configuration& config) {
    const double n = static_cast<double>(config.n());
    return log_discriminant(config) <= 4.0 * (n - 1.0) * std::log(2.0) + n * std::log(n);
}

bool pommerenke_check(const SweepRecord& record) {
    return record.log_ratio <= 4.0 * (record.n - 1.0) * std::log(2.0);
}

TaylorAudit taylor_audit(int n, const Profile& profile, double c) {
    TaylorAudit audit;
    audit.n = n;
    audit.c = c;
    audit.t = c / n;
    {
        const RhoMatrix start_rho = rho_matrix(regular_ngon(n), profile);
        const std::vector<Complex> sums = power_sums(start_rho, 4);
        std::copy(sums.begin(), sums.end(), audit.s.begin());
        audit.max_rho_start = start_rho.max_abs();
        audit.quadratic_term = -0.5 * sums[1].real() * audit.t * audit.t;
        const double envelope = remainder_power_sum(start_rho, audit.t);
        const double t2 = audit.t * audit.t;
        audit.bound = 0.25 * envelope * t2 * t2 + kAuditSlack;
    }
    const Configuration pushed = push_construction(n, c, profile);
    audit.max_rho_pushed = rho_matrix(pushed, profile).max_abs();
    audit.log_ratio = log_ratio(pushed);
    audit.gap = std::abs(audit.log_ratio - audit.quadratic_term);
    audit.pass = audit.gap <= audit.bound;
    return audit;
}

const char* const kCsvHeader = "n,profile,c,log_ratio,max_rho,s2_over_n2,binding_angle,runtime_ms";

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const SweepRecord& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%lld\n", r.n,
                  r.profile.c_str(), r.c, r.log_ratio, r.max_rho, r.s2_over_n2, r.binding_angle,
                  r.runtime_ms);
    out << buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    write_csv_header(out);
    for (const SweepRecord& r : records) write_csv_row(out, r);
}

std::vector<SweepRecord> read_csv(std::istream& in) {
    std::vector<SweepRecord> records;
    std::string line;
    bool saw_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != kCsvHeader)
                throw std::invalid_argument("unexpected CSV header: '" + line + "'");
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 8)
            throw std::invalid_argument("CSV line " + std::to_string(lineno) +
                                        ": expected 8 fields");
        try {
            SweepRecord rec;
            rec.n = std::stoi(fields[0]);
            rec.profile = fields[1];
            rec.c = std::stod(fields[2]);
            rec.log_ratio = std::stod(fields[3]);
            rec.max_rho = std::stod(fields[4]);
            rec.s2_over_n2 = std::stod(fields[5]);
            rec.binding_angle = std::stod(fields[6]);
            rec.runtime_ms = std::stoll(fields[7]);
            records.push_back(std::move(rec));
        } catch (const std::exception&) {
            throw std::invalid_argument("CSV line " + std::to_string(lineno) +
                                        ": malformed numeric field");
        }
    }
    if (!saw_header) throw std::invalid_argument("CSV input has no header line");
    return records;
}

}  // namespace deltaflow
