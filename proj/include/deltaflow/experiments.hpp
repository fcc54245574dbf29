#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"

namespace deltaflow {

/// One sweep row. max_rho is measured on the pushed configuration;
/// s2_over_n2 is Re(S_2)/n^2 of the flow's starting n-gon, the coefficient
/// that drives the second-order term of log Delta.
struct SweepRecord {
    int n = 0;
    std::string profile;
    double c = 0.0;
    double log_ratio = 0.0;
    double max_rho = 0.0;
    double s2_over_n2 = 0.0;
    double binding_angle = 0.0;
    long long runtime_ms = 0;
};

/// Push-strength selection for sweeps: the per-n solved maximum or a fixed c.
struct CMode {
    bool use_max = true;
    double fixed_c = 0.0;

    static CMode parse(const std::string& text);  // "max" or a number
};

/// Runs one record per n, in input order. n values must be even and strictly
/// ascending. on_record, when given, is called after each row completes so
/// callers can stream partial output before a solver failure aborts the rest.
std::vector<SweepRecord> run_sweep(const std::vector<int>& n_list, const Profile& profile,
                                   const CMode& mode,
                                   const std::function<void(const SweepRecord&)>& on_record = {});

struct ExtrapolationResult {
    double intercept = 0.0;
    double slope = 0.0;
    double residual = 0.0;  // RMS of the fit residuals
};

/// Least squares y ~ intercept + slope / n.
ExtrapolationResult fit_inverse_n(const std::vector<double>& ns, const std::vector<double>& ys);

/// fit_inverse_n over (record.n, record.log_ratio); needs at least 3 records
/// with distinct n.
ExtrapolationResult extrapolate(const std::vector<SweepRecord>& records);

/// log Delta <= 4(n-1) log 2 + n log n for any diameter-2 configuration.
bool pommerenke_check(const Configuration& config);
bool pommerenke_check(const SweepRecord& record);

/// Second-order flow expansion of log Delta around the regular n-gon,
/// with the certified fourth-order envelope:
///   |log_ratio + 1/2 Re(S_2) t^2| <= 1/4 envelope(t) t^4 + slack.
struct TaylorAudit {
    int n = 0;
    double c = 0.0;
    double t = 0.0;
    std::array<Complex, 4> s{};  // S_1..S_4 at the flow start
    double max_rho_start = 0.0;
    double max_rho_pushed = 0.0;
    double log_ratio = 0.0;
    double quadratic_term = 0.0;  // -1/2 Re(S_2) t^2
    double gap = 0.0;
    double bound = 0.0;
    bool pass = false;
};
TaylorAudit taylor_audit(int n, const Profile& profile, double c);

/// CSV with the fixed header
/// n,profile,c,log_ratio,max_rho,s2_over_n2,binding_angle,runtime_ms.
/// Doubles are written with 17 significant digits; '#' lines are comments.
extern const char* const kCsvHeader;
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRecord& record);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_csv(std::istream& in);

}  // namespace deltaflow
