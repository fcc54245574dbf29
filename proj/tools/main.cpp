// deltaflow command line: generators, evaluators, solvers and sweeps for
// diameter-2 planar configurations and their distance products.
//
// Machine output goes to stdout as single-line JSON or CSV; progress and
// diagnostics go to stderr. Exit codes: 0 success, 1 usage or input error,
// 2 numerical or solver failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltaflow/constructions.hpp"
#include "deltaflow/experiments.hpp"
#include "deltaflow/flow.hpp"
#include "deltaflow/geometry.hpp"
#include "deltaflow/profile.hpp"
#include "deltaflow/quadrature.hpp"
#include "deltaflow/solvers.hpp"

namespace {

using json = nlohmann::ordered_json;

void emit_json(const json& payload) { std::cout << payload.dump() << "\n"; }

void emit_configuration(const deltaflow::Configuration& config, const std::string& out) {
    if (out.empty())
        deltaflow::write_configuration(config, std::cout);
    else
        deltaflow::write_configuration(config, std::filesystem::path(out));
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> ns;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty())
            throw std::invalid_argument("bad n-list entry '" + item + "'");
        ns.push_back(value);
    }
    if (ns.empty()) throw std::invalid_argument("n-list is empty");
    return ns;
}

double resolve_c(int n, const deltaflow::Profile& profile, const std::string& text) {
    const deltaflow::CMode mode = deltaflow::CMode::parse(text);
    if (!mode.use_max) return mode.fixed_c;
    const double value = deltaflow::c_max(n, profile).c_max;
    std::cerr << "c_max(" << n << ", " << profile.name() << ") = " << value << "\n";
    return value;
}

json complex_pair(const deltaflow::Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diameter-2 point configurations: distance products, flows, sweeps"};
    app.require_subcommand(1);

    // ngon
    auto ngon_n = std::make_shared<int>(0);
    auto ngon_out = std::make_shared<std::string>();
    auto* ngon = app.add_subcommand("ngon", "regular n-gon rescaled to diameter 2");
    ngon->add_option("--n", *ngon_n, "number of vertices (>= 2)")->required();
    ngon->add_option("--out", *ngon_out, "output file (default: stdout)");
    ngon->callback([=] { emit_configuration(deltaflow::regular_ngon(*ngon_n), *ngon_out); });

    // construct
    auto con_n = std::make_shared<int>(0);
    auto con_profile = std::make_shared<std::string>();
    auto con_c = std::make_shared<std::string>();
    auto con_out = std::make_shared<std::string>();
    auto* con = app.add_subcommand("construct", "push construction for even n");
    con->add_option("--n", *con_n, "even number of points (>= 4)")->required();
    con->add_option("--profile", *con_profile, "linear | cosine | table:PATH")->required();
    con->add_option("--c", *con_c, "push strength: max | VALUE")->required();
    con->add_option("--out", *con_out, "output file (default: stdout)");
    con->callback([=] {
        const deltaflow::Profile profile = deltaflow::Profile::from_spec(*con_profile);
        const double c = resolve_c(*con_n, profile, *con_c);
        emit_configuration(deltaflow::push_construction(*con_n, c, profile), *con_out);
    });

    // delta
    auto delta_in = std::make_shared<std::string>();
    auto* delta = app.add_subcommand("delta", "log distance product of a configuration file");
    delta->add_option("--in", *delta_in, "configuration file")->required();
    delta->callback([=] {
        const auto config = deltaflow::read_configuration(std::filesystem::path(*delta_in));
        const double log_delta = deltaflow::log_discriminant(config);
        emit_json({{"n", config.n()},
                   {"log_delta", log_delta},
                   {"log_ratio", log_delta - config.n() * std::log(double(config.n()))}});
    });

    // diameter
    auto diam_in = std::make_shared<std::string>();
    auto* diam = app.add_subcommand("diameter", "diameter of a configuration file");
    diam->add_option("--in", *diam_in, "configuration file")->required();
    diam->callback([=] {
        const auto config = deltaflow::read_configuration(std::filesystem::path(*diam_in));
        emit_json({{"n", config.n()}, {"diameter", deltaflow::diameter(config)}});
    });

    // cmax
    auto cmax_n = std::make_shared<int>(0);
    auto cmax_profile = std::make_shared<std::string>();
    auto cmax_tol = std::make_shared<double>(1e-10);
    auto* cmax = app.add_subcommand("cmax", "largest diameter-preserving push strength");
    cmax->add_option("--n", *cmax_n, "even number of points (>= 4)")->required();
    cmax->add_option("--profile", *cmax_profile, "linear | cosine | table:PATH")->required();
    cmax->add_option("--tol", *cmax_tol, "bisection width (default 1e-10)");
    cmax->callback([=] {
        const deltaflow::Profile profile = deltaflow::Profile::from_spec(*cmax_profile);
        const deltaflow::BindingReport report = deltaflow::c_max(*cmax_n, profile, *cmax_tol);
        emit_json({{"n", *cmax_n},
                   {"profile", profile.name()},
                   {"tol", *cmax_tol},
                   {"c_max", report.c_max},
                   {"binding_pair", {report.binding_pair.first, report.binding_pair.second}},
                   {"binding_angle", report.binding_angle},
                   {"iterations", report.iterations}});
    });

    // integral
    auto int_profile = std::make_shared<std::string>();
    auto int_grid = std::make_shared<int>(0);
    auto* integral = app.add_subcommand("integral", "critical integral I and the constant C");
    integral->add_option("--profile", *int_profile, "linear | cosine | table:PATH")->required();
    integral->add_option("--grid", *int_grid, "midpoint grid size m (>= 8)")->required();
    integral->callback([=] {
        const deltaflow::Profile profile = deltaflow::Profile::from_spec(*int_profile);
        const deltaflow::QuadratureResult result = deltaflow::integral_I(profile, *int_grid);
        emit_json({{"profile", profile.name()},
                   {"grid", result.grid_size},
                   {"re", result.value.real()},
                   {"im", result.value.imag()},
                   {"refinement_gap", result.refinement_gap},
                   {"C", deltaflow::limit_constant(result.value.real())}});
    });

    // sweep
    auto sweep_list = std::make_shared<std::string>();
    auto sweep_profile = std::make_shared<std::string>();
    auto sweep_out = std::make_shared<std::string>();
    auto sweep_c = std::make_shared<std::string>("max");
    auto* sweep = app.add_subcommand("sweep", "per-n sweep written as CSV");
    sweep->add_option("--n-list", *sweep_list, "comma-separated even n values, ascending")
        ->required();
    sweep->add_option("--profile", *sweep_profile, "linear | cosine | table:PATH")->required();
    sweep->add_option("--out", *sweep_out, "output CSV file")->required();
    sweep->add_option("--c", *sweep_c, "push strength: max | VALUE (default max)");
    sweep->callback([=] {
        const deltaflow::Profile profile = deltaflow::Profile::from_spec(*sweep_profile);
        const deltaflow::CMode mode = deltaflow::CMode::parse(*sweep_c);
        const std::vector<int> ns = parse_n_list(*sweep_list);
        std::ofstream out(*sweep_out);
        if (!out) throw std::invalid_argument("cannot open output file: " + *sweep_out);
        deltaflow::write_csv_header(out);
        try {
            deltaflow::run_sweep(ns, profile, mode, [&](const deltaflow::SweepRecord& rec) {
                deltaflow::write_csv_row(out, rec);
                out.flush();
                std::cerr << "n=" << rec.n << " c=" << rec.c << " log_ratio=" << rec.log_ratio
                          << " (" << rec.runtime_ms << " ms)\n";
            });
        } catch (const std::exception& e) {
            out << "# aborted: " << e.what() << "\n";
            throw;
        }
    });

    // extrapolate
    auto ext_in = std::make_shared<std::string>();
    auto* ext = app.add_subcommand("extrapolate", "affine-in-1/n fit of log_ratio from a sweep CSV");
    ext->add_option("--in", *ext_in, "sweep CSV file")->required();
    ext->callback([=] {
        std::ifstream in(*ext_in);
        if (!in) throw std::invalid_argument("cannot open CSV file: " + *ext_in);
        const auto records = deltaflow::read_csv(in);
        const deltaflow::ExtrapolationResult fit = deltaflow::extrapolate(records);
        emit_json({{"intercept", fit.intercept},
                   {"slope", fit.slope},
                   {"residual", fit.residual},
                   {"records", records.size()}});
    });

    // rho-audit
    auto audit_n = std::make_shared<int>(0);
    auto audit_profile = std::make_shared<std::string>();
    auto audit_c = std::make_shared<std::string>();
    auto* audit_cmd = app.add_subcommand("rho-audit", "power sums and the log Delta expansion audit");
    audit_cmd->add_option("--n", *audit_n, "even number of points (>= 4)")->required();
    audit_cmd->add_option("--profile", *audit_profile, "linear | cosine | table:PATH")->required();
    audit_cmd->add_option("--c", *audit_c, "push strength: max | VALUE")->required();
    audit_cmd->callback([=] {
        const deltaflow::Profile profile = deltaflow::Profile::from_spec(*audit_profile);
        const double c = resolve_c(*audit_n, profile, *audit_c);
        const deltaflow::TaylorAudit audit = deltaflow::taylor_audit(*audit_n, profile, c);
        emit_json({{"n", audit.n},
                   {"profile", profile.name()},
                   {"c", audit.c},
                   {"t", audit.t},
                   {"s1", complex_pair(audit.s[0])},
                   {"s2", complex_pair(audit.s[1])},
                   {"s3", complex_pair(audit.s[2])},
                   {"s4", complex_pair(audit.s[3])},
                   {"max_rho_start", audit.max_rho_start},
                   {"max_rho_pushed", audit.max_rho_pushed},
                   {"log_ratio", audit.log_ratio},
                   {"quadratic_term", audit.quadratic_term},
                   {"gap", audit.gap},
                   {"bound", audit.bound},
                   {"pass", audit.pass}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
