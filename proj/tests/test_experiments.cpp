#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "deltaflow/constructions.hpp"
#include "deltaflow/experiments.hpp"
#include "deltaflow/geometry.hpp"
#include "deltaflow/solvers.hpp"

using deltaflow::CMode;
using deltaflow::Profile;
using deltaflow::SweepRecord;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("CMode parsing") {
    CHECK(CMode::parse("max").use_max);
    const CMode fixed = CMode::parse("2.5");
    CHECK_FALSE(fixed.use_max);
    CHECK(fixed.fixed_c == 2.5);
    CHECK_THROWS_AS(CMode::parse("junk"), std::invalid_argument);
    CHECK_THROWS_AS(CMode::parse("2.5x"), std::invalid_argument);
    CHECK_THROWS_AS(CMode::parse(""), std::invalid_argument);
}

TEST_CASE("extrapolate recovers an exact affine law") {
    std::vector<SweepRecord> records;
    for (const int n : {100, 200, 400, 800}) {
        SweepRecord rec;
        rec.n = n;
        rec.log_ratio = 0.03712 + 1.0 / n;
        records.push_back(rec);
    }
    const auto fit = deltaflow::extrapolate(records);
    CHECK(fit.intercept == doctest::Approx(0.03712).epsilon(1e-12));
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.residual <= 1e-12);
}

TEST_CASE("extrapolate of constant records has zero slope") {
    std::vector<SweepRecord> records;
    for (const int n : {10, 20, 40}) {
        SweepRecord rec;
        rec.n = n;
        rec.log_ratio = 0.25;
        records.push_back(rec);
    }
    const auto fit = deltaflow::extrapolate(records);
    CHECK(std::abs(fit.slope) <= 1e-12);
    CHECK(fit.intercept == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("fit rejects non-positive n and non-finite values") {
    CHECK_THROWS_AS(deltaflow::fit_inverse_n({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(deltaflow::fit_inverse_n({1.0, 2.0}, {1.0, std::nan("")}),
                    std::invalid_argument);
}

TEST_CASE("extrapolate requires three distinct n") {
    std::vector<SweepRecord> two(2);
    two[0].n = 10;
    two[1].n = 20;
    CHECK_THROWS_AS(deltaflow::extrapolate(two), std::runtime_error);
    std::vector<SweepRecord> dup(3);
    dup[0].n = 10;
    dup[1].n = 10;
    dup[2].n = 20;
    CHECK_THROWS_AS(deltaflow::extrapolate(dup), std::runtime_error);
}

TEST_CASE("pommerenke bound") {
    CHECK(deltaflow::pommerenke_check(deltaflow::regular_ngon(16)));
    CHECK(deltaflow::pommerenke_check(deltaflow::regular_ngon(101)));
    SweepRecord inflated;
    inflated.n = 16;
    inflated.log_ratio = 5.0 * 16;
    CHECK_FALSE(deltaflow::pommerenke_check(inflated));
}

TEST_CASE("run_sweep on the smallest case") {
    const auto records = deltaflow::run_sweep({4}, Profile::linear(), CMode::parse("max"));
    REQUIRE(records.size() == 1);
    const SweepRecord& rec = records[0];
    CHECK(rec.n == 4);
    CHECK(rec.profile == "linear");
    CHECK(rec.c == doctest::Approx(4.0 * (std::sqrt(3.0) - 1.0)).epsilon(1e-9));
    CHECK(rec.log_ratio > 0.1);
    CHECK(rec.binding_angle == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(deltaflow::pommerenke_check(rec));
}

TEST_CASE("run_sweep validates its input") {
    CHECK_THROWS_AS(deltaflow::run_sweep({}, Profile::linear(), CMode::parse("max")),
                    std::invalid_argument);
    CHECK_THROWS_AS(deltaflow::run_sweep({7}, Profile::linear(), CMode::parse("max")),
                    std::invalid_argument);
    CHECK_THROWS_AS(deltaflow::run_sweep({16, 8}, Profile::linear(), CMode::parse("max")),
                    std::invalid_argument);
    CHECK_THROWS_AS(deltaflow::run_sweep({8, 8}, Profile::linear(), CMode::parse("max")),
                    std::invalid_argument);
}

TEST_CASE("sweeps are deterministic apart from wall-clock times") {
    const auto a = deltaflow::run_sweep({8, 16}, Profile::linear(), CMode::parse("max"));
    const auto b = deltaflow::run_sweep({8, 16}, Profile::linear(), CMode::parse("max"));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].n == b[k].n);
        CHECK(a[k].profile == b[k].profile);
        CHECK(a[k].c == b[k].c);
        CHECK(a[k].log_ratio == b[k].log_ratio);
        CHECK(a[k].max_rho == b[k].max_rho);
        CHECK(a[k].s2_over_n2 == b[k].s2_over_n2);
        CHECK(a[k].binding_angle == b[k].binding_angle);
    }
}

TEST_CASE("fixed-c sweeps fill the binding angle from the configuration") {
    const auto records = deltaflow::run_sweep({8}, Profile::linear(), CMode::parse("1.0"));
    REQUIRE(records.size() == 1);
    CHECK(records[0].c == 1.0);
    CHECK(records[0].binding_angle > 0.0);
    CHECK(records[0].binding_angle <= kPi);
}

TEST_CASE("sweep callback streams records in order") {
    std::vector<int> seen;
    deltaflow::run_sweep({8, 16}, Profile::linear(), CMode::parse("max"),
                         [&](const SweepRecord& rec) { seen.push_back(rec.n); });
    CHECK(seen == std::vector<int>{8, 16});
}

TEST_CASE("CSV round trip and header") {
    const auto records = deltaflow::run_sweep({8, 16}, Profile::linear(), CMode::parse("max"));
    std::ostringstream out;
    deltaflow::write_csv(out, records);
    const std::string text = out.str();
    CHECK(text.rfind("n,profile,c,log_ratio,max_rho,s2_over_n2,binding_angle,runtime_ms\n", 0) ==
          0);

    std::istringstream in(text);
    const auto back = deltaflow::read_csv(in);
    REQUIRE(back.size() == records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
        CHECK(back[k].n == records[k].n);
        CHECK(back[k].profile == records[k].profile);
        CHECK(back[k].c == records[k].c);
        CHECK(back[k].log_ratio == records[k].log_ratio);
        CHECK(back[k].max_rho == records[k].max_rho);
        CHECK(back[k].s2_over_n2 == records[k].s2_over_n2);
        CHECK(back[k].binding_angle == records[k].binding_angle);
        CHECK(back[k].runtime_ms == records[k].runtime_ms);
    }

    // Two identical sweeps serialize to identical bytes, runtimes aside.
    const auto again = deltaflow::run_sweep({8, 16}, Profile::linear(), CMode::parse("max"));
    std::ostringstream out2;
    deltaflow::write_csv(out2, again);
    auto strip_runtime = [](std::string s) {
        std::istringstream lines(s);
        std::string line, kept;
        while (std::getline(lines, line)) kept += line.substr(0, line.rfind(',')) + "\n";
        return kept;
    };
    CHECK(strip_runtime(out.str()) == strip_runtime(out2.str()));
}

TEST_CASE("CSV reader rejects junk and skips comments") {
    {
        std::istringstream in("nope,profile\n");
        CHECK_THROWS_AS(deltaflow::read_csv(in), std::invalid_argument);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_AS(deltaflow::read_csv(in), std::invalid_argument);
    }
    {
        std::istringstream in(
            "n,profile,c,log_ratio,max_rho,s2_over_n2,binding_angle,runtime_ms\n"
            "# aborted: solver exploded\n"
            "8,linear,1,0.1,1.1,-0.01,3.0,5\n");
        const auto records = deltaflow::read_csv(in);
        REQUIRE(records.size() == 1);
        CHECK(records[0].n == 8);
    }
    {
        std::istringstream in(
            "n,profile,c,log_ratio,max_rho,s2_over_n2,binding_angle,runtime_ms\n"
            "8,linear,1,0.1\n");
        CHECK_THROWS_AS(deltaflow::read_csv(in), std::invalid_argument);
    }
}

TEST_CASE("persisted configurations reproduce log_ratio") {
    const double c = deltaflow::c_max(16, Profile::linear()).c_max;
    const auto config = deltaflow::push_construction(16, c, Profile::linear());
    const auto path = std::filesystem::temp_directory_path() / "deltaflow_selfcheck.txt";
    deltaflow::write_configuration(config, path);
    const auto back = deltaflow::read_configuration(path);
    CHECK(std::abs(deltaflow::log_ratio(back) - deltaflow::log_ratio(config)) <= 1e-10);
    std::filesystem::remove(path);
}

TEST_CASE("taylor audit certifies the expansion") {
    for (const int n : {64, 128}) {
        const double c = deltaflow::c_max(n, Profile::linear()).c_max;
        const auto audit = deltaflow::taylor_audit(n, Profile::linear(), c);
        CHECK(audit.pass);
        CHECK(audit.gap <= audit.bound);
        CHECK(std::abs(audit.s[0]) <= 1e-9 * n * n);
        CHECK(std::abs(audit.s[2]) <= 1e-9 * n * n);
        CHECK(audit.quadratic_term == doctest::Approx(audit.log_ratio).epsilon(0.05));
        CHECK(audit.max_rho_start <= 2.58);
        CHECK(audit.max_rho_pushed <= 2.58);
    }
    const auto fixed = deltaflow::taylor_audit(64, Profile::linear(), 1.0);
    CHECK(fixed.pass);
}
