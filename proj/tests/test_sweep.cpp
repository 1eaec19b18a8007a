#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "thzsim/io.hpp"
#include "thzsim/sweep.hpp"

using namespace thzsim;
using namespace thzsim::sweep;

namespace {

SweepSpec small_spec() {
    SweepSpec spec = SweepSpec::defaults();
    spec.snr_grid_db.clear();
    for (double snr = 0.0; snr <= 40.0; snr += 2.0) spec.snr_grid_db.push_back(snr);
    spec.jitter_values = {0.01};
    spec.methods = {Method::closed_form, Method::quadrature_exact};
    return spec;
}

std::vector<SweepRow> curve_of(const std::vector<SweepRow>& rows,
                               ser::ModulationScheme scheme, Method method,
                               double distance, double jitter) {
    std::vector<SweepRow> curve;
    for (const auto& row : rows) {
        if (row.scheme == scheme && row.method == method && row.distance_m == distance &&
            row.jitter_value == jitter) {
            curve.push_back(row);
        }
    }
    return curve;
}

}  // namespace

TEST_CASE("sweep produces the full Cartesian product") {
    SweepSpec spec = small_spec();
    // 21 SNR x 3 distances x 1 jitter x 2 schemes x 2 methods
    const auto rows = run_sweep(spec);
    CHECK(rows.size() == 252);
}

TEST_CASE("closed-form rows delegate to the closed form") {
    SweepSpec spec = small_spec();
    spec.distances_m = {50.0};
    const auto rows = run_sweep(spec);
    for (const auto& row : rows) {
        if (row.method != Method::closed_form ||
            row.scheme != ser::ModulationScheme::BPSK) {
            continue;
        }
        const ser::SerParams params{row.a_param, row.b_param};
        CHECK(row.ser == ser::avg_ser_bpsk_closed(params).value);
    }
}

TEST_CASE("closed-form curves are monotone nonincreasing in SNR") {
    const auto rows = run_sweep(small_spec());
    for (auto scheme : {ser::ModulationScheme::BPSK, ser::ModulationScheme::QPSK}) {
        for (double d : {30.0, 50.0, 80.0}) {
            const auto curve = curve_of(rows, scheme, Method::closed_form, d, 0.01);
            REQUIRE(curve.size() == 21);
            for (std::size_t i = 1; i < curve.size(); ++i) {
                CHECK(curve[i].ser <= curve[i - 1].ser);
            }
        }
    }
}

TEST_CASE("SER grows with distance and jitter at fixed SNR") {
    SweepSpec spec = small_spec();
    spec.jitter_values = {0.01, 0.025, 0.05};
    spec.methods = {Method::closed_form};
    const auto rows = run_sweep(spec);
    for (const auto& row : rows) {
        for (const auto& other : rows) {
            if (row.scheme != other.scheme || row.snr_db != other.snr_db) continue;
            if (row.jitter_value == other.jitter_value &&
                row.distance_m < other.distance_m) {
                CHECK(row.ser <= other.ser);
            }
            if (row.distance_m == other.distance_m &&
                row.jitter_value < other.jitter_value) {
                CHECK(row.ser <= other.ser);
            }
        }
    }
}

TEST_CASE("row errors are recorded, not thrown") {
    SweepSpec spec = small_spec();
    spec.base.frequency_hz = 500e9;  // outside the absorption window
    const auto rows = run_sweep(spec);
    REQUIRE(!rows.empty());
    for (const auto& row : rows) {
        CHECK(!row.error.empty());
    }
}

TEST_CASE("sweep output is reproducible") {
    SweepSpec spec = small_spec();
    spec.snr_grid_db = {10.0, 20.0, 30.0};
    spec.distances_m = {50.0};
    spec.methods = {Method::closed_form, Method::mc_semi};
    spec.mc.num_trials = 50000;
    spec.mc.seed = 99;

    std::ostringstream first, second;
    io::write_rows(run_sweep(spec), io::OutputFormat::csv, first);
    io::write_rows(run_sweep(spec), io::OutputFormat::csv, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("snr gap metric") {
    SweepSpec spec = small_spec();
    spec.snr_grid_db.clear();
    for (double snr = 0.0; snr <= 70.0; snr += 2.0) spec.snr_grid_db.push_back(snr);
    const auto rows = run_sweep(spec);
    const auto curve = curve_of(rows, ser::ModulationScheme::BPSK, Method::closed_form,
                                50.0, 0.01);

    CHECK(snr_gap_at_ser(curve, curve, 1e-2) == 0.0);

    auto shifted = curve;
    for (auto& row : shifted) row.snr_db += 1.0;
    CHECK(snr_gap_at_ser(curve, shifted, 1e-2) == doctest::Approx(1.0).epsilon(1e-9));

    // Chernoff looseness between the bound and the exact average, expected
    // under 2 dB.
    const auto exact = curve_of(rows, ser::ModulationScheme::BPSK,
                                Method::quadrature_exact, 50.0, 0.01);
    const double gap = snr_gap_at_ser(curve, exact, 1e-4);
    CHECK(gap > 0.0);
    CHECK(gap < 2.0);

    CHECK_THROWS_AS(snr_gap_at_ser(curve, exact, 1e-30), std::runtime_error);
}

TEST_CASE("validity check") {
    channel::LinkConfig config;  // stock parameters, d = 50 m
    CHECK(validity_check(config).empty());

    config.distance_m = 150.0;
    auto warnings = validity_check(config);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("distance") != std::string::npos);

    config = channel::LinkConfig{};
    config.beam_waist_m = 0.3;  // ratio 3, below the stated range
    warnings = validity_check(config);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("ratio") != std::string::npos);

    config = channel::LinkConfig{};
    config.jitter_value = 0.08;
    warnings = validity_check(config);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("jitter") != std::string::npos);

    config = channel::LinkConfig{};
    config.frequency_hz = 150e9;
    warnings = validity_check(config);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("frequency") != std::string::npos);
}

TEST_CASE("spec validation") {
    SweepSpec spec = small_spec();
    spec.snr_grid_db = {10.0, 10.0};
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
    spec = small_spec();
    spec.schemes.clear();
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
}
