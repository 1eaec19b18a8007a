#include "thzsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thzsim::sweep {

namespace {

constexpr double kMcFeasibleSerFloor = 1e-6;
constexpr std::uint64_t kMcMaxTrials = 100000000;
constexpr double kTargetErrors = 100.0;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::uint64_t row_seed(std::uint64_t base_seed, std::uint64_t row_index) {
    std::uint64_t s = base_seed ^ (0x9e3779b97f4a7c15ULL + row_index);
    return rng::splitmix64(s);
}

}  // namespace

void SweepSpec::validate() const {
    if (snr_grid_db.empty() || distances_m.empty() || jitter_values.empty() ||
        schemes.empty() || methods.empty()) {
        throw std::domain_error("sweep grids must be non-empty");
    }
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i) {
        if (!(snr_grid_db[i] > snr_grid_db[i - 1])) {
            throw std::domain_error("SNR grid must be strictly increasing");
        }
    }
    base.validate();
    mc.validate();
}

SweepSpec SweepSpec::defaults() {
    SweepSpec spec;
    for (double snr = 0.0; snr <= 60.0; snr += 2.0) spec.snr_grid_db.push_back(snr);
    spec.distances_m = {30.0, 50.0, 80.0};
    spec.jitter_values = {0.01, 0.025, 0.05};
    spec.schemes = {ser::ModulationScheme::BPSK, ser::ModulationScheme::QPSK};
    spec.methods = {Method::closed_form, Method::mc_semi};
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<SweepRow> rows;
    std::uint64_t row_index = 0;

    for (const auto scheme : spec.schemes) {
        for (const auto method : spec.methods) {
            for (const double distance : spec.distances_m) {
                for (const double jitter : spec.jitter_values) {
                    channel::LinkConfig config = spec.base;
                    config.distance_m = distance;
                    config.jitter_value = jitter;
                    config.jitter_interpretation = spec.jitter_interpretation;

                    for (const double snr_db : spec.snr_grid_db) {
                        SweepRow row;
                        row.scheme = scheme;
                        row.method = method;
                        row.snr_db = snr_db;
                        row.distance_m = distance;
                        row.jitter_value = jitter;
                        const std::uint64_t seed = row_seed(spec.mc.seed, row_index++);
                        try {
                            const auto gains = channel::deterministic_gains(config);
                            const auto model = channel::build_misalignment_model(
                                config.aperture_radius_m, config.beam_waist_m,
                                config.jitter_value, config.jitter_interpretation);
                            const double avg_snr = db_to_linear(snr_db);
                            const auto params = ser::ser_params(avg_snr, gains, model);
                            row.a_param = params.a_param;
                            row.b_param = params.b_param;

                            const double closed =
                                scheme == ser::ModulationScheme::BPSK
                                    ? ser::avg_ser_bpsk_closed(params).value
                                    : ser::avg_ser_qpsk_closed(params).value;

                            switch (method) {
                                case Method::closed_form:
                                    row.ser = closed;
                                    break;
                                case Method::quadrature_exact: {
                                    const auto quad = ser::avg_ser_quadrature(
                                        scheme, avg_snr, gains, model, ser::QMode::exact_q);
                                    if (!quad.converged) {
                                        row.error = "quadrature did not converge, error "
                                                    "estimate " +
                                                    std::to_string(quad.error_estimate);
                                    }
                                    row.ser = quad.value;
                                    break;
                                }
                                case Method::mc_symbol:
                                case Method::mc_semi: {
                                    mc::McConfig mc_config = spec.mc;
                                    mc_config.seed = seed;
                                    mc_config.mode = method == Method::mc_symbol
                                                         ? mc::McMode::symbol_level
                                                         : mc::McMode::semi_analytic;
                                    if (spec.auto_scale_trials) {
                                        if (closed < kMcFeasibleSerFloor) {
                                            row.error = "MC-infeasible at desk scale";
                                            row.ser = 0.0;
                                            break;
                                        }
                                        const double needed =
                                            std::ceil(kTargetErrors / closed);
                                        mc_config.num_trials = std::min<std::uint64_t>(
                                            kMcMaxTrials,
                                            std::max<std::uint64_t>(
                                                mc_config.num_trials,
                                                static_cast<std::uint64_t>(needed)));
                                    }
                                    const auto estimate = mc::run_mc(
                                        mc_config, scheme, db_to_linear(snr_db), gains,
                                        model);
                                    row.ser = estimate.ser;
                                    row.half_width = estimate.half_width;
                                    break;
                                }
                            }
                        } catch (const std::exception& e) {
                            row.error = e.what();
                            row.ser = 0.0;
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return rows;
}

namespace {

// SNR (dB) at which a monotone nonincreasing curve crosses target_ser,
// log-linear in SER.
double snr_at_ser(const std::vector<SweepRow>& curve, double target_ser) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const double hi = curve[i - 1].ser;
        const double lo = curve[i].ser;
        if (hi >= target_ser && lo <= target_ser && hi > 0.0 && lo > 0.0 && hi != lo) {
            const double f = (std::log10(hi) - std::log10(target_ser)) /
                             (std::log10(hi) - std::log10(lo));
            return curve[i - 1].snr_db + f * (curve[i].snr_db - curve[i - 1].snr_db);
        }
    }
    throw std::runtime_error("curve does not bracket the target SER level");
}

}  // namespace

double snr_gap_at_ser(const std::vector<SweepRow>& curve_a,
                      const std::vector<SweepRow>& curve_b, double target_ser) {
    if (!(target_ser > 0.0 && target_ser < 1.0)) {
        throw std::domain_error("target SER must be in (0, 1)");
    }
    return std::fabs(snr_at_ser(curve_a, target_ser) - snr_at_ser(curve_b, target_ser));
}

std::vector<std::string> validity_check(const channel::LinkConfig& config) {
    std::vector<std::string> warnings;
    if (config.distance_m > 100.0) {
        warnings.push_back("distance exceeds the 100 m validity range");
    }
    const double variance =
        config.jitter_interpretation == channel::JitterInterpretation::variance
            ? config.jitter_value
            : config.jitter_value * config.jitter_value;
    if (variance > 0.05) {
        warnings.push_back("jitter variance exceeds the 0.05 m^2 validity range");
    }
    const double ratio = config.beam_waist_m / config.aperture_radius_m;
    // Tolerance keeps exact boundary ratios (such as 0.6 m / 0.1 m) in range.
    if (ratio < 6.0 * (1.0 - 1e-12) || ratio > 10.0 * (1.0 + 1e-12)) {
        warnings.push_back("beam waist to aperture radius ratio outside [6, 10]");
    }
    if (config.frequency_hz < 200e9 || config.frequency_hz > 400e9) {
        warnings.push_back("frequency outside the 200-400 GHz absorption window");
    }
    return warnings;
}

std::string to_string(Method method) {
    switch (method) {
        case Method::closed_form: return "closed_form";
        case Method::quadrature_exact: return "quadrature_exact";
        case Method::mc_symbol: return "mc_symbol";
        case Method::mc_semi: return "mc_semi";
    }
    return "unknown";
}

std::string to_string(ser::ModulationScheme scheme) {
    return scheme == ser::ModulationScheme::BPSK ? "bpsk" : "qpsk";
}

}  // namespace thzsim::sweep
