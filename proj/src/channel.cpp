#include "thzsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thzsim::channel {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
}

void LinkConfig::validate() const {
    if (!(frequency_hz > 0.0)) throw std::domain_error("frequency must be positive");
    if (!(distance_m > 0.0)) throw std::domain_error("distance must be positive");
    if (!(aperture_radius_m > 0.0)) throw std::domain_error("aperture radius must be positive");
    if (!(beam_waist_m > 0.0)) throw std::domain_error("beam waist must be positive");
    if (!(jitter_value > 0.0)) throw std::domain_error("jitter value must be positive");
    if (!(aperture_radius_m < beam_waist_m)) {
        throw std::domain_error("aperture radius must be smaller than the beam waist");
    }
    conditions.validate();
}

double fspl_gain(double frequency_hz, double gain_tx_dbi, double gain_rx_dbi,
                 double distance_m) {
    if (!(frequency_hz > 0.0)) throw std::domain_error("frequency must be positive");
    if (!(distance_m > 0.0)) throw std::domain_error("distance must be positive");
    const double g_tx = std::pow(10.0, gain_tx_dbi / 10.0);
    const double g_rx = std::pow(10.0, gain_rx_dbi / 10.0);
    return kSpeedOfLight * std::sqrt(g_tx * g_rx) /
           (4.0 * std::numbers::pi * distance_m * frequency_hz);
}

MisalignmentModel build_misalignment_model(double aperture_radius_m, double beam_waist_m,
                                           double jitter_value,
                                           JitterInterpretation interpretation) {
    if (!(aperture_radius_m > 0.0) || !(beam_waist_m > aperture_radius_m)) {
        throw std::domain_error("require 0 < aperture radius < beam waist");
    }
    if (!(jitter_value > 0.0)) throw std::domain_error("jitter value must be positive");

    MisalignmentModel model;
    model.u = std::sqrt(std::numbers::pi) * aperture_radius_m /
              (std::sqrt(2.0) * beam_waist_m);
    const double erf_u = std::erf(model.u);
    const double w_eq_sq = beam_waist_m * beam_waist_m * std::sqrt(std::numbers::pi) * erf_u /
                           (2.0 * model.u * std::exp(-model.u * model.u));
    model.w_eq = std::sqrt(w_eq_sq);
    model.a0 = erf_u * erf_u;
    model.sigma_r = interpretation == JitterInterpretation::std_dev
                        ? jitter_value
                        : std::sqrt(jitter_value);
    model.gamma = model.w_eq / (2.0 * model.sigma_r);
    return model;
}

double misalignment_gain(double r_m, const MisalignmentModel& model) {
    if (!(r_m >= 0.0)) throw std::domain_error("displacement must be non-negative");
    return model.a0 * std::exp(-2.0 * r_m * r_m / (model.w_eq * model.w_eq));
}

double misalignment_pdf(double x, const MisalignmentModel& model) {
    if (x <= 0.0 || x > model.a0) return 0.0;
    const double g2 = model.gamma * model.gamma;
    return g2 / std::pow(model.a0, g2) * std::pow(x, g2 - 1.0);
}

double sample_pointing_error(rng::Stream& stream, double sigma_r) {
    return stream.rayleigh(sigma_r);
}

DeterministicGains deterministic_gains(const LinkConfig& config) {
    config.validate();
    DeterministicGains gains;
    gains.h_p = fspl_gain(config.frequency_hz, config.gain_tx_dbi, config.gain_rx_dbi,
                          config.distance_m);
    gains.h_a = atmosphere::absorption_gain(config.frequency_hz, config.conditions,
                                            config.distance_m);
    gains.product = gains.h_p * gains.h_a;
    return gains;
}

}  // namespace thzsim::channel
