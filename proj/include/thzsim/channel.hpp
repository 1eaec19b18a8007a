#ifndef THZSIM_CHANNEL_HPP
#define THZSIM_CHANNEL_HPP

#include "thzsim/atmosphere.hpp"
#include "thzsim/rng.hpp"

namespace thzsim::channel {

enum class JitterInterpretation { variance, std_dev };

/// Full description of one point-to-point link.
struct LinkConfig {
    double frequency_hz = 300e9;
    double gain_tx_dbi = 55.0;
    double gain_rx_dbi = 55.0;
    double distance_m = 50.0;
    double aperture_radius_m = 0.1;   // receiver detection radius a
    double beam_waist_m = 0.6;        // TX beam footprint radius w_d at distance d
    double jitter_value = 0.01;       // m^2 (variance) or m (std_dev)
    JitterInterpretation jitter_interpretation = JitterInterpretation::variance;
    atmosphere::AtmosphericConditions conditions;

    void validate() const;
};

/// Derived geometry of the pointing-error fading distribution.
struct MisalignmentModel {
    double u = 0.0;        // sqrt(pi) a / (sqrt(2) w_d)
    double w_eq = 0.0;     // equivalent beam width [m]
    double a0 = 0.0;       // collected-power fraction at r = 0, erf(u)^2
    double gamma = 0.0;    // w_eq / (2 sigma_r)
    double sigma_r = 0.0;  // per-axis displacement standard deviation [m]
};

struct DeterministicGains {
    double h_p = 0.0;
    double h_a = 0.0;
    double product = 0.0;  // h_p * h_a
};

// Friis amplitude gain; antenna gains in dBi.
double fspl_gain(double frequency_hz, double gain_tx_dbi, double gain_rx_dbi,
                 double distance_m);

MisalignmentModel build_misalignment_model(double aperture_radius_m, double beam_waist_m,
                                           double jitter_value,
                                           JitterInterpretation interpretation);

// Collected-power fraction at radial displacement r: a0 exp(-2 r^2 / w_eq^2).
double misalignment_gain(double r_m, const MisalignmentModel& model);

// Power-law density of the misalignment gain on (0, a0].
double misalignment_pdf(double x, const MisalignmentModel& model);

// Rayleigh radial displacement draw.
double sample_pointing_error(rng::Stream& stream, double sigma_r);

DeterministicGains deterministic_gains(const LinkConfig& config);

}  // namespace thzsim::channel

#endif
