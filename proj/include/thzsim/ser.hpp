#ifndef THZSIM_SER_HPP
#define THZSIM_SER_HPP

#include "thzsim/channel.hpp"
#include "thzsim/quadrature.hpp"

namespace thzsim::ser {

enum class ModulationScheme { BPSK, QPSK };

/// (A, B) pair driving both closed-form average-SER expressions:
/// A = rho * a0^2 (h_p h_a)^2, B = gamma^2 / 2.
struct SerParams {
    double a_param = 0.0;
    double b_param = 0.0;
};

/// Closed-form result; log_value stays finite when value underflows to 0.
struct SerBound {
    double value = 0.0;
    double log_value = 0.0;  // natural log of the bound
};

enum class QMode { exact_q, chernoff_q };

double instantaneous_snr(double avg_snr, double channel_gain);

double instantaneous_ser(ModulationScheme scheme, double snr);

SerParams ser_params(double avg_snr, const channel::DeterministicGains& gains,
                     const channel::MisalignmentModel& model);

// Chernoff-bound closed form (B / (2 A^B)) * gamma_lower(B, A).
SerBound avg_ser_bpsk_closed(const SerParams& params);

// (2^B B / A^B) gamma_lower(B, A/2) - (B / (4 A^B)) gamma_lower(B, A),
// clamped to [0, 1].
SerBound avg_ser_qpsk_closed(const SerParams& params);

// Average SER by adaptive quadrature of the conditional SER against the
// misalignment PDF. chernoff_q must reproduce the closed forms; exact_q is
// the ground truth of the model.
quadrature::Result avg_ser_quadrature(ModulationScheme scheme, double avg_snr,
                                      const channel::DeterministicGains& gains,
                                      const channel::MisalignmentModel& model,
                                      QMode q_mode);

}  // namespace thzsim::ser

#endif
