#include "thzsim/ser.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "thzsim/special.hpp"

namespace thzsim::ser {

namespace {

constexpr double kQuadratureAbsTol = 1e-12;

double chernoff_q(double x) {
    return 0.5 * std::exp(-0.5 * x * x);
}

double conditional_ser(ModulationScheme scheme, double snr, QMode q_mode) {
    if (scheme == ModulationScheme::BPSK) {
        const double arg = std::sqrt(2.0 * snr);
        return q_mode == QMode::exact_q ? special::q_function(arg) : chernoff_q(arg);
    }
    const double arg = std::sqrt(snr);
    const double q = q_mode == QMode::exact_q ? special::q_function(arg) : chernoff_q(arg);
    return 1.0 - (1.0 - q) * (1.0 - q);
}

}  // namespace

double instantaneous_snr(double avg_snr, double channel_gain) {
    return channel_gain * channel_gain * avg_snr;
}

double instantaneous_ser(ModulationScheme scheme, double snr) {
    return conditional_ser(scheme, snr, QMode::exact_q);
}

SerParams ser_params(double avg_snr, const channel::DeterministicGains& gains,
                     const channel::MisalignmentModel& model) {
    SerParams params;
    params.a_param = avg_snr * model.a0 * model.a0 * gains.product * gains.product;
    params.b_param = 0.5 * model.gamma * model.gamma;
    return params;
}

SerBound avg_ser_bpsk_closed(const SerParams& params) {
    const double a = params.a_param;
    const double b = params.b_param;
    if (!(a > 0.0)) throw std::domain_error("SER closed form requires A > 0");
    // ln(B / (2 A^B)) + ln gamma(B, A), assembled in log domain so large B
    // never overflows A^B.
    const double log_value = std::log(b) - std::log(2.0) - b * std::log(a) +
                             special::log_lower_incomplete_gamma(b, a);
    return {std::exp(log_value), log_value};
}

SerBound avg_ser_qpsk_closed(const SerParams& params) {
    const double a = params.a_param;
    const double b = params.b_param;
    if (!(a > 0.0)) throw std::domain_error("SER closed form requires A > 0");
    const double log_b_over_ab = std::log(b) - b * std::log(a);
    const double l1 = b * std::log(2.0) + log_b_over_ab +
                      special::log_lower_incomplete_gamma(b, 0.5 * a);
    const double l2 = log_b_over_ab - std::log(4.0) +
                      special::log_lower_incomplete_gamma(b, a);
    // value = e^l1 - e^l2 with l1 > l2 analytically; rounding can flip the
    // difference microscopically negative at extreme A.
    const double delta = -std::expm1(l2 - l1);
    if (delta <= 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
    double log_value = l1 + std::log(delta);
    if (log_value > 0.0) log_value = 0.0;  // clamp to probability 1
    return {std::exp(log_value), log_value};
}

quadrature::Result avg_ser_quadrature(ModulationScheme scheme, double avg_snr,
                                      const channel::DeterministicGains& gains,
                                      const channel::MisalignmentModel& model,
                                      QMode q_mode) {
    if (!(avg_snr > 0.0)) throw std::domain_error("average SNR must be positive");
    const double g2 = model.gamma * model.gamma;
    const double a0 = model.a0;
    const double snr_scale = avg_snr * gains.product * gains.product;

    // Substitute t = (x / a0)^{gamma^2}; the PDF becomes uniform on (0, 1]
    // and the integral reduces to the mean of the conditional SER over t.
    auto integrand = [&](double t) {
        const double x = a0 * std::pow(t, 1.0 / g2);
        return conditional_ser(scheme, snr_scale * x * x, q_mode);
    };
    // Log-spaced seed panels: at high SNR the integrand collapses to a spike
    // near t = 0 that a single coarse panel would miss entirely.
    std::vector<double> breakpoints{0.0};
    for (double t = 1e-300; t < 1.0; t *= 10.0) breakpoints.push_back(t);
    breakpoints.push_back(1.0);

    auto result = quadrature::integrate(integrand, breakpoints, kQuadratureAbsTol);
    // Refine small results to relative accuracy so tiny averages are still
    // comparable against the closed forms.
    if (result.value > 0.0 && result.value * 1e-10 < kQuadratureAbsTol) {
        const double rel_tol = std::max(result.value * 1e-10, 1e-305);
        result = quadrature::integrate(integrand, breakpoints, rel_tol);
    }
    return result;
}

}  // namespace thzsim::ser
