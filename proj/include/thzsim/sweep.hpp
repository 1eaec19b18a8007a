#ifndef THZSIM_SWEEP_HPP
#define THZSIM_SWEEP_HPP

#include <string>
#include <vector>

#include "thzsim/channel.hpp"
#include "thzsim/montecarlo.hpp"
#include "thzsim/ser.hpp"

namespace thzsim::sweep {

enum class Method { closed_form, quadrature_exact, mc_symbol, mc_semi };

struct SweepSpec {
    std::vector<double> snr_grid_db;          // strictly increasing
    std::vector<double> distances_m;
    std::vector<double> jitter_values;
    channel::JitterInterpretation jitter_interpretation =
        channel::JitterInterpretation::variance;
    std::vector<ser::ModulationScheme> schemes;
    std::vector<Method> methods;
    channel::LinkConfig base;
    mc::McConfig mc;
    // Grow the MC trial budget per point until expected errors reach 100;
    // points where the closed form predicts SER below 1e-6 are marked
    // infeasible instead.
    bool auto_scale_trials = true;

    void validate() const;

    static SweepSpec defaults();
};

struct SweepRow {
    ser::ModulationScheme scheme = ser::ModulationScheme::BPSK;
    Method method = Method::closed_form;
    double snr_db = 0.0;
    double distance_m = 0.0;
    double jitter_value = 0.0;
    double ser = 0.0;
    double half_width = 0.0;
    double a_param = 0.0;
    double b_param = 0.0;
    std::string error;  // non-empty when this row failed or was skipped
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Horizontal gap in dB between two monotone SER-vs-SNR curves at one SER
// level, by log-linear interpolation. Throws if either curve fails to
// bracket the target.
double snr_gap_at_ser(const std::vector<SweepRow>& curve_a,
                      const std::vector<SweepRow>& curve_b, double target_ser);

// Warnings (never errors) when the configuration leaves the model's stated
// validity ranges.
std::vector<std::string> validity_check(const channel::LinkConfig& config);

std::string to_string(Method method);
std::string to_string(ser::ModulationScheme scheme);

}  // namespace thzsim::sweep

#endif
