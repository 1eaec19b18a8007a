#ifndef THZSIM_MONTECARLO_HPP
#define THZSIM_MONTECARLO_HPP

#include <cstdint>

#include "thzsim/channel.hpp"
#include "thzsim/ser.hpp"

namespace thzsim::mc {

enum class McMode { symbol_level, semi_analytic };

struct McConfig {
    McMode mode = McMode::semi_analytic;
    std::uint64_t num_trials = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 65536;
    double confidence_level = 0.95;

    void validate() const;
};

struct McEstimate {
    double ser = 0.0;
    double half_width = 0.0;
    std::uint64_t num_trials = 0;
    std::uint64_t num_errors = 0;  // symbol_level only
    McMode mode = McMode::semi_analytic;
    std::uint64_t seed = 0;
    bool low_count_warning = false;  // symbol_level with fewer than 10 errors
};

// Worker count: THZSIM_THREADS env var caps it; defaults to hardware
// concurrency. Results are bit-identical for any worker count.
unsigned worker_count();

McEstimate run_mc(const McConfig& config, ser::ModulationScheme scheme, double avg_snr,
                  const channel::DeterministicGains& gains,
                  const channel::MisalignmentModel& model);

}  // namespace thzsim::mc

#endif
