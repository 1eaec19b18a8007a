#include "thzsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "thzsim/special.hpp"

namespace thzsim::mc {

namespace {

// Inverse of Q(z) = tail, by bisection; tail in (0, 0.5).
double q_inverse(double tail) {
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (special::q_function(mid) > tail) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct ChunkPartial {
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;   // symbol_level
    double mean = 0.0;          // semi_analytic (Welford)
    double m2 = 0.0;
};

struct Constellation {
    double re[4];
    double im[4];
    int size;
};

Constellation make_constellation(ser::ModulationScheme scheme, double symbol_energy) {
    Constellation c{};
    const double amp = std::sqrt(symbol_energy);
    if (scheme == ser::ModulationScheme::BPSK) {
        c.size = 2;
        c.re[0] = amp;  c.im[0] = 0.0;
        c.re[1] = -amp; c.im[1] = 0.0;
    } else {
        c.size = 4;
        const double level = amp / std::sqrt(2.0);
        // Gray-mapped QPSK; only symbol errors are counted, so the mapping
        // matters only for constellation geometry.
        const double res[4] = {level, -level, -level, level};
        const double ims[4] = {level, level, -level, -level};
        for (int i = 0; i < 4; ++i) { c.re[i] = res[i]; c.im[i] = ims[i]; }
    }
    return c;
}

ChunkPartial run_chunk_symbol(rng::Stream stream, std::uint64_t trials,
                              const Constellation& constellation, double gain_det,
                              const channel::MisalignmentModel& model) {
    ChunkPartial partial;
    partial.trials = trials;
    const double noise_scale = std::sqrt(0.5);  // sigma_n^2 = 1, per component
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double r = stream.rayleigh(model.sigma_r);
        const double h = gain_det * channel::misalignment_gain(r, model);

        const int tx = static_cast<int>(stream.uniform() * constellation.size);
        double n0, n1;
        stream.normal_pair(n0, n1);
        const double y_re = h * constellation.re[tx] + noise_scale * n0;
        const double y_im = h * constellation.im[tx] + noise_scale * n1;

        // Coherent ML detection with known h: nearest scaled constellation point.
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int k = 0; k < constellation.size; ++k) {
            const double dre = y_re - h * constellation.re[k];
            const double dim = y_im - h * constellation.im[k];
            const double dist = dre * dre + dim * dim;
            if (dist < best_dist) {
                best_dist = dist;
                best = k;
            }
        }
        if (best != tx) ++partial.errors;
    }
    return partial;
}

ChunkPartial run_chunk_semi(rng::Stream stream, std::uint64_t trials,
                            ser::ModulationScheme scheme, double snr_scale,
                            const channel::MisalignmentModel& model) {
    ChunkPartial partial;
    partial.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double r = stream.rayleigh(model.sigma_r);
        const double x = channel::misalignment_gain(r, model);
        const double p = ser::instantaneous_ser(scheme, snr_scale * x * x);
        const double delta = p - partial.mean;
        partial.mean += delta / static_cast<double>(t + 1);
        partial.m2 += delta * (p - partial.mean);
    }
    return partial;
}

}  // namespace

void McConfig::validate() const {
    if (num_trials < 1) throw std::domain_error("num_trials must be >= 1");
    if (chunk_size < 1) throw std::domain_error("chunk_size must be >= 1");
    if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
        throw std::domain_error("confidence_level must be in (0, 1)");
    }
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("THZSIM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

McEstimate run_mc(const McConfig& config, ser::ModulationScheme scheme, double avg_snr,
                  const channel::DeterministicGains& gains,
                  const channel::MisalignmentModel& model) {
    config.validate();
    if (!(avg_snr > 0.0)) throw std::domain_error("average SNR must be positive");

    const std::uint64_t num_chunks =
        (config.num_trials + config.chunk_size - 1) / config.chunk_size;
    std::vector<ChunkPartial> partials(num_chunks);

    const Constellation constellation = make_constellation(scheme, avg_snr);
    const double snr_scale = avg_snr * gains.product * gains.product;

    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= num_chunks) return;
            const std::uint64_t start = chunk * config.chunk_size;
            const std::uint64_t trials =
                std::min<std::uint64_t>(config.chunk_size, config.num_trials - start);
            rng::Stream stream = rng::Stream::substream(config.seed, chunk);
            partials[chunk] = config.mode == McMode::symbol_level
                                  ? run_chunk_symbol(stream, trials, constellation,
                                                     gains.product, model)
                                  : run_chunk_semi(stream, trials, scheme, snr_scale, model);
        }
    };

    const unsigned workers = std::min<std::uint64_t>(worker_count(), num_chunks);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Reduction in chunk-index order keeps the estimate bit-identical
    // regardless of how chunks were scheduled onto workers.
    McEstimate estimate;
    estimate.mode = config.mode;
    estimate.seed = config.seed;
    estimate.num_trials = config.num_trials;

    const double z = q_inverse(0.5 * (1.0 - config.confidence_level));
    const double n = static_cast<double>(config.num_trials);

    if (config.mode == McMode::symbol_level) {
        std::uint64_t errors = 0;
        for (const auto& partial : partials) errors += partial.errors;
        estimate.num_errors = errors;
        const double p = static_cast<double>(errors) / n;
        estimate.ser = p;
        if (errors < 30) {
            // Wilson interval half-width for small counts.
            const double z2 = z * z;
            estimate.half_width =
                z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
        } else {
            estimate.half_width = z * std::sqrt(p * (1.0 - p) / n);
        }
        estimate.low_count_warning = errors < 10;
    } else {
        // Combine per-chunk Welford accumulators; exact for constant samples.
        double mean = 0.0, m2 = 0.0, count = 0.0;
        for (const auto& partial : partials) {
            const double w = static_cast<double>(partial.trials);
            const double total = count + w;
            const double delta = partial.mean - mean;
            mean += delta * w / total;
            m2 += partial.m2 + delta * delta * count * w / total;
            count = total;
        }
        estimate.ser = mean;
        const double var = n > 1.0 ? std::max(0.0, m2 / (n - 1.0)) : 0.0;
        estimate.half_width = z * std::sqrt(var / n);
    }
    return estimate;
}

}  // namespace thzsim::mc
