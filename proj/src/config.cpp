#include "thzsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace thzsim::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': expected a number, got '" +
                                 value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': expected a non-negative "
                                 "integer, got '" + value + "'");
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

void apply_key(FullConfig& config, const std::string& key, const std::string& value) {
    if (key == "frequency_hz") {
        config.link.frequency_hz = parse_double(key, value);
    } else if (key == "gain_tx_dbi") {
        config.link.gain_tx_dbi = parse_double(key, value);
    } else if (key == "gain_rx_dbi") {
        config.link.gain_rx_dbi = parse_double(key, value);
    } else if (key == "distance_m") {
        config.link.distance_m = parse_double(key, value);
    } else if (key == "aperture_radius_m") {
        config.link.aperture_radius_m = parse_double(key, value);
    } else if (key == "beam_waist_m") {
        config.link.beam_waist_m = parse_double(key, value);
    } else if (key == "jitter") {
        config.link.jitter_value = parse_double(key, value);
    } else if (key == "jitter_interpretation") {
        if (value == "variance") {
            config.link.jitter_interpretation = channel::JitterInterpretation::variance;
        } else if (value == "std_dev") {
            config.link.jitter_interpretation = channel::JitterInterpretation::std_dev;
        } else {
            throw std::runtime_error("config key 'jitter_interpretation': expected "
                                     "'variance' or 'std_dev', got '" + value + "'");
        }
    } else if (key == "temperature_k") {
        config.link.conditions.temperature_k = parse_double(key, value);
    } else if (key == "pressure_pa") {
        config.link.conditions.pressure_pa = parse_double(key, value);
    } else if (key == "relative_humidity") {
        config.link.conditions.relative_humidity = parse_double(key, value);
    } else if (key == "mode") {
        if (value == "symbol_level") {
            config.mc.mode = mc::McMode::symbol_level;
        } else if (value == "semi_analytic") {
            config.mc.mode = mc::McMode::semi_analytic;
        } else {
            throw std::runtime_error("config key 'mode': expected 'symbol_level' or "
                                     "'semi_analytic', got '" + value + "'");
        }
    } else if (key == "trials") {
        config.mc.num_trials = parse_u64(key, value);
    } else if (key == "seed") {
        config.mc.seed = parse_u64(key, value);
    } else if (key == "chunk_size") {
        config.mc.chunk_size = parse_u64(key, value);
    } else if (key == "confidence_level") {
        config.mc.confidence_level = parse_double(key, value);
    } else if (key == "distances_m") {
        config.sweep.distances_m.clear();
        for (const auto& item : split_list(value)) {
            config.sweep.distances_m.push_back(parse_double(key, item));
        }
    } else if (key == "jitters") {
        config.sweep.jitter_values.clear();
        for (const auto& item : split_list(value)) {
            config.sweep.jitter_values.push_back(parse_double(key, item));
        }
    } else if (key == "schemes") {
        config.sweep.schemes.clear();
        for (const auto& item : split_list(value)) {
            if (item == "bpsk") {
                config.sweep.schemes.push_back(ser::ModulationScheme::BPSK);
            } else if (item == "qpsk") {
                config.sweep.schemes.push_back(ser::ModulationScheme::QPSK);
            } else {
                throw std::runtime_error("config key 'schemes': unknown scheme '" +
                                         item + "'");
            }
        }
    } else if (key == "methods") {
        config.sweep.methods.clear();
        for (const auto& item : split_list(value)) {
            if (item == "closed_form") {
                config.sweep.methods.push_back(sweep::Method::closed_form);
            } else if (item == "quadrature_exact") {
                config.sweep.methods.push_back(sweep::Method::quadrature_exact);
            } else if (item == "mc_symbol") {
                config.sweep.methods.push_back(sweep::Method::mc_symbol);
            } else if (item == "mc_semi") {
                config.sweep.methods.push_back(sweep::Method::mc_semi);
            } else {
                throw std::runtime_error("config key 'methods': unknown method '" +
                                         item + "'");
            }
        }
    } else if (key == "auto_scale_trials") {
        if (value == "true" || value == "1") {
            config.sweep.auto_scale_trials = true;
        } else if (value == "false" || value == "0") {
            config.sweep.auto_scale_trials = false;
        } else {
            throw std::runtime_error("config key 'auto_scale_trials': expected a "
                                     "boolean, got '" + value + "'");
        }
    } else {
        throw std::runtime_error("unknown config key '" + key + "'");
    }
}

}  // namespace

FullConfig parse_config(const std::optional<std::string>& path,
                        const std::map<std::string, std::string>& overrides) {
    FullConfig config;
    config.sweep = sweep::SweepSpec::defaults();

    // SNR grid bounds can come from file or overrides; collected separately
    // so min/max/step can be set in any order.
    double snr_min = 0.0, snr_max = 60.0, snr_step = 2.0;
    bool grid_touched = false;

    auto apply = [&](const std::string& key, const std::string& value) {
        if (key == "snr_min_db") {
            snr_min = parse_double(key, value);
            grid_touched = true;
        } else if (key == "snr_max_db") {
            snr_max = parse_double(key, value);
            grid_touched = true;
        } else if (key == "snr_step_db") {
            snr_step = parse_double(key, value);
            grid_touched = true;
        } else {
            apply_key(config, key, value);
        }
    };

    if (path) {
        std::ifstream file(*path);
        if (!file) throw std::runtime_error("cannot open config file '" + *path + "'");
        std::string line;
        int line_number = 0;
        while (std::getline(file, line)) {
            ++line_number;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw std::runtime_error("config line " + std::to_string(line_number) +
                                         ": expected key = value");
            }
            apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    for (const auto& [key, value] : overrides) apply(key, value);

    if (grid_touched) {
        if (!(snr_step > 0.0) || !(snr_max >= snr_min)) {
            throw std::runtime_error("config key 'snr_step_db': invalid SNR grid");
        }
        config.sweep.snr_grid_db.clear();
        for (double snr = snr_min; snr <= snr_max + 1e-9; snr += snr_step) {
            config.sweep.snr_grid_db.push_back(snr);
        }
    }

    config.sweep.base = config.link;
    config.sweep.mc = config.mc;
    config.sweep.jitter_interpretation = config.link.jitter_interpretation;

    config.link.validate();
    config.mc.validate();
    return config;
}

}  // namespace thzsim::io
