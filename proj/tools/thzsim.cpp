// thzsim: THz line-of-sight link budget, misalignment fading and SER tool.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thzsim/config.hpp"
#include "thzsim/io.hpp"

namespace {

using namespace thzsim;

struct CommonArgs {
    std::optional<std::string> config_path;
    std::map<std::string, std::string> overrides;
    std::string out_path;
    std::string format = "csv";
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option_function<std::string>(
           "--config", [&](const std::string& v) { args.config_path = v; },
           "key = value configuration file");
    cmd->add_option("--out", args.out_path, "output file (default: stdout)");
    cmd->add_option("--format", args.format, "csv, json or svg_plot")
        ->check(CLI::IsMember({"csv", "json", "svg_plot"}));

    auto override_opt = [&, cmd](const char* flag, const char* key, const char* desc) {
        cmd->add_option_function<std::string>(
            flag, [&args, key](const std::string& v) { args.overrides[key] = v; }, desc);
    };
    override_opt("--frequency", "frequency_hz", "carrier frequency [Hz]");
    override_opt("--gain-tx", "gain_tx_dbi", "TX antenna gain [dBi]");
    override_opt("--gain-rx", "gain_rx_dbi", "RX antenna gain [dBi]");
    override_opt("--distance", "distance_m", "TX-RX distance [m]");
    override_opt("--aperture-radius", "aperture_radius_m", "RX detection radius [m]");
    override_opt("--beam-waist", "beam_waist_m", "TX beam footprint radius [m]");
    override_opt("--jitter", "jitter", "antenna displacement jitter");
    override_opt("--jitter-interpretation", "jitter_interpretation",
                 "variance or std_dev");
    override_opt("--temperature", "temperature_k", "medium temperature [K]");
    override_opt("--pressure", "pressure_pa", "atmospheric pressure [Pa]");
    override_opt("--humidity", "relative_humidity", "relative humidity [%]");
    override_opt("--seed", "seed", "Monte Carlo seed");
    override_opt("--trials", "trials", "Monte Carlo trials");
    override_opt("--mode", "mode", "symbol_level or semi_analytic");
    override_opt("--chunk-size", "chunk_size", "Monte Carlo chunk size");
    override_opt("--snr-min", "snr_min_db", "sweep SNR grid start [dB]");
    override_opt("--snr-max", "snr_max_db", "sweep SNR grid end [dB]");
    override_opt("--snr-step", "snr_step_db", "sweep SNR grid step [dB]");
    override_opt("--distances", "distances_m", "sweep distances, comma separated [m]");
    override_opt("--jitters", "jitters", "sweep jitter values, comma separated");
    override_opt("--schemes", "schemes", "sweep schemes, comma separated");
    override_opt("--methods", "methods", "sweep methods, comma separated");
}

io::OutputFormat parse_format(const std::string& format) {
    if (format == "csv") return io::OutputFormat::csv;
    if (format == "json") return io::OutputFormat::json;
    return io::OutputFormat::svg_plot;
}

void emit(const std::vector<sweep::SweepRow>& rows, const CommonArgs& args) {
    const auto format = parse_format(args.format);
    if (args.out_path.empty()) {
        io::write_rows(rows, format, std::cout);
    } else {
        io::emit_rows(rows, format, args.out_path);
    }
}

void print_warnings(const channel::LinkConfig& link) {
    for (const auto& warning : sweep::validity_check(link)) {
        std::cerr << "warning: " << warning << '\n';
    }
}

int cmd_absorption(const CommonArgs& args, double f_min_ghz, double f_max_ghz,
                   double step_ghz) {
    const auto config = io::parse_config(args.config_path, args.overrides);
    std::FILE* out = args.out_path.empty() ? stdout : std::fopen(args.out_path.c_str(), "wb");
    if (!out) {
        std::cerr << "error: cannot write to '" << args.out_path << "'\n";
        return 1;
    }
    std::fprintf(out, "frequency_ghz,g_term,y1_term,y2_term,coefficient\n");
    for (double f = f_min_ghz; f <= f_max_ghz + 1e-9; f += step_ghz) {
        const auto breakdown =
            atmosphere::absorption_coefficient(f * 1e9, config.link.conditions);
        std::fprintf(out, "%.17g,%.17g,%.17g,%.17g,%.17g\n", f, breakdown.g_term,
                     breakdown.y1_term, breakdown.y2_term, breakdown.coefficient);
    }
    if (out != stdout) std::fclose(out);
    return 0;
}

int cmd_channel(const CommonArgs& args) {
    const auto config = io::parse_config(args.config_path, args.overrides);
    print_warnings(config.link);
    const auto gains = channel::deterministic_gains(config.link);
    const auto model = channel::build_misalignment_model(
        config.link.aperture_radius_m, config.link.beam_waist_m,
        config.link.jitter_value, config.link.jitter_interpretation);
    std::printf("h_p = %.17g\n", gains.h_p);
    std::printf("h_a = %.17g\n", gains.h_a);
    std::printf("h_p*h_a = %.17g\n", gains.product);
    std::printf("u = %.17g\n", model.u);
    std::printf("w_eq = %.17g\n", model.w_eq);
    std::printf("a0 = %.17g\n", model.a0);
    std::printf("sigma_r = %.17g\n", model.sigma_r);
    std::printf("gamma = %.17g\n", model.gamma);
    return 0;
}

int cmd_ser(const CommonArgs& args) {
    auto config = io::parse_config(args.config_path, args.overrides);
    print_warnings(config.link);
    sweep::SweepSpec spec = config.sweep;
    spec.distances_m = {config.link.distance_m};
    spec.jitter_values = {config.link.jitter_value};
    spec.methods = {sweep::Method::closed_form, sweep::Method::quadrature_exact};
    emit(sweep::run_sweep(spec), args);
    return 0;
}

int cmd_simulate(const CommonArgs& args, double snr_db) {
    const auto config = io::parse_config(args.config_path, args.overrides);
    print_warnings(config.link);
    const auto gains = channel::deterministic_gains(config.link);
    const auto model = channel::build_misalignment_model(
        config.link.aperture_radius_m, config.link.beam_waist_m,
        config.link.jitter_value, config.link.jitter_interpretation);
    const double avg_snr = std::pow(10.0, snr_db / 10.0);
    for (const auto scheme : {ser::ModulationScheme::BPSK, ser::ModulationScheme::QPSK}) {
        const auto estimate = mc::run_mc(config.mc, scheme, avg_snr, gains, model);
        std::printf("%s: ser = %.17g, half_width = %.17g, trials = %llu",
                    sweep::to_string(scheme).c_str(), estimate.ser, estimate.half_width,
                    static_cast<unsigned long long>(estimate.num_trials));
        if (estimate.mode == mc::McMode::symbol_level) {
            std::printf(", errors = %llu",
                        static_cast<unsigned long long>(estimate.num_errors));
        }
        std::printf("\n");
        if (estimate.low_count_warning) {
            std::cerr << "warning: fewer than 10 errors observed; increase --trials\n";
        }
    }
    return 0;
}

int cmd_sweep(const CommonArgs& args) {
    const auto config = io::parse_config(args.config_path, args.overrides);
    print_warnings(config.link);
    emit(sweep::run_sweep(config.sweep), args);
    return 0;
}

int cmd_validate(const CommonArgs& args) {
    const auto config = io::parse_config(args.config_path, args.overrides);
    const auto warnings = sweep::validity_check(config.link);
    if (warnings.empty()) {
        std::printf("configuration is inside all stated validity ranges\n");
    } else {
        for (const auto& warning : warnings) std::cerr << "warning: " << warning << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"THz line-of-sight link SER simulator"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* absorption = app.add_subcommand("absorption", "molecular absorption table");
    double f_min_ghz = 200.0, f_max_ghz = 400.0, step_ghz = 1.0;
    absorption->add_option("--f-min", f_min_ghz, "start frequency [GHz]");
    absorption->add_option("--f-max", f_max_ghz, "end frequency [GHz]");
    absorption->add_option("--step", step_ghz, "frequency step [GHz]");
    add_common_options(absorption, args);

    auto* channel_cmd = app.add_subcommand("channel", "gain breakdown at one config");
    add_common_options(channel_cmd, args);

    auto* ser_cmd = app.add_subcommand("ser", "closed forms and quadrature over an SNR grid");
    add_common_options(ser_cmd, args);

    auto* simulate = app.add_subcommand("simulate", "one Monte Carlo run");
    double snr_db = 40.0;
    simulate->add_option("--snr", snr_db, "average SNR [dB]");
    add_common_options(simulate, args);

    auto* sweep_cmd = app.add_subcommand("sweep", "full SER sweep over the grids");
    add_common_options(sweep_cmd, args);

    auto* validate = app.add_subcommand("validate", "check model validity ranges");
    add_common_options(validate, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (absorption->parsed()) return cmd_absorption(args, f_min_ghz, f_max_ghz, step_ghz);
        if (channel_cmd->parsed()) return cmd_channel(args);
        if (ser_cmd->parsed()) return cmd_ser(args);
        if (simulate->parsed()) return cmd_simulate(args, snr_db);
        if (sweep_cmd->parsed()) return cmd_sweep(args);
        if (validate->parsed()) return cmd_validate(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
