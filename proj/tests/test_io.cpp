#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "thzsim/config.hpp"
#include "thzsim/io.hpp"

using namespace thzsim;

namespace {

std::vector<sweep::SweepRow> sample_rows() {
    sweep::SweepSpec spec = sweep::SweepSpec::defaults();
    spec.snr_grid_db.clear();
    for (double snr = 0.0; snr <= 40.0; snr += 2.0) spec.snr_grid_db.push_back(snr);
    spec.jitter_values = {0.01};
    spec.methods = {sweep::Method::closed_form};
    spec.schemes = {ser::ModulationScheme::BPSK, ser::ModulationScheme::QPSK};
    return sweep::run_sweep(spec);  // 21 x 3 x 1 x 2 x 1 = 126 rows
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("CSV layout") {
    const auto rows = sample_rows();
    std::ostringstream out;
    io::write_rows(rows, io::OutputFormat::csv, out);
    const std::string text = out.str();

    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == rows.size() + 1);
    CHECK(text.rfind("scheme,method,snr_db,distance_m,jitter,ser,half_width,a_param,b_param\n",
                     0) == 0);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("CSV round trip is exact") {
    const auto rows = sample_rows();
    TempFile file("thzsim_roundtrip.csv");
    io::emit_rows(rows, io::OutputFormat::csv, file.path);
    const std::string first = slurp(file.path);

    const auto reread = io::read_rows_csv(file.path);
    REQUIRE(reread.size() == rows.size());
    io::emit_rows(reread, io::OutputFormat::csv, file.path);
    CHECK(slurp(file.path) == first);
}

TEST_CASE("repeated emission is byte-identical") {
    const auto rows = sample_rows();
    TempFile a("thzsim_emit_a.csv"), b("thzsim_emit_b.csv");
    io::emit_rows(rows, io::OutputFormat::csv, a.path);
    io::emit_rows(rows, io::OutputFormat::csv, b.path);
    CHECK(slurp(a.path) == slurp(b.path));
}

TEST_CASE("JSON output carries the same fields") {
    const auto rows = sample_rows();
    std::ostringstream out;
    io::write_rows(rows, io::OutputFormat::json, out);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == rows.size());
    CHECK(doc[0]["scheme"] == "bpsk");
    CHECK(doc[0]["snr_db"] == rows[0].snr_db);
    CHECK(doc[0]["ser"] == rows[0].ser);
}

TEST_CASE("SVG contains one polyline per curve") {
    auto rows = sample_rows();
    // Keep two curves: BPSK closed_form at 30 m and 50 m.
    std::vector<sweep::SweepRow> two;
    for (const auto& row : rows) {
        if (row.scheme == ser::ModulationScheme::BPSK && row.distance_m < 60.0) {
            two.push_back(row);
        }
    }
    std::ostringstream out;
    io::write_rows(two, io::OutputFormat::svg_plot, out);
    const std::string svg = out.str();
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 2);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("emission failures throw") {
    CHECK_THROWS_AS(io::emit_rows({}, io::OutputFormat::csv, "/tmp/thzsim_empty.csv"),
                    std::runtime_error);
    const auto rows = sample_rows();
    CHECK_THROWS_AS(io::emit_rows(rows, io::OutputFormat::csv, "/nonexistent-dir/x.csv"),
                    std::runtime_error);
}

TEST_CASE("config defaults match the stock parameter set") {
    const auto config = io::parse_config(std::nullopt, {});
    CHECK(config.link.frequency_hz == 300e9);
    CHECK(config.link.gain_tx_dbi == 55.0);
    CHECK(config.link.gain_rx_dbi == 55.0);
    CHECK(config.link.distance_m == 50.0);
    CHECK(config.link.conditions.temperature_k == 296.0);
    CHECK(config.link.conditions.pressure_pa == 101325.0);
    CHECK(config.link.conditions.relative_humidity == 50.0);
    CHECK(config.link.aperture_radius_m == 0.1);
    CHECK(config.link.beam_waist_m == 0.6);
    CHECK(config.link.jitter_value == 0.01);
}

TEST_CASE("config file and overrides") {
    TempFile file("thzsim_config.txt");
    {
        std::ofstream out(file.path);
        out << "# test configuration\n";
        out << "distance_m = 80   # override the stock distance\n";
        out << "trials = 12345\n";
    }
    const auto config = io::parse_config(file.path, {{"seed", "77"}});
    CHECK(config.link.distance_m == 80.0);
    CHECK(config.mc.num_trials == 12345);
    CHECK(config.mc.seed == 77);
    // Untouched keys keep their defaults.
    CHECK(config.link.frequency_hz == 300e9);

    // Overrides win over file values.
    const auto overridden = io::parse_config(file.path, {{"distance_m", "30"}});
    CHECK(overridden.link.distance_m == 30.0);
}

TEST_CASE("config rejects unknown keys and bad values by name") {
    try {
        io::parse_config(std::nullopt, {{"frobnicate", "1"}});
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    }
    try {
        io::parse_config(std::nullopt, {{"distance_m", "fast"}});
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("distance_m") != std::string::npos);
    }
    CHECK_THROWS(io::parse_config(std::nullopt, {{"distance_m", "-5"}}));
}

TEST_CASE("jitter interpretation equivalence through the config layer") {
    const auto variance = io::parse_config(std::nullopt, {{"jitter", "0.01"}});
    const auto stddev = io::parse_config(
        std::nullopt, {{"jitter", "0.1"}, {"jitter_interpretation", "std_dev"}});
    const auto model_a = channel::build_misalignment_model(
        variance.link.aperture_radius_m, variance.link.beam_waist_m,
        variance.link.jitter_value, variance.link.jitter_interpretation);
    const auto model_b = channel::build_misalignment_model(
        stddev.link.aperture_radius_m, stddev.link.beam_waist_m, stddev.link.jitter_value,
        stddev.link.jitter_interpretation);
    CHECK(model_a.gamma == doctest::Approx(model_b.gamma).epsilon(1e-14));
}
