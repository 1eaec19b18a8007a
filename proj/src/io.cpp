#include "thzsim/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace thzsim::io {

namespace {

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

ser::ModulationScheme parse_scheme(const std::string& s) {
    if (s == "bpsk") return ser::ModulationScheme::BPSK;
    if (s == "qpsk") return ser::ModulationScheme::QPSK;
    throw std::runtime_error("unknown scheme '" + s + "' in CSV");
}

sweep::Method parse_method(const std::string& s) {
    if (s == "closed_form") return sweep::Method::closed_form;
    if (s == "quadrature_exact") return sweep::Method::quadrature_exact;
    if (s == "mc_symbol") return sweep::Method::mc_symbol;
    if (s == "mc_semi") return sweep::Method::mc_semi;
    throw std::runtime_error("unknown method '" + s + "' in CSV");
}

void write_csv(const std::vector<sweep::SweepRow>& rows, std::ostream& out) {
    out << "scheme,method,snr_db,distance_m,jitter,ser,half_width,a_param,b_param\n";
    for (const auto& row : rows) {
        out << sweep::to_string(row.scheme) << ',' << sweep::to_string(row.method) << ','
            << format_double(row.snr_db) << ',' << format_double(row.distance_m) << ','
            << format_double(row.jitter_value) << ',' << format_double(row.ser) << ','
            << format_double(row.half_width) << ',' << format_double(row.a_param) << ','
            << format_double(row.b_param) << '\n';
    }
}

void write_json(const std::vector<sweep::SweepRow>& rows, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        doc.push_back({{"scheme", sweep::to_string(row.scheme)},
                       {"method", sweep::to_string(row.method)},
                       {"snr_db", row.snr_db},
                       {"distance_m", row.distance_m},
                       {"jitter", row.jitter_value},
                       {"ser", row.ser},
                       {"half_width", row.half_width},
                       {"a_param", row.a_param},
                       {"b_param", row.b_param}});
    }
    out << doc.dump(2) << '\n';
}

struct CurveKey {
    std::string label;
};

void write_svg(const std::vector<sweep::SweepRow>& rows, std::ostream& out) {
    constexpr double width = 880, height = 600;
    constexpr double left = 70, right = 230, top = 30, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double snr_min = 1e300, snr_max = -1e300;
    double log_min = 0.0;
    for (const auto& row : rows) {
        snr_min = std::min(snr_min, row.snr_db);
        snr_max = std::max(snr_max, row.snr_db);
        if (row.ser > 0.0) log_min = std::min(log_min, std::log10(row.ser));
    }
    if (snr_max <= snr_min) snr_max = snr_min + 1.0;
    log_min = std::floor(std::min(log_min, -1.0));

    auto x_of = [&](double snr) {
        return left + (snr - snr_min) / (snr_max - snr_min) * plot_w;
    };
    auto y_of = [&](double log_ser) {
        return top + (0.0 - log_ser) / (0.0 - log_min) * plot_h;
    };

    // Group rows into curves in order of first appearance.
    std::vector<std::pair<std::string, std::vector<const sweep::SweepRow*>>> curves;
    for (const auto& row : rows) {
        std::ostringstream key;
        key << sweep::to_string(row.scheme) << ' ' << sweep::to_string(row.method)
            << " d=" << row.distance_m << "m jitter=" << row.jitter_value;
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const auto& c) { return c.first == key.str(); });
        if (it == curves.end()) {
            curves.push_back({key.str(), {}});
            it = std::prev(curves.end());
        }
        it->second.push_back(&row);
    }

    static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    // Decade gridlines and y labels.
    for (int decade = 0; decade >= static_cast<int>(log_min); --decade) {
        const double y = y_of(decade);
        out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"11\">1e" << decade << "</text>\n";
    }
    // x labels every 10 dB.
    for (double snr = std::ceil(snr_min / 10.0) * 10.0; snr <= snr_max; snr += 10.0) {
        out << "<text x=\"" << x_of(snr) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << snr << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">Average SNR (dB)</text>\n";
    out << "<text x=\"18\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << top + plot_h / 2 << ")\">Average SER</text>\n";

    int color_index = 0;
    double legend_y = top + 14;
    for (const auto& [label, points] : curves) {
        const char* color = kColors[color_index % 10];
        std::ostringstream path;
        for (const auto* row : points) {
            if (row->ser <= 0.0) continue;  // not representable on a log axis
            path << x_of(row->snr_db) << ',' << y_of(std::log10(row->ser)) << ' ';
        }
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"" << path.str() << "\"/>\n";
        out << "<line x1=\"" << left + plot_w + 10 << "\" y1=\"" << legend_y - 4
            << "\" x2=\"" << left + plot_w + 30 << "\" y2=\"" << legend_y - 4
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << left + plot_w + 35 << "\" y=\"" << legend_y
            << "\" font-size=\"10\">" << label << "</text>\n";
        legend_y += 16;
        ++color_index;
    }
    out << "</svg>\n";
}

}  // namespace

void write_rows(const std::vector<sweep::SweepRow>& rows, OutputFormat format,
                std::ostream& out) {
    if (rows.empty()) throw std::runtime_error("no rows to emit");
    switch (format) {
        case OutputFormat::csv: write_csv(rows, out); break;
        case OutputFormat::json: write_json(rows, out); break;
        case OutputFormat::svg_plot: write_svg(rows, out); break;
    }
}

void emit_rows(const std::vector<sweep::SweepRow>& rows, OutputFormat format,
               const std::string& output_path) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write to '" + output_path + "'");
    write_rows(rows, format, file);
    if (!file) throw std::runtime_error("write failed for '" + output_path + "'");
}

std::vector<sweep::SweepRow> read_rows_csv(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(file, line)) throw std::runtime_error("empty CSV file");

    std::vector<sweep::SweepRow> rows;
    while (std::getline(file, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 9) {
            throw std::runtime_error("malformed CSV row: " + line);
        }
        sweep::SweepRow row;
        row.scheme = parse_scheme(fields[0]);
        row.method = parse_method(fields[1]);
        row.snr_db = std::stod(fields[2]);
        row.distance_m = std::stod(fields[3]);
        row.jitter_value = std::stod(fields[4]);
        row.ser = std::stod(fields[5]);
        row.half_width = std::stod(fields[6]);
        row.a_param = std::stod(fields[7]);
        row.b_param = std::stod(fields[8]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace thzsim::io
