#ifndef THZSIM_IO_HPP
#define THZSIM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "thzsim/sweep.hpp"

namespace thzsim::io {

enum class OutputFormat { csv, json, svg_plot };

void write_rows(const std::vector<sweep::SweepRow>& rows, OutputFormat format,
                std::ostream& out);

// Writes to a file; throws std::runtime_error on an unwritable path.
void emit_rows(const std::vector<sweep::SweepRow>& rows, OutputFormat format,
               const std::string& output_path);

// Re-ingests a CSV produced by emit_rows.
std::vector<sweep::SweepRow> read_rows_csv(const std::string& path);

}  // namespace thzsim::io

#endif
