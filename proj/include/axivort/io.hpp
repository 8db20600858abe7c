#pragma once

#include <string>
#include <vector>

namespace axivort {

/// Shortest text form that still round-trips any finite double: %.17g.
std::string format_g17(double v);

/// One CSV row of doubles at 17 significant digits.
std::string csv_row(const std::vector<double>& values);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace axivort
