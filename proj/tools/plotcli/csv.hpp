#pragma once

#include <string>
#include <vector>

namespace plotcli {

// Shortest decimal string that round-trips to the same double; the one
// numeric format used in every CSV cell, so identical data is
// byte-identical on disk.
std::string format_double(double v);

// Inverse of format_double (std::from_chars); throws UsageError on cells
// that are not a full valid number.
double parse_double(const std::string& cell);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const CsvTable& table);

// Minimal reader for the files this tool writes (no quoting or escapes).
CsvTable parse_csv(const std::string& content);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace plotcli
