#include "plotcli/csv.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>

#include "plotcli/plotjob.hpp"

namespace plotcli {

std::string format_double(double v) {
  std::array<char, 40> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

double parse_double(const std::string& cell) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last)
    throw UsageError("not a number: '" + cell + "'");
  return v;
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

CsvTable parse_csv(const std::string& content) {
  CsvTable table;
  std::vector<std::string> row;
  std::string cell;
  bool first_line = true;
  auto end_row = [&] {
    row.push_back(cell);
    cell.clear();
    if (first_line) {
      table.header = row;
      first_line = false;
    } else {
      table.rows.push_back(row);
    }
    row.clear();
  };
  for (char ch : content) {
    if (ch == ',') {
      row.push_back(cell);
      cell.clear();
    } else if (ch == '\n') {
      end_row();
    } else {
      cell += ch;
    }
  }
  if (!cell.empty() || !row.empty()) end_row();
  return table;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + p.parent_path().string());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw IoError("short write to " + path);
}

}  // namespace plotcli
