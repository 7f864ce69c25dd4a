#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mlpl::csv {

// One parsed data row with its 1-based line number in the source file.
struct Row {
  std::size_t line = 0;
  std::vector<double> values;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

// Reads a comma-separated numeric table. Blank lines and lines starting with
// '#' are skipped. The first remaining line must equal `expected_header`
// exactly; a mismatch names the first missing column. Every row must carry
// exactly header.size() numeric fields.
Table read(const std::filesystem::path& path,
           const std::vector<std::string>& expected_header);

// Reads only the header line (first non-comment line) of a file.
std::vector<std::string> read_header(const std::filesystem::path& path);

// Shortest decimal representation that round-trips to the same double.
std::string format(double value);

std::string join(const std::vector<std::string>& fields, char sep = ',');

std::vector<std::string> split(std::string_view line, char sep = ',');

double parse_double(std::string_view text);

void write_text(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

}  // namespace mlpl::csv
