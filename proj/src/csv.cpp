#include "mlpl/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mlpl/error.hpp"

namespace mlpl::csv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool is_skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    const auto field = line.substr(start, pos == std::string_view::npos ? pos : pos - start);
    out.emplace_back(trim(field));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> read_header(const std::filesystem::path& path) {
  auto in = open(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!is_skippable(line)) return split(line);
  }
  return {};
}

Table read(const std::filesystem::path& path,
           const std::vector<std::string>& expected_header) {
  auto in = open(path);
  Table table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  const std::string name = path.string();

  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    if (!have_header) {
      table.header = split(line);
      if (table.header != expected_header) {
        for (const auto& col : expected_header) {
          if (std::find(table.header.begin(), table.header.end(), col) ==
              table.header.end()) {
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": missing column '" + col + "' (expected header '" +
                             join(expected_header) + "')");
          }
        }
        throw ParseError(name + ":" + std::to_string(lineno) +
                         ": unexpected header, expected '" + join(expected_header) + "'");
      }
      have_header = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != expected_header.size()) {
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(expected_header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    Row row{lineno, {}};
    row.values.reserve(fields.size());
    for (const auto& f : fields) {
      try {
        row.values.push_back(parse_double(f));
      } catch (const ParseError& e) {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) {
    throw ParseError(name + ": missing header '" + join(expected_header) + "'");
  }
  return table;
}

std::string format(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string join(const std::vector<std::string>& fields, char sep) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(sep);
    out += fields[i];
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mlpl::csv
