#pragma once

// CSV output: header row, comma separator, LF line endings, fields quoted
// only when they contain a comma, quote, CR or LF. Reals are written in the
// shortest form that round-trips.

#include <cerrno>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "bfpower/dataset.hpp"
#include "bfpower/errors.hpp"
#include "bfpower/format.hpp"

namespace bfpower {

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return shortest(v); }
    std::string operator()(const std::string& v) const { return csv_field(v); }
  };
  return std::visit(Visitor{}, cell);
}

inline void write_csv(const Dataset& data, std::ostream& out) {
  const auto& columns = data.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << csv_field(columns[i]);
  }
  out << '\n';
  for (const auto& row : data.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_cell(row[i]);
    }
    out << '\n';
  }
}

inline std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  write_csv(data, out);
  return out.str();
}

inline void emit_csv(const Dataset& data, const std::filesystem::path& target) {
  errno = 0;
  std::ofstream file(target, std::ios::binary | std::ios::trunc);
  if (!file) {
    const int err = errno;
    throw IoError("cannot open '" + target.string() + "' for writing: " +
                  (err ? std::generic_category().message(err) : std::string("unknown error")));
  }
  write_csv(data, file);
  file.flush();
  if (!file) {
    const int err = errno;
    throw IoError("write to '" + target.string() + "' failed: " +
                  (err ? std::generic_category().message(err) : std::string("unknown error")));
  }
}

}  // namespace bfpower
