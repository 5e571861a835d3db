#include <charconv>
#include <cmath>
#include <fstream>

#include "symlie/harness.hpp"

namespace symlie::harness {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  auto line = [&](const auto& cells, auto&& fmt) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << fmt(cells[i]);
    }
    out << '\n';
  };
  line(header, [](const std::string& s) { return s; });
  for (const auto& row : rows) {
    if (row.size() != header.size()) fail(ErrorKind::InvalidInput, "CSV row width differs from header");
    line(row, format_double);
  }
  out.flush();
  if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace symlie::harness
