#include "modhys/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace modhys::io {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_g17(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("write_csv: cannot open " + path.string());
  }
  file << csv_to_string(header, rows);
  if (!file.good()) {
    throw std::runtime_error("write_csv: write failed for " + path.string());
  }
}

}  // namespace modhys::io
