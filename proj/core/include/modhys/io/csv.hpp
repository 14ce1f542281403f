#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace modhys::io {

/// %.17g formatting, enough digits to round-trip a double.
std::string format_g17(double v);

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows);

/// Writes header + rows as comma-separated text; throws std::runtime_error on
/// I/O failure.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace modhys::io
