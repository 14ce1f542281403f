#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace modhys::io {

// Minimal hand-written vector plots; no plotting dependency.

struct Series {
  std::string name;
  std::string color;  // SVG color string
  std::vector<double> y;
};

struct Marker {
  double x = 0.0;
  double y = 0.0;
};

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& x, const std::vector<Series>& series,
                     const std::vector<Marker>& markers = {});

// Grid of x_values-by-y_values cells coloured by values[i_x * y_count + i_y],
// scaled to [0, v_max].
void write_heatmap(const std::filesystem::path& path, const std::string& title,
                   const std::vector<double>& x_values, const std::vector<double>& y_values,
                   const std::vector<double>& values, double v_max,
                   const std::string& x_label, const std::string& y_label);

}  // namespace modhys::io
