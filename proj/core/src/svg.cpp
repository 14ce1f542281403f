#include "modhys/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace modhys::io {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 420;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 44;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  void include(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (hi <= lo) {
      hi = lo + 1.0;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

double map_x(double v, const Range& r) {
  return kMarginLeft + (v - r.lo) / (r.hi - r.lo) * (kWidth - kMarginLeft - kMarginRight);
}

double map_y(double v, const Range& r) {
  return kHeight - kMarginBottom -
         (v - r.lo) / (r.hi - r.lo) * (kHeight - kMarginTop - kMarginBottom);
}

void emit_axes(std::ostringstream& svg, const Range& xr, const Range& yr) {
  const double x0 = kMarginLeft;
  const double x1 = kWidth - kMarginRight;
  const double y0 = kHeight - kMarginBottom;
  const double y1 = kMarginTop;
  svg << "<rect x='" << x0 << "' y='" << y1 << "' width='" << x1 - x0 << "' height='"
      << y0 - y1 << "' fill='none' stroke='#444'/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / 4.0;
    const double px = map_x(fx, xr);
    const double py = map_y(fy, yr);
    svg << "<line x1='" << num(px) << "' y1='" << y0 << "' x2='" << num(px) << "' y2='"
        << y0 + 4 << "' stroke='#444'/>\n";
    svg << "<text x='" << num(px) << "' y='" << y0 + 18
        << "' font-size='11' text-anchor='middle'>" << num(fx) << "</text>\n";
    svg << "<line x1='" << x0 - 4 << "' y1='" << num(py) << "' x2='" << x0 << "' y2='"
        << num(py) << "' stroke='#444'/>\n";
    svg << "<text x='" << x0 - 8 << "' y='" << num(py + 4)
        << "' font-size='11' text-anchor='end'>" << num(fy) << "</text>\n";
  }
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("svg: cannot open " + path.string());
  }
  file << body;
  if (!file.good()) {
    throw std::runtime_error("svg: write failed for " + path.string());
  }
}

}  // namespace

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& x, const std::vector<Series>& series,
                     const std::vector<Marker>& markers) {
  Range xr{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  Range yr{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (double v : x) {
    xr.include(v);
  }
  for (const auto& s : series) {
    for (double v : s.y) {
      yr.include(v);
    }
  }
  xr.pad();
  yr.pad();

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
      << kHeight << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << kWidth / 2 << "' y='20' font-size='14' text-anchor='middle'>"
      << title << "</text>\n";
  emit_axes(svg, xr, yr);

  for (const auto& s : series) {
    svg << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.4' points='";
    const std::size_t n = std::min(x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      svg << num(map_x(x[i], xr)) << "," << num(map_y(s.y[i], yr)) << " ";
    }
    svg << "'/>\n";
  }

  for (const auto& m : markers) {
    svg << "<circle cx='" << num(map_x(m.x, xr)) << "' cy='" << num(map_y(m.y, yr))
        << "' r='3' fill='none' stroke='#d33'/>\n";
  }

  // legend
  double ly = kMarginTop + 14;
  for (const auto& s : series) {
    svg << "<line x1='" << kMarginLeft + 10 << "' y1='" << ly << "' x2='"
        << kMarginLeft + 34 << "' y2='" << ly << "' stroke='" << s.color
        << "' stroke-width='2'/>\n";
    svg << "<text x='" << kMarginLeft + 40 << "' y='" << ly + 4 << "' font-size='12'>"
        << s.name << "</text>\n";
    ly += 16;
  }
  svg << "</svg>\n";
  write_file(path, svg.str());
}

void write_heatmap(const std::filesystem::path& path, const std::string& title,
                   const std::vector<double>& x_values, const std::vector<double>& y_values,
                   const std::vector<double>& values, double v_max,
                   const std::string& x_label, const std::string& y_label) {
  const std::size_t nx = x_values.size();
  const std::size_t ny = y_values.size();
  const double cell_w =
      static_cast<double>(kWidth - kMarginLeft - kMarginRight) / static_cast<double>(nx);
  const double cell_h =
      static_cast<double>(kHeight - kMarginTop - kMarginBottom) / static_cast<double>(ny);

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
      << kHeight << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << kWidth / 2 << "' y='20' font-size='14' text-anchor='middle'>"
      << title << "</text>\n";

  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      double f = v_max > 0.0 ? values[ix * ny + iy] / v_max : 0.0;
      f = std::clamp(f, 0.0, 1.0);
      // two-stop ramp: pale yellow to deep red
      const int r = static_cast<int>(255 - 70 * f);
      const int gg = static_cast<int>(240 - 200 * f);
      const int b = static_cast<int>(200 - 170 * f);
      const double px = kMarginLeft + cell_w * static_cast<double>(ix);
      // y axis points up: last row at the top
      const double py = kHeight - kMarginBottom - cell_h * static_cast<double>(iy + 1);
      svg << "<rect x='" << num(px) << "' y='" << num(py) << "' width='" << num(cell_w)
          << "' height='" << num(cell_h) << "' fill='rgb(" << r << "," << gg << "," << b
          << ")' stroke='#999' stroke-width='0.4'/>\n";
      svg << "<text x='" << num(px + cell_w / 2) << "' y='" << num(py + cell_h / 2 + 4)
          << "' font-size='10' text-anchor='middle'>" << num(values[ix * ny + iy])
          << "</text>\n";
    }
  }

  for (std::size_t ix = 0; ix < nx; ++ix) {
    svg << "<text x='" << num(kMarginLeft + cell_w * (static_cast<double>(ix) + 0.5))
        << "' y='" << kHeight - kMarginBottom + 16 << "' font-size='11' text-anchor='middle'>"
        << num(x_values[ix]) << "</text>\n";
  }
  for (std::size_t iy = 0; iy < ny; ++iy) {
    svg << "<text x='" << kMarginLeft - 6 << "' y='"
        << num(kHeight - kMarginBottom - cell_h * (static_cast<double>(iy) + 0.5) + 4)
        << "' font-size='11' text-anchor='end'>" << num(y_values[iy]) << "</text>\n";
  }
  svg << "<text x='" << kWidth / 2 << "' y='" << kHeight - 8
      << "' font-size='12' text-anchor='middle'>" << x_label << "</text>\n";
  svg << "<text x='14' y='" << kHeight / 2
      << "' font-size='12' text-anchor='middle' transform='rotate(-90 14 " << kHeight / 2
      << ")'>" << y_label << "</text>\n";
  svg << "</svg>\n";
  write_file(path, svg.str());
}

}  // namespace modhys::io
