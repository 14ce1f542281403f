#include "modhys/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace modhys {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<int> BandLayout::out_of_band_indices() const {
  std::vector<int> idx(static_cast<std::size_t>(M));
  std::iota(idx.begin(), idx.end(), band_start());
  return idx;
}

long long snapped_ceil(double x) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= 1e-12) {
    return static_cast<long long>(r);
  }
  return static_cast<long long>(std::ceil(x));
}

std::vector<double> forward_difference(std::span<const double> z) {
  if (z.size() < 2) {
    throw std::invalid_argument("forward_difference: need at least two entries");
  }
  std::vector<double> out(z.size() - 1);
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    out[k] = z[k + 1] - z[k];
  }
  return out;
}

namespace {
template <typename T>
std::vector<T> anti_difference_impl(std::span<const T> z) {
  std::vector<T> out(z.size() + 1);
  out[0] = T{};
  for (std::size_t k = 0; k < z.size(); ++k) {
    out[k + 1] = out[k] + z[k];
  }
  return out;
}
}  // namespace

std::vector<double> anti_difference(std::span<const double> z) {
  return anti_difference_impl(z);
}

std::vector<std::complex<double>> anti_difference(std::span<const std::complex<double>> z) {
  return anti_difference_impl(z);
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> z) {
  const auto N = static_cast<long long>(z.size());
  std::vector<std::complex<double>> out(z.size());
  for (long long m = 0; m < N; ++m) {
    std::complex<double> acc{0.0, 0.0};
    for (long long n = 0; n < N; ++n) {
      const long long k = (m * n) % N;
      acc += z[static_cast<std::size_t>(n)] *
             std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(N));
    }
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

BandLayout band_layout(double omega, int N, double T) {
  if (!(omega > 0.0) || !(T > 0.0) || N < 2) {
    throw std::invalid_argument("band_layout: need omega > 0, T > 0, N >= 2");
  }
  BandLayout layout;
  layout.N = N;
  layout.n_omega = static_cast<int>(
      snapped_ceil(omega * static_cast<double>(N + 1) * T / (2.0 * kPi)));
  layout.M = N - 2 * layout.n_omega - 1;
  layout.omega0 = 2.0 * kPi / static_cast<double>(N);
  if (layout.M < 1) {
    throw InsufficientOversamplingError(
        "band_layout: N - 2*N_Omega - 1 < 1; sample longer or faster");
  }
  return layout;
}

Eigen::MatrixXcd build_vandermonde(const BandLayout& layout) {
  Eigen::MatrixXcd V(layout.M, layout.N);
  const auto N = static_cast<long long>(layout.N);
  for (int r = 0; r < layout.M; ++r) {
    const long long m = layout.band_start() + r;
    for (long long n = 0; n < N; ++n) {
      const long long k = (m * n) % N;  // e^{-i omega0 m n} is periodic in m n mod N
      V(r, static_cast<Eigen::Index>(n)) =
          std::polar(1.0, -layout.omega0 * static_cast<double>(k));
    }
  }
  return V;
}

Eigen::VectorXcd build_rhs(std::span<const double> g_lambda, const BandLayout& layout) {
  if (g_lambda.size() != static_cast<std::size_t>(layout.N) + 1) {
    throw std::invalid_argument("build_rhs: expected N+1 samples");
  }
  const auto diff = forward_difference(g_lambda);
  std::vector<std::complex<double>> cdiff(diff.begin(), diff.end());
  const auto spectrum = dft(cdiff);
  Eigen::VectorXcd s(layout.M);
  for (int r = 0; r < layout.M; ++r) {
    s(r) = spectrum[static_cast<std::size_t>(layout.band_start() + r)];
  }
  return s;
}

}  // namespace modhys
