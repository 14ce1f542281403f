#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace modhys {

class InsufficientOversamplingError : public std::runtime_error {
 public:
  explicit InsufficientOversamplingError(const std::string& what)
      : std::runtime_error(what) {}
};

// Index bookkeeping for the Fourier-domain recovery:
//   N        number of forward differences (= 2K)
//   n_omega  effective bandwidth, ceil(Omega (N+1) T / (2 pi))
//   M        N - 2 n_omega - 1 out-of-band bins
//   omega0   2 pi / N
// The out-of-band bins are m = n_omega + 1 .. N - n_omega - 1.
struct BandLayout {
  int N = 0;
  int n_omega = 0;
  int M = 0;
  double omega0 = 0.0;

  int band_start() const { return n_omega + 1; }
  std::vector<int> out_of_band_indices() const;
};

// Ceiling with arguments within 1e-12 of an integer snapped to that integer
// first, so layouts are reproducible at representable boundary inputs.
long long snapped_ceil(double x);

// out[k] = z[k+1] - z[k]. Throws std::invalid_argument if z has fewer than
// two entries.
std::vector<double> forward_difference(std::span<const double> z);

// Cumulative sum with a leading zero: out[0] = 0, out[k] = sum_{j<k} z[j].
// Left inverse of the forward difference up to the constant z[0].
std::vector<double> anti_difference(std::span<const double> z);
std::vector<std::complex<double>> anti_difference(std::span<const std::complex<double>> z);

// Direct O(N^2) DFT, Z[m] = sum_n z[n] exp(-2 pi i m n / N).  The phase index
// is reduced mod N in integer arithmetic before evaluating the exponential.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> z);

// Throws InsufficientOversamplingError if M < 1, std::invalid_argument for
// non-positive omega/T or N < 2.
BandLayout band_layout(double omega, int N, double T);

// M x N matrix with entries exp(-i omega0 m n), rows over the out-of-band
// bins m, columns n = 0 .. N-1.
Eigen::MatrixXcd build_vandermonde(const BandLayout& layout);

// DFT of the forward difference of g_lambda, restricted to the out-of-band
// bins in index order.  Throws std::invalid_argument on length mismatch.
Eigen::VectorXcd build_rhs(std::span<const double> g_lambda, const BandLayout& layout);

}  // namespace modhys
