#include "modhys/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modhys {

namespace {

// argmax of |v_j| with the smallest index winning ties.
int argmax_abs(const Eigen::VectorXcd& v, double* value) {
  int best = 0;
  double best_abs = -1.0;
  for (int j = 0; j < v.size(); ++j) {
    const double a = std::abs(v(j));
    if (a > best_abs) {
      best_abs = a;
      best = j;
    }
  }
  *value = best_abs;
  return best;
}

void validate_config(const SolverConfig& cfg) {
  if (cfg.eps < 0.0 || cfg.nu < 0.0 || cfg.nu > 1.0 || cfg.mu < 0.0 || cfg.mu > 1.0 ||
      cfg.i_max < 1) {
    throw std::invalid_argument("saomp: need eps >= 0, nu and mu in [0,1], i_max >= 1");
  }
}

}  // namespace

Eigen::VectorXcd least_squares_restricted(const Eigen::MatrixXcd& V,
                                          const Eigen::VectorXcd& s,
                                          std::span<const int> support) {
  if (static_cast<Eigen::Index>(support.size()) > V.rows()) {
    throw std::invalid_argument("least_squares_restricted: support larger than row count");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(V.cols());
  if (support.empty()) {
    return c;
  }
  std::set<int> seen;
  Eigen::MatrixXcd block(V.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) {
    const int j = support[k];
    if (j < 0 || j >= V.cols()) {
      throw std::invalid_argument("least_squares_restricted: index out of range");
    }
    if (!seen.insert(j).second) {
      throw std::invalid_argument("least_squares_restricted: duplicate index");
    }
    block.col(static_cast<Eigen::Index>(k)) = V.col(j);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(block);
  const Eigen::VectorXcd x = cod.solve(s);
  for (std::size_t k = 0; k < support.size(); ++k) {
    c(support[k]) = x(static_cast<Eigen::Index>(k));
  }
  return c;
}

SparseSolveResult omp(const Eigen::MatrixXcd& V, const Eigen::VectorXcd& s, double eps) {
  if (eps < 0.0) {
    throw std::invalid_argument("omp: eps must be non-negative");
  }
  SparseSolveResult res;
  res.c = Eigen::VectorXcd::Zero(V.cols());
  std::vector<int> support;
  Eigen::VectorXcd residual = s;
  res.residual_norms.push_back(residual.norm());

  for (;;) {
    const Eigen::VectorXcd corr = V.adjoint() * residual;
    double corr_max = 0.0;
    const int pick = argmax_abs(corr, &corr_max);
    if (corr_max <= eps) {
      res.converged = true;
      break;
    }
    if (static_cast<Eigen::Index>(support.size()) >= V.rows()) {
      break;  // dictionary exhausted
    }
    if (std::find(support.begin(), support.end(), pick) != support.end()) {
      break;  // stalled: the residual is numerically orthogonal already
    }
    support.push_back(pick);
    res.c = least_squares_restricted(V, s, support);
    residual = s - V * res.c;
    res.residual_norms.push_back(residual.norm());
    ++res.iterations;
    std::vector<int> snapshot = support;
    std::sort(snapshot.begin(), snapshot.end());
    res.support_history.push_back(std::move(snapshot));
  }

  std::sort(support.begin(), support.end());
  res.support = std::move(support);
  return res;
}

SparseSolveResult saomp(const Eigen::MatrixXcd& V, const Eigen::VectorXcd& s,
                        const SolverConfig& config) {
  validate_config(config);
  SparseSolveResult res;
  res.c = Eigen::VectorXcd::Zero(V.cols());
  std::set<int> support;
  double delta = config.nu;
  res.residual_norms.push_back(s.norm());

  for (int i = 1; i <= config.i_max; ++i) {
    const Eigen::VectorXcd corr = V.adjoint() * (s - V * res.c);
    double corr_max = 0.0;
    argmax_abs(corr, &corr_max);
    if (corr_max <= config.eps) {
      res.converged = true;
      break;
    }

    // Batch step: every column at or above the threshold joins.  If that
    // would overfill the dictionary, keep the strongest correlations only so
    // the restricted fit stays well-posed.
    const double threshold = delta * corr_max;
    std::vector<int> candidates;
    for (int j = 0; j < corr.size(); ++j) {
      if (std::abs(corr(j)) >= threshold && support.count(j) == 0) {
        candidates.push_back(j);
      }
    }
    const std::size_t room = static_cast<std::size_t>(V.rows()) - support.size();
    if (candidates.size() > room) {
      std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        return std::abs(corr(a)) > std::abs(corr(b));
      });
      candidates.resize(room);
    }
    support.insert(candidates.begin(), candidates.end());

    std::vector<int> support_vec(support.begin(), support.end());
    res.c = least_squares_restricted(V, s, support_vec);

    // Prune the support by coefficient magnitude and zero what was dropped.
    const double c_max = res.c.cwiseAbs().maxCoeff();
    std::set<int> kept;
    for (int j : support_vec) {
      if (std::abs(res.c(j)) >= config.mu * c_max) {
        kept.insert(j);
      } else {
        res.c(j) = std::complex<double>{0.0, 0.0};
      }
    }
    support = std::move(kept);

    res.residual_norms.push_back((s - V * res.c).norm());
    ++res.iterations;
    res.support_history.emplace_back(support.begin(), support.end());
    delta += (1.0 - config.nu) / static_cast<double>(config.i_max);
  }

  res.support.assign(support.begin(), support.end());
  return res;
}

}  // namespace modhys
