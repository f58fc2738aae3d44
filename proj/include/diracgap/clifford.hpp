#pragma once

#include <array>

#include "diracgap/types.hpp"

namespace diracgap {

/// Dirac-Pauli representation of the Clifford generators.
/// beta = diag(1,1,-1,-1), alpha_j = [[0, sigma_j], [sigma_j, 0]].
struct CliffordSet {
  std::array<Eigen::Matrix2cd, 3> sigma;
  std::array<Eigen::Matrix4cd, 3> alpha;
  Eigen::Matrix4cd beta;

  // worst anticommutation defect over all generator pairs, 0 for a valid set
  double anticommutation_defect() const {
    auto acomm = [](const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
      return (a * b + b * a).eval();
    };
    const Eigen::Matrix4cd id4 = Eigen::Matrix4cd::Identity();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Eigen::Matrix4cd d = acomm(alpha[i], alpha[j]);
        if (i == j) d -= 2.0 * id4;
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
      }
      worst = std::max(worst, acomm(alpha[i], beta).cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, (beta * beta - id4).cwiseAbs().maxCoeff());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Eigen::Matrix2cd d = sigma[i] * sigma[j] + sigma[j] * sigma[i];
        if (i == j) d -= 2.0 * Eigen::Matrix2cd::Identity();
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
      }
    }
    return worst;
  }
};

inline CliffordSet dirac_matrices() {
  CliffordSet c;
  const Complex i(0.0, 1.0);
  c.sigma[0] << 0, 1, 1, 0;
  c.sigma[1] << 0, -i, i, 0;
  c.sigma[2] << 1, 0, 0, -1;
  c.beta = Eigen::Matrix4cd::Zero();
  c.beta.diagonal() << 1, 1, -1, -1;
  for (int j = 0; j < 3; ++j) {
    c.alpha[j] = Eigen::Matrix4cd::Zero();
    c.alpha[j].block<2, 2>(0, 2) = c.sigma[j];
    c.alpha[j].block<2, 2>(2, 0) = c.sigma[j];
  }
  return c;
}

}  // namespace diracgap
