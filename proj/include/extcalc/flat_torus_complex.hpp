#pragma once

#include <Eigen/Dense>
#include <array>

#include "extcalc/g2_structure.hpp"

namespace extcalc {

using ModeVector = std::array<int, 7>;

/// Per-mode matrices of the canonical subcomplex on the flat 7-torus with
/// F = 0, acting on lexicographic coefficients. d multiplies by i k^b.
struct ModeBlock {
  ModeVector k{};
  Eigen::MatrixXcd d01;      ///< 7 x 1, d on functions
  Eigen::MatrixXcd d1;       ///< 21 x 7, d on 1-forms
  Eigen::MatrixXcd d1prime;  ///< 7 x 7, alpha -> C d alpha ^ *phi in grade 6
  Eigen::MatrixXcd dstar1;   ///< 1 x 7, d* on 1-forms
};

struct CohomologySummary {
  int cutoff = 0;
  int dim_check_H1 = 0;
  int dim_H2 = 0;
  int b1 = 7;
};

/// Mode blocks are i times real matrices linear in k; the real parts are
/// tabulated per coordinate direction at construction.
class TorusComplex {
 public:
  explicit TorusComplex(const G2Data& g, double c = 1.0);

  [[nodiscard]] ModeBlock mode_block(const ModeVector& k) const;
  /// Real 8 x 7 matrix R(k) with [D1'(k); d*(k)] = i R(k).
  [[nodiscard]] Eigen::Matrix<double, 8, 7> stacked_symbol(const ModeVector& k) const;
  /// dim ker (D1', d*) at mode k: singular values at or below 1e-10 sigma_max.
  [[nodiscard]] int harmonic_kernel_dim(const ModeVector& k) const;
  /// Sums kernel dimensions over |k|_inf <= cutoff.
  [[nodiscard]] CohomologySummary harmonic_dim(int cutoff) const;
  /// Operator-norm gap between the metric adjoint of D1'(k) and *D1'(k)*.
  [[nodiscard]] double adjoint_check(const ModeVector& k) const;
  /// Matrix of beta -> C pi_7(beta) ^ *phi, 7 x 21.
  [[nodiscard]] Eigen::MatrixXd t_matrix() const;

  [[nodiscard]] double constant() const { return c_; }

 private:
  G2Data g_;
  double c_;
  std::array<Eigen::Matrix<double, 7, 7>, 7> d1prime_dir_;
  std::array<Eigen::Matrix<double, 1, 7>, 7> dstar_dir_;
  std::array<Eigen::MatrixXd, 7> d1_dir_;
  Eigen::MatrixXd star1_;  ///< grade 1 -> grade 6
  Eigen::MatrixXd star6_;  ///< grade 6 -> grade 1
};

ModeBlock mode_block(const ModeVector& k, const G2Data& g);
CohomologySummary harmonic_dim(int cutoff, const G2Data& g);
double adjoint_check(const ModeVector& k, const G2Data& g);

}  // namespace extcalc
