#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "extcalc/dhym_pointwise.hpp"
#include "extcalc/g2_structure.hpp"

namespace extcalc {

/// Seeded source of random test data. Form coefficients are standard normal
/// times a scale; eigenvalue samples are uniform on [-3, 3].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vector vector(int dim, double scale = 1.0);
  Form form(int dim, int grade, double scale = 1.0);
  /// (I + eps A)^T (I + eps A) for a Gaussian A.
  Metric metric(int dim, double eps = 0.2);

  /// l1, l2 uniform on [-3, 3] and l3 = -(l1 + l2).
  std::array<double, 3> zero_sum_lambdas();
  std::vector<double> lambdas(int n);

  /// Element of the 14-dimensional summand.
  Form lambda14(const G2Data& g, double scale = 1.0);
  /// exp of a small element of the 14-dimensional summand.
  LinearMap g2_rotation(const G2Data& g, double scale = 0.5);

  /// Real 2n x 2n matrix of a Haar-random unitary in the (u, v) layout.
  Eigen::MatrixXd unitary(int n);
  /// J-invariant part (F + F(J., J.)) / 2 of a random 2-form.
  Form type11_form(const Eigen::MatrixXd& J, double scale = 1.0);
  /// Standard Kahler point carrying sum l_i u^i ^ v^i in a random unitary frame.
  HermitianPoint hermitian_point(int n);

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// sum l_i u^i ^ v^i in the frame given by the columns of `frame`.
HermitianPoint point_with_lambdas(const std::vector<double>& lambdas, const Eigen::MatrixXd& frame);

}  // namespace extcalc
