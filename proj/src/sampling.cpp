#include "extcalc/sampling.hpp"

namespace extcalc {

Vector Sampler::vector(int dim, double scale) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = scale * normal();
  return v;
}

Form Sampler::form(int dim, int grade, double scale) {
  Form f(dim, grade);
  for (Eigen::Index i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = scale * normal();
  return f;
}

Metric Sampler::metric(int dim, double eps) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) += eps * normal();
  Eigen::MatrixXd g = a.transpose() * a;
  return Metric(0.5 * (g + g.transpose()));
}

std::array<double, 3> Sampler::zero_sum_lambdas() {
  const double l1 = uniform(-3.0, 3.0);
  const double l2 = uniform(-3.0, 3.0);
  return {l1, l2, -(l1 + l2)};
}

std::vector<double> Sampler::lambdas(int n) {
  std::vector<double> out(n);
  for (double& l : out) l = uniform(-3.0, 3.0);
  return out;
}

Form Sampler::lambda14(const G2Data& g, double scale) {
  const Form f = form(7, 2, scale);
  return Form(7, 2, g.proj2_14 * f.coeffs());
}

LinearMap Sampler::g2_rotation(const G2Data& g, double scale) {
  return extcalc::g2_rotation(lambda14(g, scale), g);
}

Eigen::MatrixXd Sampler::unitary(int n) {
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = std::complex<double>(normal(), normal());
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const double re = q(k, l).real();
      const double im = q(k, l).imag();
      out(2 * k, 2 * l) = re;
      out(2 * k, 2 * l + 1) = -im;
      out(2 * k + 1, 2 * l) = im;
      out(2 * k + 1, 2 * l + 1) = re;
    }
  return out;
}

Form Sampler::type11_form(const Eigen::MatrixXd& J, double scale) {
  const Form f = form(static_cast<int>(J.rows()), 2, scale);
  return 0.5 * (f + pullback(LinearMap{J}, f));
}

HermitianPoint Sampler::hermitian_point(int n) {
  const std::vector<double> l = lambdas(n);
  return point_with_lambdas(l, unitary(n));
}

HermitianPoint point_with_lambdas(const std::vector<double>& lambdas, const Eigen::MatrixXd& frame) {
  const int n = static_cast<int>(lambdas.size());
  HermitianPoint pt = standard_kahler(n);
  Form diag(2 * n, 2);
  for (int i = 0; i < n; ++i) diag += Form::monomial(2 * n, {2 * i, 2 * i + 1}, lambdas[i]);
  return with_curvature(pt, pullback(LinearMap{frame.inverse()}, diag));
}

}  // namespace extcalc
