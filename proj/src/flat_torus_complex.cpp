#include "extcalc/flat_torus_complex.hpp"

#include <cmath>

namespace extcalc {
namespace {

Form basis_element(int grade, int pos) {
  Form e(7, grade);
  e.coeffs()[pos] = 1.0;
  return e;
}

template <typename Op>
Eigen::MatrixXd operator_matrix(int from, int to, Op op) {
  const int cols = binomial(7, from);
  Eigen::MatrixXd m(binomial(7, to), cols);
  for (int j = 0; j < cols; ++j) m.col(j) = op(basis_element(from, j)).coeffs();
  return m;
}

}  // namespace

TorusComplex::TorusComplex(const G2Data& g, double c) : g_(g), c_(c) {
  require(c != 0.0, "TorusComplex: the constant must be nonzero");
  const Metric& m = g.metric;
  for (int j = 0; j < 7; ++j) {
    const Form ej = Form::monomial(7, {j});
    d1_dir_[j] = operator_matrix(1, 2, [&](const Form& a) { return wedge(ej, a); });
    d1prime_dir_[j] = c * operator_matrix(1, 6, [&](const Form& a) { return wedge(ej, a, g.star_phi); });
    // d* = -*d* on 1-forms in dimension 7.
    dstar_dir_[j] = operator_matrix(1, 0, [&](const Form& a) { return Form(-hodge(wedge(ej, hodge(a, m)), m)); });
  }
  star1_ = operator_matrix(1, 6, [&](const Form& a) { return hodge(a, m); });
  star6_ = operator_matrix(6, 1, [&](const Form& a) { return hodge(a, m); });
}

ModeBlock TorusComplex::mode_block(const ModeVector& k) const {
  const Complex i(0.0, 1.0);
  ModeBlock b;
  b.k = k;
  Eigen::VectorXd kv(7);
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(21, 7);
  Eigen::MatrixXd dp = Eigen::MatrixXd::Zero(7, 7);
  Eigen::MatrixXd ds = Eigen::MatrixXd::Zero(1, 7);
  for (int j = 0; j < 7; ++j) {
    kv[j] = k[j];
    d1 += k[j] * d1_dir_[j];
    dp += k[j] * d1prime_dir_[j];
    ds += k[j] * dstar_dir_[j];
  }
  b.d01 = i * kv.cast<Complex>();
  b.d1 = i * d1.cast<Complex>();
  b.d1prime = i * dp.cast<Complex>();
  b.dstar1 = i * ds.cast<Complex>();
  return b;
}

Eigen::Matrix<double, 8, 7> TorusComplex::stacked_symbol(const ModeVector& k) const {
  Eigen::Matrix<double, 8, 7> r = Eigen::Matrix<double, 8, 7>::Zero();
  for (int j = 0; j < 7; ++j) {
    if (k[j] == 0) continue;
    r.topRows<7>() += k[j] * d1prime_dir_[j];
    r.bottomRows<1>() += k[j] * dstar_dir_[j];
  }
  return r;
}

int TorusComplex::harmonic_kernel_dim(const ModeVector& k) const {
  // The complex block is i times the real symbol, so the ranks agree.
  const Eigen::Matrix<double, 8, 7> r = stacked_symbol(k);
  const Eigen::JacobiSVD<Eigen::Matrix<double, 8, 7>> svd(r);
  const auto& sv = svd.singularValues();
  const double top = sv[0];
  if (top == 0.0) return 7;
  return 7 - static_cast<int>((sv.array() > 1e-10 * top).count());
}

CohomologySummary TorusComplex::harmonic_dim(int cutoff) const {
  require(cutoff >= 1, "harmonic_dim: cutoff must be at least 1");
  CohomologySummary s;
  s.cutoff = cutoff;
  ModeVector k;
  k.fill(-cutoff);
  for (;;) {
    s.dim_check_H1 += harmonic_kernel_dim(k);
    int j = 0;
    while (j < 7 && k[j] == cutoff) k[j++] = -cutoff;
    if (j == 7) break;
    ++k[j];
  }
  s.dim_H2 = s.dim_check_H1 - s.b1;
  return s;
}

double TorusComplex::adjoint_check(const ModeVector& k) const {
  const Metric& m = g_.metric;
  const Eigen::MatrixXcd a = mode_block(k).d1prime;
  // Adjoint with respect to the induced inner products on 1- and 6-forms.
  const Eigen::MatrixXcd adj =
      m.form_gram(1).inverse().cast<Complex>() * a.adjoint() * m.form_gram(6).cast<Complex>();
  const Eigen::MatrixXcd conj = star6_.cast<Complex>() * a * star6_.cast<Complex>();
  const Eigen::MatrixXcd diff = adj - conj;
  if (diff.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(diff).singularValues()[0];
}

Eigen::MatrixXd TorusComplex::t_matrix() const {
  const G2Data& g = g_;
  return operator_matrix(2, 6, [&](const Form& b) {
    const Form b7(7, 2, g.proj2_7 * b.coeffs());
    return Form(c_ * wedge(b7, g.star_phi));
  });
}

ModeBlock mode_block(const ModeVector& k, const G2Data& g) { return TorusComplex(g).mode_block(k); }

CohomologySummary harmonic_dim(int cutoff, const G2Data& g) { return TorusComplex(g).harmonic_dim(cutoff); }

double adjoint_check(const ModeVector& k, const G2Data& g) { return TorusComplex(g).adjoint_check(k); }

}  // namespace extcalc
