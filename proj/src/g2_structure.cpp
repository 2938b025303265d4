#include "extcalc/g2_structure.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace extcalc {
namespace {

Vector unit(int n, int i) { return Vector::Unit(n, i); }

Eigen::MatrixXd contraction_matrix(const Form& form) {
  const int n = form.dim();
  Eigen::MatrixXd k(index_table(n, form.grade() - 1).size(), n);
  for (int j = 0; j < n; ++j) k.col(j) = interior(unit(n, j), form).coeffs();
  return k;
}

/// Orthogonal projector (w.r.t. `gram`) onto the column span of `basis`.
Eigen::MatrixXd span_projector(const Eigen::MatrixXd& basis, const Eigen::MatrixXd& gram) {
  const Eigen::MatrixXd normal = basis.transpose() * gram * basis;
  return basis * normal.ldlt().solve(basis.transpose() * gram);
}

Vector solve_contraction(const Eigen::MatrixXd& k, const Eigen::MatrixXd& gram, const Vector& coeffs) {
  const Eigen::MatrixXd normal = k.transpose() * gram * k;
  return normal.ldlt().solve(k.transpose() * gram * coeffs);
}

double rel_residual(const Form& lhs, const Form& rhs, const Metric& m, const Tolerance& tol) {
  const double diff = norm(Form(lhs - rhs), m);
  return tol.relative(diff, std::max(norm(lhs, m), norm(rhs, m)));
}

}  // namespace

Form standard_phi() {
  return basis_form(7, "123") + basis_form(7, "145") + basis_form(7, "167") + basis_form(7, "246") -
         basis_form(7, "257") - basis_form(7, "347") - basis_form(7, "356");
}

Form standard_star_phi() {
  return basis_form(7, "4567") + basis_form(7, "2367") + basis_form(7, "2345") + basis_form(7, "1357") -
         basis_form(7, "1346") - basis_form(7, "1256") - basis_form(7, "1247");
}

Metric metric_from_three_form(const Form& phi) {
  require(phi.dim() == 7 && phi.grade() == 3, "metric_from_three_form: expects a 3-form on R^7");
  std::array<Form, 7> contracted;
  for (int i = 0; i < 7; ++i) contracted[i] = interior(unit(7, i), phi);
  Eigen::MatrixXd b(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      b(i, j) = top_coefficient(wedge(contracted[i], contracted[j], phi)) / 6.0;
      b(j, i) = b(i, j);
    }
  const double det = b.determinant();
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (!(std::abs(det) > 1e-300) || std::abs(det) <= 1e-14 * std::pow(scale, 7))
    throw DomainError("not a G2-structure: degenerate bilinear form");
  const double root = std::copysign(std::pow(std::abs(det), 1.0 / 9.0), det);
  const Eigen::MatrixXd gram = b / root;
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success || gram.selfadjointView<Eigen::Lower>().eigenvalues().minCoeff() <= 0.0)
    throw DomainError("not a G2-structure: indefinite bilinear form");
  return Metric(gram, root > 0 ? +1 : -1);
}

G2Data make_g2(const Form& phi) {
  Metric metric = metric_from_three_form(phi);
  Form star_phi = hodge(phi, metric);
  G2Data g{phi, star_phi, metric, {}, {}, {}, {}, {}, {}, {}};

  const Eigen::MatrixXd m = phi_wedge_star_operator(g);
  const Eigen::MatrixXd id21 = Eigen::MatrixXd::Identity(21, 21);
  g.proj2_7 = (m + id21) / 3.0;
  g.proj2_14 = (2.0 * id21 - m) / 3.0;

  g.phi_contraction = contraction_matrix(phi);
  g.star_phi_contraction = contraction_matrix(star_phi);
  const Eigen::MatrixXd& gram3 = metric.form_gram(3);
  g.proj3_1 = span_projector(phi.coeffs(), gram3);
  g.proj3_7 = span_projector(g.star_phi_contraction, gram3);
  g.proj3_27 = Eigen::MatrixXd::Identity(35, 35) - g.proj3_1 - g.proj3_7;
  return g;
}

const G2Data& standard_g2() {
  static const G2Data g = make_g2(standard_phi());
  return g;
}

Eigen::MatrixXd phi_wedge_star_operator(const G2Data& g) {
  Eigen::MatrixXd m(21, 21);
  const auto& t = index_table(7, 2);
  for (int j = 0; j < t.size(); ++j) {
    Form e(7, 2);
    e.coeffs()[j] = 1.0;
    m.col(j) = hodge(wedge(g.phi, e), g.metric).coeffs();
  }
  return m;
}

TwoFormSplit project2(const Form& f, const G2Data& g) {
  require(f.dim() == 7 && f.grade() == 2, "project2: expects a 2-form on R^7");
  Form f7(7, 2, g.proj2_7 * f.coeffs());
  Form f14(7, 2, g.proj2_14 * f.coeffs());
  Vector u = solve_contraction(g.phi_contraction, g.metric.form_gram(2), f7.coeffs());
  return {std::move(u), std::move(f7), std::move(f14)};
}

ThreeFormSplit project3(const Form& gamma, const G2Data& g) {
  require(gamma.dim() == 7 && gamma.grade() == 3, "project3: expects a 3-form on R^7");
  ThreeFormSplit s;
  s.gamma1 = Form(7, 3, g.proj3_1 * gamma.coeffs());
  s.gamma7 = Form(7, 3, g.proj3_7 * gamma.coeffs());
  s.gamma27 = Form(7, 3, g.proj3_27 * gamma.coeffs());
  s.scalar = inner(gamma, g.phi, g.metric) / inner(g.phi, g.phi, g.metric);
  s.u = solve_contraction(g.star_phi_contraction, g.metric.form_gram(3), s.gamma7.coeffs());
  return s;
}

double IdentityBattery::max_residual() const { return *std::max_element(residuals.begin(), residuals.end()); }

IdentityBattery identity_battery(const Vector& u, const Form& beta, const G2Data& g, const Tolerance& tol) {
  require(u.size() == 7 && beta.dim() == 7 && beta.grade() == 2, "identity_battery: expects u in R^7 and a 2-form");
  const Metric& m = g.metric;
  const double beta_norm = norm(beta, m);
  const Form beta7(7, 2, g.proj2_7 * beta.coeffs());
  require(norm(beta7, m) <= std::max(tol.rel * beta_norm, tol.abs_floor),
          "identity_battery: beta must lie in the 14-dimensional summand");

  const Form ub = flat(u, m);
  const Form star_ub = hodge(ub, m);
  const Form iphi = interior(u, g.phi);
  const Form istar = interior(u, g.star_phi);
  const double u2 = u.dot(m.gram() * u);

  IdentityBattery out;
  auto& r = out.residuals;
  r[0] = rel_residual(wedge(g.phi, istar), -4.0 * star_ub, m, tol);
  r[1] = rel_residual(wedge(g.star_phi, iphi), 3.0 * star_ub, m, tol);
  const Form phi_iphi = wedge(g.phi, iphi);
  r[2] = std::max(rel_residual(phi_iphi, 2.0 * hodge(iphi, m), m, tol),
                  rel_residual(phi_iphi, 2.0 * wedge(ub, g.star_phi), m, tol));
  r[3] = rel_residual(wedge_power(iphi, 3), 6.0 * u2 * star_ub, m, tol);
  r[4] = rel_residual(wedge(wedge_power(iphi, 2), beta), 2.0 * wedge(g.star_phi, ub, interior(u, beta)), m, tol);
  const Form beta2 = wedge(beta, beta);
  r[5] = rel_residual(wedge(iphi, beta2), -(beta_norm * beta_norm) * star_ub + wedge(g.phi, interior(u, beta2)), m,
                      tol);
  return out;
}

double lambda214_wedge_vanishing(const Form& beta, const G2Data& g) {
  require(beta.dim() == 7 && beta.grade() == 2, "lambda214_wedge_vanishing: expects a 2-form on R^7");
  return norm(wedge(beta, g.star_phi), g.metric);
}

LinearMap g2_rotation(const Form& beta, const G2Data& g, const Tolerance& tol) {
  const Form beta7(7, 2, g.proj2_7 * beta.coeffs());
  require(norm(beta7, g.metric) <= std::max(tol.rel * norm(beta, g.metric), tol.abs_floor),
          "g2_rotation: generator must lie in the 14-dimensional summand");
  const Eigen::MatrixXd gen = sharp2(beta, g.metric).matrix;
  LinearMap rot{gen.exp()};
  const Form moved = pullback(rot, g.phi);
  if (!tol.close(norm(Form(moved - g.phi), g.metric), norm(g.phi, g.metric)))
    throw DomainError("g2_rotation: generated map does not preserve phi");
  return rot;
}

}  // namespace extcalc
