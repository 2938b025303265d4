#include "extcalc/ddt_pointwise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace extcalc {
namespace {

void require_two_form(const Form& f) {
  require(f.dim() == 7 && f.grade() == 2, "expects a 2-form on R^7");
}

double rel_gap(const Form& a, const Form& b, const Metric& m, const Tolerance& tol) {
  return tol.relative(norm(Form(a - b), m), std::max(norm(a, m), norm(b, m)));
}

}  // namespace

Form ddt_residual(const Form& f, const G2Data& g) {
  require_two_form(f);
  return wedge(f, g.star_phi) - wedge_power(f, 3) / 6.0;
}

Form ddt_residual_decomposed(const Form& f, const G2Data& g) {
  require_two_form(f);
  const Metric& m = g.metric;
  const TwoFormSplit s = project2(f, g);
  const Form ub = flat(s.u, m);
  const Form iu_f14 = interior(s.u, s.f14);
  const double u2 = s.u.dot(m.gram() * s.u);
  const double f14_2 = inner(s.f14, s.f14, m);
  return (3.0 - u2 + 0.5 * f14_2) * hodge(ub, m) - wedge_power(s.f14, 3) / 6.0 - wedge(g.star_phi, ub, iu_f14) -
         wedge(g.phi, s.f14, iu_f14);
}

double ddt_relative_residual(const Form& f, const G2Data& g, const Tolerance& tol) {
  const Form cube = wedge_power(f, 3) / 6.0;
  const Form lin = wedge(f, g.star_phi);
  return tol.relative(norm(Form(lin - cube), g.metric), std::max(norm(cube, g.metric), norm(lin, g.metric)));
}

void require_ddt_solution(const Form& f, const G2Data& g, const Tolerance& tol) {
  if (ddt_relative_residual(f, g, tol) > tol.rel) throw DomainError("F does not solve the dDT equation");
}

double scalar_factor(const Form& f, const G2Data& g) {
  require_two_form(f);
  return 1.0 - 0.5 * inner(wedge(f, f), g.star_phi, g.metric);
}

double orthogonality_check(const Form& f, const G2Data& g, const Tolerance& tol) {
  require_ddt_solution(f, g, tol);
  const TwoFormSplit s = project2(f, g);
  const double a = norm(interior(s.u, s.f14), g.metric);
  const double b = norm(wedge(g.phi, hodge(wedge(f, f), g.metric)), g.metric);
  return std::max(a, b);
}

std::vector<double> depressed_cubic_roots(double p, double q) {
  std::vector<double> roots;
  const double disc = -(4.0 * p * p * p + 27.0 * q * q);
  if (p == 0.0 && q == 0.0) {
    roots = {0.0};
  } else if (disc >= 0.0 && p < 0.0) {
    // Three real roots: trigonometric form.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
  } else {
    // One real root (Cardano); the complex pair is discarded.
    const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s));
  }
  for (double& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const double fx = (x * x + p) * x + q;
      const double dfx = 3.0 * x * x + p;
      if (dfx == 0.0) break;
      x -= fx / dfx;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> cartan_solve(double l1, double l2, double l3) {
  const double scale = std::max({1.0, std::abs(l1), std::abs(l2), std::abs(l3)});
  require(std::abs(l1 + l2 + l3) <= 1e-12 * scale, "cartan_solve: lambdas must sum to zero");
  const double s = l1 * l1 + l2 * l2 + l3 * l3;
  // (3 - x^2 + s/2) x = l1 l2 l3  <=>  x^3 - (3 + s/2) x + l1 l2 l3 = 0.
  return depressed_cubic_roots(-(3.0 + 0.5 * s), l1 * l2 * l3);
}

Form cartan_form(double x, double l1, double l2, double l3) {
  const auto& g = standard_g2();
  return interior(Vector(x * Vector::Unit(7, 0)), g.phi) + basis_form(7, "23", l1) + basis_form(7, "45", l2) +
         basis_form(7, "67", l3);
}

InducedStructure induced_phi(const Form& f, const G2Data& g) {
  require_two_form(f);
  const double sf = scalar_factor(f, g);
  if (std::abs(sf) <= 1e-10) throw DomainError("degenerate induced structure");
  LinearMap map = LinearMap::identity(7);
  map.matrix += sharp2(f, g.metric).matrix;
  Form phi_f = pullback(map, g.phi);
  Form tilde = std::pow(std::abs(sf), -0.75) * phi_f;
  return {std::move(map), std::move(phi_f), std::move(tilde), sf};
}

double f7_norm_bound(double f14_norm) {
  const double l2 = f14_norm * f14_norm;
  const double ratio = f14_norm * l2 / std::pow(l2 + 6.0, 1.5);
  return std::sqrt(2.0 * l2 + 12.0) * std::cos(std::acos(std::clamp(ratio, -1.0, 1.0)) / 3.0);
}

NormBound norm_bound_check(const Form& f, const G2Data& g) {
  const TwoFormSplit s = project2(f, g);
  NormBound b;
  b.lhs = norm(s.f7, g.metric);
  b.rhs = f7_norm_bound(norm(s.f14, g.metric));
  b.ok = b.lhs <= b.rhs + 1e-9;
  return b;
}

DdtReport verify_theorem_c1(const Form& f, const G2Data& g, const Tolerance& tol) {
  require_ddt_solution(f, g, tol);
  const Metric& m = g.metric;
  DdtReport r;
  r.residual = ddt_residual(f, g);
  r.residual_norm = norm(r.residual, m);

  const InducedStructure ind = induced_phi(f, g);
  r.scalar_factor = ind.scalar_factor;
  r.sign_c = ind.scalar_factor > 0 ? 1 : -1;

  const Form closed = g.star_phi - 0.5 * wedge(f, f);
  const Form via_star = hodge(ind.phi_f, metric_from_three_form(ind.phi_f));
  const Form via_pullback = pullback(ind.map, g.star_phi);
  const Form via_formula = ind.scalar_factor * closed;
  r.lhs_minus_rhs_norm = std::max({rel_gap(via_star, via_pullback, m, tol), rel_gap(via_star, via_formula, m, tol),
                                   rel_gap(via_pullback, via_formula, m, tol)});

  const Form tilde_star = hodge(ind.tilde_phi, metric_from_three_form(ind.tilde_phi));
  r.conformal_deviation = rel_gap(tilde_star, double(r.sign_c) * closed, m, tol);

  const NormBound nb = norm_bound_check(f, g);
  r.bound_lhs = nb.lhs;
  r.bound_rhs = nb.rhs;
  return r;
}

LinearizationDensity linearization_density(const Form& f, const Form& b2, const G2Data& g, const Tolerance& tol) {
  require(b2.dim() == 7 && b2.grade() == 2, "linearization_density: b2 must be a 2-form on R^7");
  require_ddt_solution(f, g, tol);
  Form density = wedge(b2, g.star_phi - 0.5 * wedge(f, f));
  const InducedStructure ind = induced_phi(f, g);
  const double c = ind.scalar_factor > 0 ? 1.0 : -1.0;
  const Form other = c * wedge(b2, hodge(ind.tilde_phi, metric_from_three_form(ind.tilde_phi)));
  const double dev = rel_gap(density, other, g.metric, tol);
  return {std::move(density), dev};
}

CubeBound f14_cube_bound(const Form& beta, const G2Data& g) {
  require_two_form(beta);
  const double n = norm(beta, g.metric);
  return {norm(wedge_power(beta, 3), g.metric), std::sqrt(6.0) / 3.0 * n * n * n};
}

WedgeRank wedge_injectivity(const Form& f, const G2Data& g) {
  require_two_form(f);
  Eigen::MatrixXd w(35, 21);
  for (int j = 0; j < 21; ++j) {
    Form e(7, 2);
    e.coeffs()[j] = 1.0;
    w.col(j) = wedge(f, e).coeffs();
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(w).singularValues();
  WedgeRank r;
  r.f3_norm = norm(wedge_power(f, 3), g.metric);
  const double top = sv.size() ? sv[0] : 0.0;
  if (top > 0.0) r.rank = static_cast<int>((sv.array() > 1e-10 * top).count());
  return r;
}

double reformulation_residual(const Form& f, const G2Data& g, const Tolerance& tol) {
  require_two_form(f);
  const Metric& m = g.metric;
  const Form lhs = hodge(f, m) + wedge(g.phi, f);
  const Form rhs = wedge(hodge(wedge_power(f, 3), m), g.star_phi) / 6.0;
  return rel_gap(lhs, rhs, m, tol);
}

}  // namespace extcalc
