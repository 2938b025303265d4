#include "extcalc/product_correspondence.hpp"

namespace extcalc {
namespace {

Eigen::MatrixXd projection_matrix() {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(6, 7);
  p.rightCols(6).setIdentity();
  return p;
}

}  // namespace

SU3Point standard_su3() {
  const HermitianPoint k = standard_kahler(3);
  SU3Point p;
  p.g6 = k.g;
  p.J6 = k.J;
  p.omega6 = k.omega;
  CForm omega = CForm::constant(6, 1.0);
  for (int i = 0; i < 3; ++i)
    omega = wedge(omega, CForm(CForm::monomial(6, {2 * i}) + Complex(0.0, 1.0) * CForm::monomial(6, {2 * i + 1})));
  p.re_omega3 = omega.real();
  p.im_omega3 = omega.imag();
  return p;
}

CForm holomorphic_volume(const SU3Point& p) {
  return p.re_omega3.cast<Complex>() + Complex(0.0, 1.0) * p.im_omega3.cast<Complex>();
}

ProductG2 product_g2(const SU3Point& p) {
  const Form dx = Form::monomial(7, {0});
  const Form omega = lift_to_product(p.omega6);
  ProductG2 out;
  out.phi7 = wedge(dx, omega) + lift_to_product(p.re_omega3);
  out.psi7 = 0.5 * wedge(omega, omega) - wedge(dx, lift_to_product(p.im_omega3));
  try {
    metric_from_three_form(out.phi7);
  } catch (const DomainError&) {
    throw DomainError("invalid SU(3) data");
  }
  return out;
}

Form lift_to_product(const Form& f6) {
  require(f6.dim() == 6, "lift_to_product: expects a form on R^6");
  return pullback(LinearMap{projection_matrix()}, f6);
}

Form restrict_from_product(const Form& f7) {
  require(f7.dim() == 7, "restrict_from_product: expects a form on R^7");
  const Form dx_part = wedge(Form::monomial(7, {0}), interior(Vector(Vector::Unit(7, 0)), f7));
  require(dx_part.max_abs() == 0.0, "restrict_from_product: form has a dx component");
  return pullback(LinearMap{projection_matrix().transpose()}, f7);
}

const LinearMap& product_relabeling() {
  static const LinearMap map = LinearMap::identity(7);
  return map;
}

CorrespondenceCheck correspondence_check(const SU3Point& p, const Form& f6, double threshold) {
  require(f6.dim() == 6 && f6.grade() == 2, "correspondence_check: F6 must be a 2-form on R^6");
  const ProductG2 prod = product_g2(p);
  const G2Data g = make_g2(pullback(product_relabeling(), prod.phi7));
  const Form lifted = pullback(product_relabeling(), lift_to_product(f6));

  HermitianPoint pt = standard_kahler(3);
  pt.g = p.g6;
  pt.J = p.J6;
  pt.omega = p.omega6;
  const DhymReport rep = dhym_residual(pt, f6, 0.0);

  CorrespondenceCheck c;
  c.ddt_side = norm(ddt_residual(lifted, g), g.metric);
  c.dhym_im = rep.im_residual;
  c.p02 = rep.p02_norm;
  c.wedge_im_omega = norm(wedge(f6, p.im_omega3), p.g6);
  c.ddt_holds = c.ddt_side < threshold;
  c.dhym_holds = c.dhym_im < threshold && c.p02 < threshold;
  return c;
}

}  // namespace extcalc
