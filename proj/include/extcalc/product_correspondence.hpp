#pragma once

#include <Eigen/Dense>

#include "extcalc/ddt_pointwise.hpp"
#include "extcalc/dhym_pointwise.hpp"
#include "extcalc/g2_structure.hpp"

namespace extcalc {

/// Linear Calabi-Yau data on R^6 in the (u1, v1, u2, v2, u3, v3) layout.
struct SU3Point {
  Metric g6 = Metric::euclidean(6);
  Eigen::MatrixXd J6;
  Form omega6;
  Form re_omega3;
  Form im_omega3;
};

/// omega = sum u^i ^ v^i, Omega = (u^1 + i v^1)(u^2 + i v^2)(u^3 + i v^3).
SU3Point standard_su3();

/// Omega as a complex 3-form.
CForm holomorphic_volume(const SU3Point& p);

struct ProductG2 {
  Form phi7;  ///< dx ^ omega + Re Omega
  Form psi7;  ///< omega^2/2 - dx ^ Im Omega
};

/// R^7 = (x, y1..y6). Throws DomainError("invalid SU(3) data") when phi7
/// does not define a G2-structure.
ProductG2 product_g2(const SU3Point& p);

/// Pullback along (x, y) -> y.
Form lift_to_product(const Form& f6);

/// Restriction to x = 0; throws ContractViolation if `f7` has a dx component.
Form restrict_from_product(const Form& f7);

/// Signed permutation taking the product layout to the standard basis of
/// the G2 module. For the layout above it is the identity.
const LinearMap& product_relabeling();

struct CorrespondenceCheck {
  double ddt_side = 0.0;        ///< |ddt residual of the lifted form|
  double dhym_im = 0.0;         ///< |Im (omega + iF)^3 / omega^3|
  double p02 = 0.0;             ///< |F^{0,2}|
  double wedge_im_omega = 0.0;  ///< |F ^ Im Omega|
  bool ddt_holds = false;
  bool dhym_holds = false;
  [[nodiscard]] bool agree() const { return ddt_holds == dhym_holds; }
};

/// Both sides of the product correspondence for a 2-form on R^6, classified
/// at `threshold` (absolute).
CorrespondenceCheck correspondence_check(const SU3Point& p, const Form& f6, double threshold = 1e-8);

}  // namespace extcalc
