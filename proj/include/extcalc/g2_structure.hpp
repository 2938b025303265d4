#pragma once

#include <Eigen/Dense>
#include <array>

#include "extcalc/kform.hpp"
#include "extcalc/tolerance.hpp"

namespace extcalc {

/// A G2-structure on R^7 together with everything derived from it once:
/// the dual 4-form, the induced metric and orientation, and the projection
/// matrices onto the irreducible summands of 2- and 3-forms (acting on
/// lexicographic coefficient vectors).
struct G2Data {
  Form phi;
  Form star_phi;
  Metric metric;
  Eigen::MatrixXd proj2_7;   // 21 x 21
  Eigen::MatrixXd proj2_14;  // 21 x 21
  Eigen::MatrixXd proj3_1;   // 35 x 35
  Eigen::MatrixXd proj3_7;   // 35 x 35
  Eigen::MatrixXd proj3_27;  // 35 x 35
  /// Columns i(e_j) phi, 21 x 7.
  Eigen::MatrixXd phi_contraction;
  /// Columns i(e_j) *phi, 35 x 7.
  Eigen::MatrixXd star_phi_contraction;
};

/// e^123 + e^145 + e^167 + e^246 - e^257 - e^347 - e^356.
Form standard_phi();
/// e^4567 + e^2367 + e^2345 + e^1357 - e^1346 - e^1256 - e^1247.
Form standard_star_phi();

/// The standard structure; cached, so repeated calls are cheap copies.
const G2Data& standard_g2();

/// Builds G2Data for an arbitrary G2-structure. Throws DomainError when
/// `phi` is not a G2-structure.
G2Data make_g2(const Form& phi);

/// The metric g_phi with g(u, v) vol = 1/6 i(u)phi ^ i(v)phi ^ phi.
///
/// B(u, v) is read off against e^{1..7}; since B transforms as
/// det(L) L^T B L under pullback by L, g = det(B)^{-1/9} B is the unique
/// normalisation consistent with vol being the metric volume form. The
/// orientation is the sign of det(B)^{1/9}. Throws DomainError("not a
/// G2-structure") unless g is positive definite.
Metric metric_from_three_form(const Form& phi);

/// Matrix of alpha -> *(phi ^ alpha) on 2-forms (eigenvalues 2 and -1).
Eigen::MatrixXd phi_wedge_star_operator(const G2Data& g);

struct TwoFormSplit {
  Vector u;  ///< F_7 = i(u) phi
  Form f7;
  Form f14;

  [[nodiscard]] Form reassemble() const { return f7 + f14; }
};

TwoFormSplit project2(const Form& f, const G2Data& g);

struct ThreeFormSplit {
  double scalar = 0.0;  ///< gamma_1 = scalar * phi
  Vector u;             ///< gamma_7 = i(u) *phi
  Form gamma1;
  Form gamma7;
  Form gamma27;
};

ThreeFormSplit project3(const Form& gamma, const G2Data& g);

/// Residuals (Tolerance::relative) of the six standard G2 identities for a
/// vector u and beta in the 14-dimensional summand:
///   [0] phi ^ i(u)*phi = -4 *u^b
///   [1] *phi ^ i(u)phi = 3 *u^b
///   [2] phi ^ i(u)phi = 2 *(i(u)phi) = 2 u^b ^ *phi
///   [3] (i(u)phi)^3 = 6 |u|^2 *u^b
///   [4] (i(u)phi)^2 ^ beta = 2 *phi ^ u^b ^ i(u)beta
///   [5] i(u)phi ^ beta^2 = -|beta|^2 *u^b + phi ^ i(u)(beta^2)
struct IdentityBattery {
  std::array<double, 6> residuals{};
  [[nodiscard]] double max_residual() const;
};

/// Throws ContractViolation if beta has a 7-component above tolerance.
IdentityBattery identity_battery(const Vector& u, const Form& beta, const G2Data& g,
                                 const Tolerance& tol = kDefaultTolerance);

/// |beta ^ *phi|; vanishes exactly on the 14-dimensional summand.
double lambda214_wedge_vanishing(const Form& beta, const G2Data& g);

/// exp(beta^#) for beta in the 14-dimensional summand: an element of G2.
/// Throws DomainError unless the result preserves phi to `tol`.
LinearMap g2_rotation(const Form& beta, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

}  // namespace extcalc
