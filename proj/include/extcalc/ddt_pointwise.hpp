#pragma once

#include <vector>

#include "extcalc/g2_structure.hpp"

namespace extcalc {

// Real-form convention: F is the real 2-form -i F_nabla of a Hermitian
// curvature, so the dDT equation reads -F^3/6 + F ^ *phi = 0.

/// -F^3/6 + F ^ *phi.
Form ddt_residual(const Form& f, const G2Data& g);

/// The same 6-form assembled from F = i(u)phi + F_14:
///   (3 - |u|^2 + |F_14|^2/2) *u^b - F_14^3/6
///   - *phi ^ u^b ^ i(u)F_14 - phi ^ F_14 ^ i(u)F_14.
/// Agrees with ddt_residual for every F.
Form ddt_residual_decomposed(const Form& f, const G2Data& g);

/// |ddt_residual| relative to the size of its two terms.
double ddt_relative_residual(const Form& f, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

/// Throws DomainError unless F solves the dDT equation to `tol`.
void require_ddt_solution(const Form& f, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

/// 1 - <F^2, *phi>/2.
double scalar_factor(const Form& f, const G2Data& g);

/// max(|i(u)F_14|, |phi ^ *F^2|); both vanish on solutions. Throws
/// DomainError when F is not a solution.
double orthogonality_check(const Form& f, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

/// All real roots x of (3 - x^2 + (l1^2 + l2^2 + l3^2)/2) x = l1 l2 l3, in
/// ascending order. Requires l1 + l2 + l3 = 0 (to 1e-12 relative).
std::vector<double> cartan_solve(double l1, double l2, double l3);

/// i(x e_1)phi + l1 e^23 + l2 e^45 + l3 e^67 for the standard structure.
Form cartan_form(double x, double l1, double l2, double l3);

/// Real roots of x^3 + p x + q, ascending; a closed-form start polished by
/// Newton steps. Complex pairs are dropped.
std::vector<double> depressed_cubic_roots(double p, double q);

struct InducedStructure {
  LinearMap map;  ///< I + F^#
  Form phi_f;     ///< (I + F^#)^* phi
  Form tilde_phi; ///< |scalar_factor|^{-3/4} phi_f
  double scalar_factor = 1.0;
};

/// Throws DomainError("degenerate induced structure") when
/// |1 - <F^2, *phi>/2| <= 1e-10.
InducedStructure induced_phi(const Form& f, const G2Data& g);

struct DdtReport {
  Form residual;
  double residual_norm = 0.0;
  double scalar_factor = 1.0;
  /// Relative pairwise deviation between the three routes to *_{phi_F} phi_F:
  /// the Hodge star of phi_F, the pullback of *phi, and the closed form.
  double lhs_minus_rhs_norm = 0.0;
  /// Relative deviation of the conformally rescaled identity
  /// *~ phi~ = C (*phi - F^2/2).
  double conformal_deviation = 0.0;
  int sign_c = 1;
  double bound_lhs = 0.0;
  double bound_rhs = 0.0;
};

/// Requires a dDT solution (DomainError otherwise).
DdtReport verify_theorem_c1(const Form& f, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

struct LinearizationDensity {
  Form density;      ///< b2 ^ (-F^2/2 + *phi)
  double deviation;  ///< relative gap to C b2 ^ *~ phi~
};

LinearizationDensity linearization_density(const Form& f, const Form& b2, const G2Data& g,
                                           const Tolerance& tol = kDefaultTolerance);

/// The upper bound on |F_7| in terms of |F_14| = lambda:
/// sqrt(2 lambda^2 + 12) cos(arccos(lambda^3 / (lambda^2 + 6)^{3/2}) / 3).
double f7_norm_bound(double f14_norm);

struct NormBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
};

NormBound norm_bound_check(const Form& f, const G2Data& g);

struct CubeBound {
  double lhs = 0.0;  ///< |beta^3|
  double rhs = 0.0;  ///< (sqrt 6 / 3) |beta|^3
};

CubeBound f14_cube_bound(const Form& beta, const G2Data& g);

struct WedgeRank {
  int rank = 0;
  double f3_norm = 0.0;
};

/// Rank of gamma -> F ^ gamma from 2-forms to 4-forms, by singular values
/// above 1e-10 of the largest.
WedgeRank wedge_injectivity(const Form& f, const G2Data& g);

/// Relative residual of *F + phi ^ F = (*F^3) ^ *phi / 6, the equivalent
/// form of the dDT equation in the real convention.
double reformulation_residual(const Form& f, const G2Data& g, const Tolerance& tol = kDefaultTolerance);

}  // namespace extcalc
