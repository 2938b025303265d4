#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "extcalc/kform.hpp"
#include "extcalc/tolerance.hpp"

namespace extcalc {

// Coordinates on R^{2n} are ordered (u1, v1, u2, v2, ...) with J u_i = v_i.
// F is the real 2-form -i F_nabla, so the complex combination is omega + iF.

struct HermitianPoint {
  int n = 0;
  Metric g = Metric::euclidean(2);
  Eigen::MatrixXd J;
  Form omega;
  Form F;
  std::vector<double> lambdas;    ///< descending
  Eigen::MatrixXd adapted_basis;  ///< columns u_1, v_1, ..., u_n, v_n
};

/// Euclidean R^{2n}, standard J, omega = sum u^i ^ v^i and F = 0. 1 <= n <= 4.
HermitianPoint standard_kahler(int n);

/// The 2-form X, Y -> g(JX, Y).
Form kahler_form(const Metric& g, const Eigen::MatrixXd& J);

/// Throws ContractViolation unless J^2 = -I and g(J., J.) = g.
void require_compatible(const Metric& g, const Eigen::MatrixXd& J);

/// max |F(J., J.) - F| relative to |F|; zero exactly for (1,1) forms.
double type11_defect(const Form& f, const Eigen::MatrixXd& J);

struct NormalForm {
  std::vector<double> lambdas;
  Eigen::MatrixXd basis;
};

/// Eigenvalue normal form F = sum lambda_i u^i ^ v^i in a g-orthonormal basis
/// with v_i = J u_i. Throws DomainError("F has nonzero (0,2) part") unless F
/// is (1,1) to 1e-10.
NormalForm normal_form(const Metric& g, const Eigen::MatrixXd& J, const Form& f);

/// sum lambda_i u^i ^ v^i read back through the basis.
Form reassemble(const NormalForm& nf);

/// Point with the given metric, complex structure and (1,1) form.
HermitianPoint hermitian_point(const Metric& g, const Eigen::MatrixXd& J, const Form& f);
HermitianPoint with_curvature(const HermitianPoint& pt, const Form& f);

struct EtaMetrics {
  Metric eta;
  Form omega_eta;
  std::optional<Metric> tilde_eta;  ///< absent for n = 1
  std::optional<Form> tilde_omega;
};

/// eta = g + g(F^#., F^#.) and omega_eta = eta(J., .); the rescaled pair
/// (1/r)^{1/(n-1)} eta is included for n >= 2.
EtaMetrics eta_metrics(const HermitianPoint& pt);

/// Throws ContractViolation for n = 1, where the rescaling exponent is undefined.
Metric tilde_eta(const HermitianPoint& pt);

/// sum (1 + lambda_i^2) u^i ^ v^i assembled from the normal form.
Form omega_eta_from_normal_form(const HermitianPoint& pt);

/// (omega + iF)^n / omega^n by direct expansion of the wedge power.
std::complex<double> zeta_expansion(const HermitianPoint& pt);

struct RadiusAngle {
  double r = 1.0;
  double theta = 0.0;  ///< sum of arctan(lambda_i), not reduced
  double expansion_deviation = 0.0;
};

RadiusAngle radius_angle(const HermitianPoint& pt, const Tolerance& tol = kDefaultTolerance);

struct DhymReport {
  double r = 1.0;
  double theta = 0.0;
  double p02_norm = 0.0;
  double im_residual = 0.0;
  double vol_identity_residual = 0.0;
  double im_identity_residual = 0.0;
  bool type_11 = true;
};

/// Residual pair of the dHYM equation with phase e^{i theta0}:
/// |F^{0,2}| and |Im(e^{-i theta0} (omega + iF)^n) / omega^n|. Accepts any
/// real 2-form; when F is not (1,1) the normal form is skipped, r and theta
/// are read from the expansion and the identity residuals are NaN.
DhymReport dhym_residual(const HermitianPoint& pt, const Form& f, double theta0,
                         const Tolerance& tol = kDefaultTolerance);
DhymReport dhym_residual(const HermitianPoint& pt, double theta0, const Tolerance& tol = kDefaultTolerance);

/// omega_eta^n = r^2 omega^n, relative residual.
double vol_identity_check(const HermitianPoint& pt, const Tolerance& tol = kDefaultTolerance);

/// Im(i e^{-i theta} (omega + iF)^{n-1}) = omega_eta^{n-1} / r, relative
/// residual. At n = 1 both sides are functions: cos(theta) and 1/r.
double im_identity_check(const HermitianPoint& pt, const Tolerance& tol = kDefaultTolerance);

/// Matrix of the derivation extending xi -> xi o J to grade-k forms, on
/// lexicographic coefficients. Eigenvalue i(p - q) on the (p, q) part.
Eigen::MatrixXd j_derivation(const Eigen::MatrixXd& J, int grade);

/// (p, q) component of a complex form; u^j + i v^j spans the (1,0) forms.
CForm pq_project(const CForm& a, int p, int q, const Eigen::MatrixXd& J);

/// Hermitian norm of the (0,2) part of a real 2-form.
double p02_norm(const Form& f, const Eigen::MatrixXd& J, const Metric& g);

/// alpha o J on each slot, i.e. the pullback of alpha by J.
Form dc_pointwise(const Form& a, const Eigen::MatrixXd& J);

/// xi ^ J^{-1} xi with J^{-1} xi = -xi o J.
Form dc_symbol(const Form& xi, const Eigen::MatrixXd& J);

/// omega^{n-1} ^ alpha = (n-1)! *(J alpha) for a 1-form alpha, relative residual.
double lemma_a1_residual(const HermitianPoint& pt, const Form& alpha, const Tolerance& tol = kDefaultTolerance);

struct SymbolBound {
  double sigma = 0.0;        ///< sum (a_i^2 + b_i^2) / (1 + lambda_i^2)
  double bound = 0.0;        ///< |xi|^2 / (1 + max lambda_i^2)
  double wedge_route = 0.0;  ///< n omega_eta^{n-1} ^ (xi ^ J^{-1} xi) / omega_eta^n
};

/// The symbol at a single point of the connecting path. Throws
/// ContractViolation for xi = 0.
SymbolBound symbol_bound(const HermitianPoint& pt, const Form& xi);

}  // namespace extcalc
