#include "extcalc/dhym_pointwise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace extcalc {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXd standard_j(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * i + 1, 2 * i) = 1.0;
    j(2 * i, 2 * i + 1) = -1.0;
  }
  return j;
}

// Coframe of a basis: row a of P^{-1} is the covector dual to column a.
Form from_frame(const Eigen::MatrixXd& basis, const Form& frame_form) {
  return pullback(LinearMap{basis.inverse()}, frame_form);
}

Form diagonal_form(int n, const std::vector<double>& weights) {
  Form out(2 * n, 2);
  for (int i = 0; i < n; ++i) out += Form::monomial(2 * n, {2 * i, 2 * i + 1}, weights[i]);
  return out;
}

double product_radius(const std::vector<double>& lambdas) {
  double r = 1.0;
  for (double l : lambdas) r *= std::sqrt(1.0 + l * l);
  return r;
}

double sum_angle(const std::vector<double>& lambdas) {
  double t = 0.0;
  for (double l : lambdas) t += std::atan(l);
  return t;
}

CForm complexify(const Form& f) { return f.cast<Complex>(); }

CForm omega_plus_if(const HermitianPoint& pt, const Form& f) {
  return complexify(pt.omega) + Complex(0.0, 1.0) * complexify(f);
}

}  // namespace

HermitianPoint standard_kahler(int n) {
  require(n >= 1 && n <= 4, "standard_kahler: 1 <= n <= 4");
  HermitianPoint pt;
  pt.n = n;
  pt.g = Metric::euclidean(2 * n);
  pt.J = standard_j(n);
  pt.omega = kahler_form(pt.g, pt.J);
  pt.F = Form(2 * n, 2);
  pt.lambdas.assign(n, 0.0);
  pt.adapted_basis = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  return pt;
}

Form kahler_form(const Metric& g, const Eigen::MatrixXd& J) {
  return two_form_from_matrix(J.transpose() * g.gram());
}

void require_compatible(const Metric& g, const Eigen::MatrixXd& J) {
  const int d = g.dim();
  require(J.rows() == d && J.cols() == d && d % 2 == 0, "J must be a square matrix of even size matching g");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  const double scale = std::max(1.0, max_abs(g.gram()));
  require(max_abs(J * J + id) <= 1e-12 * std::max(1.0, max_abs(J) * max_abs(J)), "J must square to -I");
  require(max_abs(J.transpose() * g.gram() * J - g.gram()) <= 1e-12 * scale * std::max(1.0, max_abs(J) * max_abs(J)),
          "J must be g-orthogonal");
}

double type11_defect(const Form& f, const Eigen::MatrixXd& J) {
  const Eigen::MatrixXd a = skew_matrix(f);
  return max_abs(J.transpose() * a * J - a) / std::max(max_abs(a), 1.0);
}

NormalForm normal_form(const Metric& g, const Eigen::MatrixXd& J, const Form& f) {
  require_compatible(g, J);
  require(f.grade() == 2 && f.dim() == g.dim(), "normal_form: F must be a 2-form on the same space");
  if (type11_defect(f, J) > 1e-10) throw DomainError("F has nonzero (0,2) part");
  const int d = g.dim();
  const int n = d / 2;
  const Eigen::MatrixXd& G = g.gram();
  auto dot = [&](const Vector& x, const Vector& y) { return x.dot(G * y); };

  // Unitary frame u_1..u_n: orthonormal together with J u_1..J u_n.
  std::vector<Vector> frame;
  for (int i = 0; i < d && static_cast<int>(frame.size()) < n; ++i) {
    Vector x = Vector::Unit(d, i);
    for (const Vector& u : frame) {
      const Vector ju = J * u;
      x -= dot(u, x) * u + dot(ju, x) * ju;
    }
    const double nx = std::sqrt(dot(x, x));
    if (nx < 1e-6) continue;
    frame.push_back(x / nx);
  }
  require(static_cast<int>(frame.size()) == n, "normal_form: failed to build a unitary frame");

  // H = -J F^# commutes with J and is g-self-adjoint: a Hermitian matrix
  // in complex coordinates z_k = g(., u_k) + i g(., J u_k).
  const Eigen::MatrixXd h = -J * sharp2(f, g).matrix;
  Eigen::MatrixXcd hc(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const Vector hu = h * frame[l];
      hc(k, l) = Complex(dot(hu, frame[k]), dot(hu, J * frame[k]));
    }
  hc = 0.5 * (hc + hc.adjoint()).eval();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hc);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return es.eigenvalues()[a] > es.eigenvalues()[b]; });

  NormalForm nf;
  nf.basis.resize(d, d);
  for (int j = 0; j < n; ++j) {
    const int idx = order[j];
    nf.lambdas.push_back(es.eigenvalues()[idx]);
    Vector x = Vector::Zero(d);
    for (int l = 0; l < n; ++l) {
      const Complex c = es.eigenvectors()(l, idx);
      x += c.real() * frame[l] + c.imag() * (J * frame[l]);
    }
    x /= std::sqrt(dot(x, x));
    nf.basis.col(2 * j) = x;
    nf.basis.col(2 * j + 1) = J * x;
  }
  return nf;
}

Form reassemble(const NormalForm& nf) {
  const int n = static_cast<int>(nf.lambdas.size());
  return from_frame(nf.basis, diagonal_form(n, nf.lambdas));
}

HermitianPoint hermitian_point(const Metric& g, const Eigen::MatrixXd& J, const Form& f) {
  NormalForm nf = normal_form(g, J, f);
  HermitianPoint pt;
  pt.n = g.dim() / 2;
  pt.g = g;
  pt.J = J;
  pt.omega = kahler_form(g, J);
  pt.F = f;
  pt.lambdas = std::move(nf.lambdas);
  pt.adapted_basis = std::move(nf.basis);
  return pt;
}

HermitianPoint with_curvature(const HermitianPoint& pt, const Form& f) { return hermitian_point(pt.g, pt.J, f); }

EtaMetrics eta_metrics(const HermitianPoint& pt) {
  const Eigen::MatrixXd& G = pt.g.gram();
  const Eigen::MatrixXd s = sharp2(pt.F, pt.g).matrix;
  Eigen::MatrixXd gram = G + s.transpose() * G * s;
  gram = 0.5 * (gram + gram.transpose()).eval();
  Metric eta(gram, pt.g.orientation());
  Form omega_eta = two_form_from_matrix(pt.J.transpose() * gram);
  EtaMetrics out{eta, omega_eta, std::nullopt, std::nullopt};
  if (pt.n >= 2) {
    const double c = std::pow(1.0 / product_radius(pt.lambdas), 1.0 / (pt.n - 1));
    out.tilde_eta = Metric(c * gram, pt.g.orientation());
    out.tilde_omega = c * omega_eta;
  }
  return out;
}

Metric tilde_eta(const HermitianPoint& pt) {
  require(pt.n >= 2, "tilde eta is unsupported for n = 1");
  return *eta_metrics(pt).tilde_eta;
}

Form omega_eta_from_normal_form(const HermitianPoint& pt) {
  std::vector<double> w;
  for (double l : pt.lambdas) w.push_back(1.0 + l * l);
  return from_frame(pt.adapted_basis, diagonal_form(pt.n, w));
}

std::complex<double> zeta_expansion(const HermitianPoint& pt) {
  const CForm top = wedge_power(omega_plus_if(pt, pt.F), pt.n);
  return top_coefficient(top) / top_coefficient(wedge_power(pt.omega, pt.n));
}

RadiusAngle radius_angle(const HermitianPoint& pt, const Tolerance& tol) {
  RadiusAngle ra;
  ra.r = product_radius(pt.lambdas);
  ra.theta = sum_angle(pt.lambdas);
  const Complex predicted = std::polar(ra.r, ra.theta);
  ra.expansion_deviation = tol.relative(std::abs(zeta_expansion(pt) - predicted), ra.r);
  return ra;
}

double vol_identity_check(const HermitianPoint& pt, const Tolerance& tol) {
  const EtaMetrics em = eta_metrics(pt);
  const double r = product_radius(pt.lambdas);
  const Form lhs = wedge_power(em.omega_eta, pt.n);
  const Form rhs = r * r * wedge_power(pt.omega, pt.n);
  return tol.relative(norm(Form(lhs - rhs), pt.g), norm(rhs, pt.g));
}

double im_identity_check(const HermitianPoint& pt, const Tolerance& tol) {
  const double r = product_radius(pt.lambdas);
  const double theta = sum_angle(pt.lambdas);
  const Complex phase = Complex(0.0, 1.0) * std::polar(1.0, -theta);
  const Form lhs = (phase * wedge_power(omega_plus_if(pt, pt.F), pt.n - 1)).imag();
  const Form rhs = wedge_power(omega_eta_from_normal_form(pt), pt.n - 1) / r;
  return tol.relative(norm(Form(lhs - rhs), pt.g), std::max(norm(lhs, pt.g), norm(rhs, pt.g)));
}

DhymReport dhym_residual(const HermitianPoint& pt, const Form& f, double theta0, const Tolerance& tol) {
  require(f.grade() == 2 && f.dim() == 2 * pt.n, "dhym_residual: F must be a 2-form on R^{2n}");
  DhymReport rep;
  rep.p02_norm = p02_norm(f, pt.J, pt.g);
  rep.type_11 = type11_defect(f, pt.J) <= 1e-10;
  const CForm top = wedge_power(omega_plus_if(pt, f), pt.n);
  const Complex zeta = top_coefficient(top) / top_coefficient(wedge_power(pt.omega, pt.n));
  rep.im_residual = std::abs((std::polar(1.0, -theta0) * zeta).imag());
  if (rep.type_11) {
    const HermitianPoint full = with_curvature(pt, f);
    rep.r = product_radius(full.lambdas);
    rep.theta = sum_angle(full.lambdas);
    rep.vol_identity_residual = vol_identity_check(full, tol);
    rep.im_identity_residual = im_identity_check(full, tol);
  } else {
    rep.r = std::abs(zeta);
    rep.theta = std::arg(zeta);
    rep.vol_identity_residual = std::nan("");
    rep.im_identity_residual = std::nan("");
  }
  return rep;
}

DhymReport dhym_residual(const HermitianPoint& pt, double theta0, const Tolerance& tol) {
  return dhym_residual(pt, pt.F, theta0, tol);
}

Eigen::MatrixXd j_derivation(const Eigen::MatrixXd& J, int grade) {
  const int d = static_cast<int>(J.rows());
  const IndexTable& t = index_table(d, grade);
  // Column i of J^T holds the coefficients of e^i o J.
  const Eigen::MatrixXd m = J.transpose();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(t.size(), t.size());
  for (int col = 0; col < t.size(); ++col) {
    const IndexMask mask = t.mask(col);
    int slot = 0;
    for (int i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      const IndexMask rest = static_cast<IndexMask>(mask & ~(1u << i));
      for (int j = 0; j < d; ++j) {
        if (m(j, i) == 0.0 || (rest & (1u << j))) continue;
        const int parity = slot + bits_below(rest, j);
        out(t.position(static_cast<IndexMask>(rest | (1u << j))), col) += (parity & 1 ? -1.0 : 1.0) * m(j, i);
      }
      ++slot;
    }
  }
  return out;
}

CForm pq_project(const CForm& a, int p, int q, const Eigen::MatrixXd& J) {
  require(p >= 0 && q >= 0 && p + q == a.grade(), "pq_project: p + q must equal the grade");
  require(J.rows() == a.dim(), "pq_project: dimension mismatch");
  const int k = a.grade();
  const Eigen::MatrixXcd d = j_derivation(J, k).cast<Complex>();
  const Eigen::Index size = d.rows();
  const Complex mu_p(0.0, 2.0 * p - k);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(size, size);
  for (int other = 0; other <= k; ++other) {
    if (other == p) continue;
    const Complex mu(0.0, 2.0 * other - k);
    proj = (proj * (d - mu * Eigen::MatrixXcd::Identity(size, size)) / (mu_p - mu)).eval();
  }
  return CForm(a.dim(), k, proj * a.coeffs());
}

double p02_norm(const Form& f, const Eigen::MatrixXd& J, const Metric& g) {
  return norm(pq_project(f.cast<Complex>(), 0, 2, J), g);
}

Form dc_pointwise(const Form& a, const Eigen::MatrixXd& J) { return pullback(LinearMap{J}, a); }

Form dc_symbol(const Form& xi, const Eigen::MatrixXd& J) {
  require(xi.grade() == 1, "dc_symbol: xi must be a 1-form");
  return wedge(xi, Form(-dc_pointwise(xi, J)));
}

double lemma_a1_residual(const HermitianPoint& pt, const Form& alpha, const Tolerance& tol) {
  require(alpha.grade() == 1 && alpha.dim() == 2 * pt.n, "lemma_a1_residual: alpha must be a 1-form on R^{2n}");
  double fact = 1.0;
  for (int i = 2; i < pt.n; ++i) fact *= i;
  const Form lhs = wedge(wedge_power(pt.omega, pt.n - 1), alpha);
  const Form rhs = fact * hodge(dc_pointwise(alpha, pt.J), pt.g);
  return tol.relative(norm(Form(lhs - rhs), pt.g), std::max(norm(lhs, pt.g), norm(rhs, pt.g)));
}

SymbolBound symbol_bound(const HermitianPoint& pt, const Form& xi) {
  require(xi.grade() == 1 && xi.dim() == 2 * pt.n, "symbol_bound: xi must be a 1-form on R^{2n}");
  const double xi2 = inner(xi, xi, pt.g);
  require(xi2 > 0.0, "symbol_bound: xi must be nonzero");
  SymbolBound sb;
  double max_l2 = 0.0;
  for (int i = 0; i < pt.n; ++i) {
    const double l2 = pt.lambdas[i] * pt.lambdas[i];
    const double a = xi.coeffs().dot(pt.adapted_basis.col(2 * i));
    const double b = xi.coeffs().dot(pt.adapted_basis.col(2 * i + 1));
    sb.sigma += (a * a + b * b) / (1.0 + l2);
    max_l2 = std::max(max_l2, l2);
  }
  sb.bound = xi2 / (1.0 + max_l2);
  const Form omega_eta = eta_metrics(pt).omega_eta;
  const Form num = pt.n * wedge(wedge_power(omega_eta, pt.n - 1), dc_symbol(xi, pt.J));
  sb.wedge_route = top_coefficient(num) / top_coefficient(wedge_power(omega_eta, pt.n));
  return sb;
}

}  // namespace extcalc
