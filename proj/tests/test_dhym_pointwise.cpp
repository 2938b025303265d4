#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extcalc/dhym_pointwise.hpp"
#include "extcalc/sampling.hpp"

using namespace extcalc;

namespace {

constexpr double kPi = std::numbers::pi;

// Gram matrix of a random Hermitian metric for the standard J.
Metric hermitian_metric(Sampler& s, int n) {
  Eigen::MatrixXd u = s.unitary(n);
  Eigen::VectorXd d(2 * n);
  for (int i = 0; i < n; ++i) d[2 * i] = d[2 * i + 1] = s.uniform(0.5, 2.0);
  const Eigen::MatrixXd g = u * d.asDiagonal() * u.transpose();
  return Metric(0.5 * (g + g.transpose()));
}

double reassembly_gap(const HermitianPoint& pt) {
  return (reassemble({pt.lambdas, pt.adapted_basis}) - pt.F).max_abs();
}

}  // namespace

TEST_SUITE("dhym_pointwise") {
  TEST_CASE("standard Kahler scaffold") {
    const HermitianPoint p1 = standard_kahler(1);
    CHECK((p1.omega - basis_form(2, "12")).max_abs() == 0.0);
    for (int n = 1; n <= 4; ++n) {
      const HermitianPoint p = standard_kahler(n);
      double fact = 1.0;
      for (int i = 2; i <= n; ++i) fact *= i;
      CHECK((wedge_power(p.omega, n) / fact - volume_form(p.g)).max_abs() < 1e-14);
      CHECK((p.J * p.J + Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() == 0.0);
      CHECK((p.J.transpose() * p.J - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() == 0.0);
      CHECK(type11_defect(p.omega, p.J) == 0.0);
    }
    CHECK_THROWS_AS(standard_kahler(0), ContractViolation);
    CHECK_THROWS_AS(standard_kahler(5), ContractViolation);
  }

  TEST_CASE("normal form") {
    const HermitianPoint base = standard_kahler(2);
    const HermitianPoint z = with_curvature(base, Form(4, 2));
    CHECK(z.lambdas == std::vector<double>{0.0, 0.0});

    const Form f = 3.0 * basis_form(4, "12") - basis_form(4, "34");
    const HermitianPoint p = with_curvature(base, f);
    CHECK(p.lambdas[0] == doctest::Approx(3.0));
    CHECK(p.lambdas[1] == doctest::Approx(-1.0));
    CHECK(reassembly_gap(p) < 1e-12);

    Sampler s(31);
    for (int n = 1; n <= 4; ++n) {
      const HermitianPoint b = standard_kahler(n);
      for (int i = 0; i < 30; ++i) {
        const HermitianPoint q = with_curvature(b, s.type11_form(b.J, 2.0));
        CHECK(reassembly_gap(q) < 1e-9);
        CHECK(std::is_sorted(q.lambdas.rbegin(), q.lambdas.rend()));
        const Eigen::MatrixXd basis = q.adapted_basis;
        CHECK((basis.transpose() * basis - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::MatrixXd fs = sharp2(q.F, q.g).matrix;
        for (int j = 0; j < n; ++j) {
          CHECK((basis.col(2 * j + 1) - q.J * basis.col(2 * j)).norm() < 1e-12);
          CHECK((fs * basis.col(2 * j) - q.lambdas[j] * basis.col(2 * j + 1)).norm() < 1e-9);
        }
        // Unitary change of frame leaves the eigenvalues alone.
        const Eigen::MatrixXd u = s.unitary(n);
        const HermitianPoint moved = with_curvature(b, pullback(LinearMap{u}, q.F));
        for (int j = 0; j < n; ++j) CHECK(moved.lambdas[j] == doctest::Approx(q.lambdas[j]).epsilon(1e-9));
      }
    }
    CHECK_THROWS_WITH_AS(with_curvature(base, basis_form(4, "13")), "F has nonzero (0,2) part", DomainError);
  }

  TEST_CASE("normal form on a non-Euclidean Hermitian metric") {
    Sampler s(32);
    for (int i = 0; i < 20; ++i) {
      const int n = 2 + i % 2;
      const Metric g = hermitian_metric(s, n);
      const Eigen::MatrixXd J = standard_kahler(n).J;
      const HermitianPoint p = hermitian_point(g, J, s.type11_form(J));
      CHECK(reassembly_gap(p) < 1e-9);
      const Eigen::MatrixXd b = p.adapted_basis;
      CHECK((b.transpose() * g.gram() * b - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(vol_identity_check(p) < 1e-9);
      CHECK(im_identity_check(p) < 1e-9);
      CHECK(radius_angle(p).expansion_deviation < 1e-9);
    }
  }

  TEST_CASE("eta metrics") {
    const HermitianPoint flat = standard_kahler(2);
    const EtaMetrics e0 = eta_metrics(flat);
    CHECK((e0.eta.gram() - flat.g.gram()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((e0.omega_eta - flat.omega).max_abs() == 0.0);

    Sampler s(33);
    const HermitianPoint p = point_with_lambdas({1.0, 1.0}, s.unitary(2));
    const EtaMetrics e = eta_metrics(p);
    const Eigen::MatrixXd in_basis = p.adapted_basis.transpose() * e.eta.gram() * p.adapted_basis;
    CHECK((in_basis - 2.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((e.omega_eta - omega_eta_from_normal_form(p)).max_abs() < 1e-12);
    REQUIRE(e.tilde_eta.has_value());
    CHECK((e.tilde_eta->gram() - 0.5 * e.eta.gram()).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_FALSE(eta_metrics(standard_kahler(1)).tilde_eta.has_value());
    CHECK_THROWS_AS(tilde_eta(standard_kahler(1)), ContractViolation);

    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 50; ++i) CHECK(vol_identity_check(s.hermitian_point(n)) < 1e-9);
  }

  TEST_CASE("radius and angle") {
    const RadiusAngle z = radius_angle(standard_kahler(3));
    CHECK(z.r == 1.0);
    CHECK(z.theta == 0.0);

    const RadiusAngle a = radius_angle(point_with_lambdas({1.0, 1.0}, Eigen::MatrixXd::Identity(4, 4)));
    CHECK(std::abs(a.r - 2.0) < 1e-12);
    CHECK(std::abs(a.theta - kPi / 2) < 1e-12);
    CHECK(a.expansion_deviation < 1e-12);

    const RadiusAngle b = radius_angle(point_with_lambdas({1.0, 1.0, 1.0}, Eigen::MatrixXd::Identity(6, 6)));
    CHECK(b.r == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(b.theta == doctest::Approx(3.0 * kPi / 4));
    CHECK(b.expansion_deviation < 1e-12);

    // The angle is accumulated without reduction.
    const RadiusAngle big = radius_angle(point_with_lambdas({50.0, 50.0, 50.0}, Eigen::MatrixXd::Identity(6, 6)));
    CHECK(big.theta > kPi);

    Sampler s(34);
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i < 50; ++i) {
        const RadiusAngle r = radius_angle(s.hermitian_point(n));
        CHECK(r.r >= 1.0);
        CHECK(r.expansion_deviation < 1e-9);
      }
  }

  TEST_CASE("dHYM residual") {
    const DhymReport z = dhym_residual(standard_kahler(2), 0.0);
    CHECK(z.p02_norm == 0.0);
    CHECK(z.im_residual == 0.0);

    const HermitianPoint p = point_with_lambdas({1.0, 1.0}, Eigen::MatrixXd::Identity(4, 4));
    CHECK(dhym_residual(p, kPi / 2).im_residual < 1e-12);
    CHECK(dhym_residual(p, 0.0).im_residual == doctest::Approx(2.0).epsilon(1e-12));

    const DhymReport bad = dhym_residual(standard_kahler(2), basis_form(4, "13"), 0.0);
    CHECK_FALSE(bad.type_11);
    CHECK(bad.p02_norm > 0.1);
    CHECK(std::isnan(bad.vol_identity_residual));
  }

  TEST_CASE("imaginary-part identity") {
    for (int n = 1; n <= 3; ++n) CHECK(im_identity_check(standard_kahler(n)) == 0.0);
    Sampler s(35);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 100; ++i) CHECK(im_identity_check(s.hermitian_point(n)) < 1e-9);
    // n = 1: the identity is cos(theta) = 1/r.
    const HermitianPoint p = point_with_lambdas({2.0}, Eigen::MatrixXd::Identity(2, 2));
    const RadiusAngle ra = radius_angle(p);
    CHECK(std::cos(ra.theta) == doctest::Approx(1.0 / ra.r));
  }

  TEST_CASE("type projections") {
    const HermitianPoint p = standard_kahler(2);
    const CForm omega = p.omega.cast<Complex>();
    CHECK((pq_project(omega, 1, 1, p.J) - omega).max_abs() < 1e-14);
    CHECK(pq_project(omega, 2, 0, p.J).max_abs() < 1e-14);

    // Re((u^1 - i v^1)(u^2 - i v^2)) = u^1 u^2 - v^1 v^2 splits evenly into (2,0) and (0,2).
    const Form a = basis_form(4, "13") - basis_form(4, "24");
    const CForm ac = a.cast<Complex>();
    const double n20 = norm(pq_project(ac, 2, 0, p.J), p.g);
    const double n02 = norm(pq_project(ac, 0, 2, p.J), p.g);
    CHECK(n20 == doctest::Approx(n02));
    CHECK(n20 > 0.1);
    CHECK(pq_project(ac, 1, 1, p.J).max_abs() < 1e-14);

    // (1,0) forms are u^j + i v^j.
    const CForm one0 = basis_form(4, "1").cast<Complex>() + Complex(0, 1) * basis_form(4, "2").cast<Complex>();
    CHECK((pq_project(one0, 1, 0, p.J) - one0).max_abs() < 1e-14);

    Sampler s(36);
    for (int n = 1; n <= 4; ++n) {
      const HermitianPoint q = standard_kahler(n);
      for (int i = 0; i < 20; ++i) {
        const int k = s.uniform_int(0, 2 * n);
        CForm c = s.form(2 * n, k).cast<Complex>() + Complex(0, 1) * s.form(2 * n, k).cast<Complex>();
        CForm total(2 * n, k);
        for (int pp = 0; pp <= k; ++pp) total += pq_project(c, pp, k - pp, q.J);
        CHECK((total - c).max_abs() < 1e-10);
        CHECK(p02_norm(s.type11_form(q.J), q.J, q.g) < 1e-12);
        const Form r = s.form(2 * n, 2);
        CHECK((p02_norm(r, q.J, q.g) < 1e-12) == (type11_defect(r, q.J) < 1e-12));
      }
    }
    CHECK_THROWS_AS(pq_project(omega, 2, 1, p.J), ContractViolation);
  }

  TEST_CASE("J conjugation and the wedge-star lemma") {
    const HermitianPoint p2 = standard_kahler(2);
    const Form u1 = basis_form(4, "1");
    CHECK((dc_pointwise(u1, p2.J) + basis_form(4, "2")).max_abs() == 0.0);
    CHECK((wedge(p2.omega, u1) - basis_form(4, "134")).max_abs() == 0.0);
    CHECK((hodge(dc_pointwise(u1, p2.J), p2.g) - basis_form(4, "134")).max_abs() == 0.0);
    CHECK(lemma_a1_residual(p2, Form(4, 1)) == 0.0);
    // Symbol of dd_c on u^1 is u^1 ^ v^1.
    CHECK((dc_symbol(u1, p2.J) - basis_form(4, "12")).max_abs() == 0.0);

    Sampler s(37);
    for (int n = 1; n <= 4; ++n) {
      const HermitianPoint p = standard_kahler(n);
      for (int i = 0; i < 30; ++i) CHECK(lemma_a1_residual(p, s.form(2 * n, 1)) < 1e-9);
    }
  }

  TEST_CASE("symbol bound") {
    const SymbolBound flat = symbol_bound(standard_kahler(1), basis_form(2, "1"));
    CHECK(flat.sigma == doctest::Approx(1.0));
    CHECK(flat.bound == doctest::Approx(1.0));
    CHECK(flat.wedge_route == doctest::Approx(1.0));

    const HermitianPoint p = point_with_lambdas({1.0, 0.0}, Eigen::MatrixXd::Identity(4, 4));
    const SymbolBound half = symbol_bound(p, basis_form(4, "1"));
    CHECK(half.sigma == doctest::Approx(0.5));
    CHECK(half.bound == doctest::Approx(0.5));
    CHECK(half.wedge_route == doctest::Approx(0.5));

    Sampler s(38);
    for (int i = 0; i < 30; ++i) {
      const HermitianPoint q = s.hermitian_point(1 + i % 4);
      for (int j = 0; j < 30; ++j) {
        const SymbolBound b = symbol_bound(q, s.form(2 * q.n, 1));
        CHECK(b.sigma >= b.bound - 1e-12);
        CHECK(b.wedge_route == doctest::Approx(b.sigma).epsilon(1e-9));
      }
    }
    CHECK_THROWS_AS(symbol_bound(p, Form(4, 1)), ContractViolation);
  }
}
