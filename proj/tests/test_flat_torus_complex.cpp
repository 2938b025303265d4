#include <doctest.h>

#include "extcalc/flat_torus_complex.hpp"
#include "extcalc/sampling.hpp"

using namespace extcalc;

namespace {

ModeVector random_mode(Sampler& s, int range = 4) {
  ModeVector k;
  for (int& x : k) x = s.uniform_int(-range, range);
  return k;
}

}  // namespace

TEST_SUITE("flat_torus_complex") {
  TEST_CASE("zero mode") {
    const TorusComplex tc(standard_g2());
    const ModeBlock b = tc.mode_block({});
    CHECK(b.d01.norm() == 0.0);
    CHECK(b.d1.norm() == 0.0);
    CHECK(b.d1prime.norm() == 0.0);
    CHECK(b.dstar1.norm() == 0.0);
    CHECK(tc.harmonic_kernel_dim({}) == 7);
    CHECK(tc.adjoint_check({}) == 0.0);
  }

  TEST_CASE("block shapes and symbols") {
    const TorusComplex tc(standard_g2());
    const ModeBlock b = tc.mode_block({1, 0, 0, 0, 0, 0, 0});
    CHECK(b.d01.rows() == 7);
    CHECK(b.d1.rows() == 21);
    CHECK(b.d1prime.rows() == 7);
    CHECK(b.dstar1.cols() == 7);
    // d* alpha = -i <k, alpha> on the flat torus.
    CHECK(std::abs(b.dstar1(0, 0) - Complex(0, -1)) < 1e-15);
    CHECK(tc.harmonic_kernel_dim({1, 0, 0, 0, 0, 0, 0}) == 0);
  }

  TEST_CASE("complex property and commutation") {
    const G2Data& g = standard_g2();
    const TorusComplex tc(g);
    const Eigen::MatrixXcd t = tc.t_matrix().cast<Complex>();
    Sampler s(51);
    for (int i = 0; i < 100; ++i) {
      const ModeBlock b = tc.mode_block(random_mode(s));
      CHECK((b.d1prime * b.d01).norm() < 1e-12);
      CHECK((b.d1 * b.d01).norm() < 1e-12);
      CHECK((t * b.d1 - b.d1prime).norm() < 1e-12);
    }
    // The 14-part wedges to zero against *phi, so T loses nothing.
    const Eigen::MatrixXd full = [&] {
      Eigen::MatrixXd m(7, 21);
      for (int j = 0; j < 21; ++j) {
        Form e(7, 2);
        e.coeffs()[j] = 1.0;
        m.col(j) = wedge(e, g.star_phi).coeffs();
      }
      return m;
    }();
    CHECK((tc.t_matrix() - full).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("adjoint formula") {
    const TorusComplex tc(standard_g2());
    Sampler s(52);
    for (int i = 0; i < 100; ++i) {
      const ModeVector k = random_mode(s, 5);
      CHECK(tc.adjoint_check(k) < 1e-10);
      // Not vacuous: the block is nonzero and not self-adjoint.
      const Eigen::MatrixXcd a = tc.mode_block(k).d1prime;
      if (k != ModeVector{}) {
        CHECK(a.norm() > 0.5);
        CHECK((a.adjoint() - a).norm() > 0.5);
      }
      ModeVector minus;
      for (int j = 0; j < 7; ++j) minus[j] = -k[j];
      // Opposite modes are complex conjugate.
      CHECK((tc.mode_block(minus).d1prime - tc.mode_block(k).d1prime.conjugate()).norm() < 1e-12);
    }
  }

  TEST_CASE("harmonic dimensions") {
    const G2Data& g = standard_g2();
    for (int cutoff = 1; cutoff <= 2; ++cutoff) {
      const CohomologySummary c = harmonic_dim(cutoff, g);
      CHECK(c.cutoff == cutoff);
      CHECK(c.dim_check_H1 == 7);
      CHECK(c.dim_H2 == 0);
      CHECK(c.b1 == 7);
    }
    CHECK_THROWS_AS(harmonic_dim(0, g), ContractViolation);
  }

  TEST_CASE("the constant only rescales") {
    const G2Data& g = standard_g2();
    const TorusComplex one(g), two(g, -2.0);
    Sampler s(53);
    for (int i = 0; i < 50; ++i) {
      const ModeVector k = random_mode(s);
      CHECK(one.harmonic_kernel_dim(k) == two.harmonic_kernel_dim(k));
      CHECK((two.mode_block(k).d1prime + 2.0 * one.mode_block(k).d1prime).norm() < 1e-12);
      CHECK(two.adjoint_check(k) < 1e-10);
    }
    CHECK(two.harmonic_dim(1).dim_check_H1 == 7);
    CHECK_THROWS_AS(TorusComplex(g, 0.0), ContractViolation);
  }

  TEST_CASE("perturbed structure keeps the dimensions") {
    Sampler s(54);
    for (int i = 0; i < 3; ++i) {
      const Form f = s.form(7, 2, 0.1);
      LinearMap map = LinearMap::identity(7);
      map.matrix += sharp2(f, Metric::euclidean(7)).matrix;
      const G2Data g = make_g2(pullback(map, standard_phi()));
      const TorusComplex tc(g);
      const CohomologySummary c = tc.harmonic_dim(1);
      CHECK(c.dim_check_H1 == 7);
      CHECK(c.dim_H2 == 0);
      CHECK(tc.adjoint_check(random_mode(s)) < 1e-10);
    }
  }
}
