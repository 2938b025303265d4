// Acceptance battery: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "extcalc/campaign.hpp"
#include "extcalc/product_correspondence.hpp"
#include "extcalc/sampling.hpp"

using namespace extcalc;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Form> solutions(Sampler& s, int triples) {
  const G2Data& g = standard_g2();
  std::vector<Form> out;
  for (int i = 0; i < triples; ++i) {
    const auto l = s.zero_sum_lambdas();
    const LinearMap rot = i % 2 ? s.g2_rotation(g) : LinearMap::identity(7);
    for (double x : cartan_solve(l[0], l[1], l[2])) out.push_back(pullback(rot, cartan_form(x, l[0], l[1], l[2])));
  }
  return out;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Sampler s(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 6 + i % 3;
    const int k = s.uniform_int(0, n);
    const Metric m(s.metric(n).gram(), i % 4 == 3 ? -1 : 1);
    for (double r : hodge_identity_residuals(s.form(n, k), s.form(n, k), s.vector(n), m)) worst = std::max(worst, r);
  }
  const double secs = seconds_since(t0);
  report(1, worst < 1e-9 && secs < 10.0,
         "Hodge identities, dims 6-8, 1000 samples: worst " + sci(worst) + ", " + sci(secs) + " s");
}

void criterion2() {
  const G2Data& g = standard_g2();
  Sampler s(1002);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, identity_battery(s.vector(7), s.lambda14(g), g).max_residual());
  const double tr[5] = {g.proj2_7.trace(), g.proj2_14.trace(), g.proj3_1.trace(), g.proj3_7.trace(),
                        g.proj3_27.trace()};
  const long want[5] = {7, 14, 1, 7, 27};
  bool traces = true;
  for (int i = 0; i < 5; ++i) traces = traces && std::lround(tr[i]) == want[i] && std::abs(tr[i] - want[i]) < 1e-12;
  report(2, worst < 1e-9 && traces,
         "G2 identity battery, 1000 (u, beta): worst " + sci(worst) + "; traces 7/14/1/7/27 " + (traces ? "ok" : "bad"));
}

void criterion3() {
  const G2Data& g = standard_g2();
  Sampler s(1003);
  const std::vector<Form> sols = solutions(s, 200);
  double worst = 0.0, worst_conf = 0.0, min_sf = INFINITY;
  bool signs = true;
  for (const Form& f : sols) {
    const DdtReport r = verify_theorem_c1(f, g);
    worst = std::max(worst, r.lhs_minus_rhs_norm);
    worst_conf = std::max(worst_conf, r.conformal_deviation);
    min_sf = std::min(min_sf, std::abs(r.scalar_factor));
    signs = signs && r.sign_c == (r.scalar_factor > 0 ? 1 : -1);
  }
  report(3, sols.size() >= 200 && worst < 1e-8 && worst_conf < 1e-8 && min_sf > 1e-6 && signs,
         std::to_string(sols.size()) + " solutions: pairwise " + sci(worst) + ", conformal " + sci(worst_conf) +
             ", min |1 - <F^2,*phi>/2| " + sci(min_sf));
}

void criterion4() {
  const G2Data& g = standard_g2();
  Sampler s(1004);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Form f = s.form(7, 2, s.uniform(0.1, 3.0));
    const Form a = ddt_residual(f, g), b = ddt_residual_decomposed(f, g);
    worst = std::max(worst, kDefaultTolerance.relative(norm(Form(a - b), g.metric),
                                                       std::max(norm(a, g.metric), norm(b, g.metric))));
  }
  report(4, worst < 1e-9, "decomposed vs direct residual, 1000 random F: worst " + sci(worst));
}

void criterion5() {
  const G2Data& g = standard_g2();
  const double r3 = std::sqrt(3.0);
  const auto roots = cartan_solve(0, 0, 0);
  double dev = roots.size() == 3 ? 0.0 : INFINITY;
  const double want[3] = {-r3, 0.0, r3};
  const double want7[3] = {3.0, 0.0, 3.0};
  for (std::size_t i = 0; i < roots.size() && i < 3; ++i) {
    dev = std::max(dev, std::abs(roots[i] - want[i]));
    dev = std::max(dev, std::abs(norm(project2(cartan_form(roots[i], 0, 0, 0), g).f7, g.metric) - want7[i]));
  }
  Sampler s(1005);
  bool viete = true;
  for (const Form& f : solutions(s, 500)) viete = viete && norm_bound_check(f, g).ok;
  double worst_ratio = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const CubeBound c = f14_cube_bound(s.lambda14(g, s.uniform(0.1, 3.0)), g);
    if (c.lhs > c.rhs + 1e-9) worst_ratio = INFINITY;
    worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
  }
  report(5, dev < 1e-10 && viete && worst_ratio <= 1.0 + 1e-12,
         "F14 = 0 roots dev " + sci(dev) + "; bound on all solutions " + (viete ? "ok" : "violated") +
             "; max |b^3| / ((sqrt6/3)|b|^3) = " + sci(worst_ratio));
}

void criterion6() {
  const G2Data& g = standard_g2();
  Sampler s(1006);
  int checked = 0;
  bool ranks = true;
  for (const Form& f : solutions(s, 300)) {
    const WedgeRank w = wedge_injectivity(f, g);
    if (w.f3_norm <= 1e-9) continue;
    ++checked;
    ranks = ranks && w.rank == 21;
  }
  const Form beta = basis_form(7, "23") - basis_form(7, "45");
  const Form gamma = basis_form(7, "24") + basis_form(7, "35");
  const bool exact = wedge(beta, gamma).max_abs() == 0.0;
  report(6, ranks && exact && checked > 0,
         "wedge rank 21 on " + std::to_string(checked) + " solutions; counterexample wedge exactly zero: " +
             (exact ? "yes" : "no"));
}

void criterion7() {
  Sampler s(1007);
  double worst = 0.0, min_r = INFINITY;
  for (int n = 1; n <= 3; ++n) {
    const HermitianPoint base = standard_kahler(n);
    for (int i = 0; i < 1000; ++i) {
      const HermitianPoint pt = i % 2 ? with_curvature(base, s.type11_form(base.J, s.uniform(0.1, 3.0)))
                                      : s.hermitian_point(n);
      worst = std::max({worst, vol_identity_check(pt), im_identity_check(pt), radius_angle(pt).expansion_deviation});
      min_r = std::min(min_r, radius_angle(pt).r);
    }
  }
  const RadiusAngle ref = radius_angle(point_with_lambdas({1.0, 1.0}, Eigen::MatrixXd::Identity(4, 4)));
  const double ref_dev = std::max(std::abs(ref.r - 2.0), std::abs(ref.theta - std::numbers::pi / 2));
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const HermitianPoint pt = s.hermitian_point(1 + i % 3);
    for (int j = 0; j < 100; ++j) {
      const SymbolBound b = symbol_bound(pt, s.form(2 * pt.n, 1));
      if (b.sigma < b.bound - 1e-12) ++violations;
    }
  }
  report(7, min_r >= 1.0 && worst < 1e-9 && ref_dev < 1e-12 && violations == 0,
         "min r " + sci(min_r) + ", identity residuals " + sci(worst) + ", (2, pi/2) dev " + sci(ref_dev) +
             ", symbol violations " + std::to_string(violations) + "/10000");
}

void criterion8() {
  const SU3Point p = standard_su3();
  Sampler s(1008);
  int disagreements = 0, holds = 0;
  for (int i = 0; i < 1000; ++i) {
    Form f;
    const int kind = i % 4;
    if (kind == 0) {
      f = s.form(6, 2);
    } else if (kind == 3) {
      f = s.type11_form(p.J6, s.uniform(0.1, 3.0));
    } else {
      double l1, l2, l3;
      do {
        l1 = s.uniform(-3, 3);
        l2 = s.uniform(-3, 3);
        l3 = std::tan(-std::atan(l1) - std::atan(l2));
      } while (std::abs(l3) > 10);
      f = point_with_lambdas({l1, l2, l3}, s.unitary(3)).F;
      if (kind == 2) {
        const Form r = s.form(6, 2, 0.1);
        f += 0.5 * (r - pullback(LinearMap{p.J6}, r));
      }
    }
    const CorrespondenceCheck c = correspondence_check(p, f, 1e-8);
    disagreements += !c.agree();
    holds += c.ddt_holds;
  }
  report(8, disagreements == 0,
         "1000 samples (" + std::to_string(holds) + " solutions): disagreements " + std::to_string(disagreements));
}

void criterion9() {
  const TorusComplex tc(standard_g2());
  bool dims = true;
  std::string list;
  for (int k = 1; k <= 3; ++k) {
    const CohomologySummary c = tc.harmonic_dim(k);
    dims = dims && c.dim_check_H1 == 7 && c.dim_H2 == 0 && c.dim_H2 == c.dim_check_H1 - c.b1;
    list += " K=" + std::to_string(k) + ":" + std::to_string(c.dim_check_H1) + "/" + std::to_string(c.dim_H2);
  }
  Sampler s(1009);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    ModeVector k;
    for (int& x : k) x = s.uniform_int(-5, 5);
    worst = std::max(worst, tc.adjoint_check(k));
  }
  report(9, dims && worst < 1e-10, "dim_check_H1/dim_H2" + list + "; adjoint " + sci(worst));
}

void criterion10() {
  Campaign c;
  c.seed = 42;
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = run(c);
  const std::string a = emit(first, Format::json);
  const double secs = seconds_since(t0);
  const std::string b = emit(run(c), Format::json);
  report(10, a == b && secs < 120.0 && all_passed(first),
         std::string("seed 42 full battery twice: ") + (a == b ? "identical" : "different") + " JSON (" +
             std::to_string(a.size()) + " bytes), " + sci(secs) + " s per run, all suites " +
             (all_passed(first) ? "pass" : "FAIL"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
