#include "extcalc/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>

#include "extcalc/product_correspondence.hpp"
#include "extcalc/sampling.hpp"

namespace extcalc {
namespace {

class Tally {
 public:
  explicit Tally(std::string suite) { report_.suite = std::move(suite); }

  void record(bool ok, double residual, const Form& witness) {
    if (std::isfinite(residual)) report_.worst_residual = std::max(report_.worst_residual, residual);
    if (ok) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (static_cast<int>(report_.witnesses.size()) < Report::kMaxWitnesses) report_.witnesses.push_back(witness);
  }

  Report finish(Json details) {
    report_.details = std::move(details);
    return std::move(report_);
  }

 private:
  Report report_;
};

// Cartan-family solutions; every other one is moved off the diagonal by a
// random element of G2.
std::vector<Form> cartan_solutions(Sampler& s, const G2Data& g, int triples) {
  std::vector<Form> out;
  for (int i = 0; i < triples; ++i) {
    const auto l = s.zero_sum_lambdas();
    const std::vector<double> roots = cartan_solve(l[0], l[1], l[2]);
    const bool rotate = i % 2 == 1;
    const LinearMap rot = rotate ? s.g2_rotation(g) : LinearMap::identity(7);
    for (double x : roots) {
      const Form f = cartan_form(x, l[0], l[1], l[2]);
      out.push_back(rotate ? pullback(rot, f) : f);
    }
  }
  return out;
}

double rel_gap(const Form& a, const Form& b, const Metric& m, double floor = 1e-12) {
  const Tolerance tol{1e-9, floor};
  return tol.relative(norm(Form(a - b), m), std::max(norm(a, m), norm(b, m)));
}

Report suite_appendix_a(Sampler& s, const Campaign& c) {
  Tally t("appendixA");
  const Tolerance tol{c.tol_rel, 1e-12};
  for (int i = 0; i < c.samples; ++i) {
    const int dim = 6 + i % 3;
    const int k = s.uniform_int(0, dim);
    const int orientation = s.uniform_int(0, 1) ? 1 : -1;
    const Metric m = i % 2 ? Metric(s.metric(dim).gram(), orientation) : Metric::euclidean(dim, orientation);
    const Form a = s.form(dim, k);
    const Form b = s.form(dim, k);
    const Vector v = s.vector(dim);
    const auto r = hodge_identity_residuals(a, b, v, m, tol);
    const double worst = *std::max_element(r.begin(), r.end());
    t.record(worst < c.tol_rel, worst, a);
  }
  return t.finish(Json{{"dims", {6, 7, 8}}, {"identities", 4}});
}

Report suite_appendix_b(Sampler& s, const Campaign& c) {
  Tally t("appendixB");
  const G2Data& g = standard_g2();
  const Tolerance tol{c.tol_rel, 1e-12};

  const std::array<double, 5> traces = {g.proj2_7.trace(), g.proj2_14.trace(), g.proj3_1.trace(), g.proj3_7.trace(),
                                        g.proj3_27.trace()};
  const std::array<double, 5> expected = {7, 14, 1, 7, 27};
  double trace_dev = 0.0;
  for (int i = 0; i < 5; ++i) trace_dev = std::max(trace_dev, std::abs(traces[i] - expected[i]));
  t.record(trace_dev < 1e-9, trace_dev, g.phi);

  for (int i = 0; i < c.samples; ++i) {
    const Vector u = s.vector(7);
    const Form beta = s.lambda14(g);
    const double worst = identity_battery(u, beta, g, tol).max_residual();
    t.record(worst < c.tol_rel, worst, beta);
  }

  // Wedge injectivity: the counterexample without the cube condition, then
  // generated solutions.
  const Form f0 = basis_form(7, "23") - basis_form(7, "45");
  const Form gamma0 = basis_form(7, "24") + basis_form(7, "35");
  const bool counter_zero = wedge(f0, gamma0).max_abs() == 0.0;
  const int counter_rank = wedge_injectivity(f0, g).rank;
  t.record(counter_zero && counter_rank <= 20, 0.0, f0);

  int checked = 0;
  int min_rank = 21;
  for (const Form& f : cartan_solutions(s, g, std::max(1, c.samples / 4))) {
    const WedgeRank w = wedge_injectivity(f, g);
    if (w.f3_norm <= 1e-9) continue;
    ++checked;
    min_rank = std::min(min_rank, w.rank);
    t.record(w.rank == 21, 0.0, f);
  }
  return t.finish(Json{{"projection_traces", traces},
                       {"counterexample_wedge_zero", counter_zero},
                       {"counterexample_rank", counter_rank},
                       {"injectivity_solutions", checked},
                       {"injectivity_min_rank", min_rank}});
}

Report suite_thm_c1(Sampler& s, const Campaign& c) {
  Tally t("thmC1");
  const G2Data& g = standard_g2();
  const Tolerance tol{c.tol_rel, 1e-12};
  const std::vector<Form> sols = cartan_solutions(s, g, std::max(200, c.samples / 4));
  double worst_c1 = 0.0;
  double min_sf = INFINITY;
  DdtReport sample;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const Form& f = sols[i];
    const double res = ddt_relative_residual(f, g, tol);
    if (res > c.tol_rel) {
      t.record(false, res, f);
      continue;
    }
    const DdtReport r = verify_theorem_c1(f, g, tol);
    if (i == 0) sample = r;
    const double orth = orthogonality_check(f, g, tol);
    const double reform = reformulation_residual(f, g, tol);
    const double lin = linearization_density(f, s.form(7, 2), g, tol).deviation;
    worst_c1 = std::max(worst_c1, r.lhs_minus_rhs_norm);
    min_sf = std::min(min_sf, std::abs(r.scalar_factor));
    const bool ok = r.lhs_minus_rhs_norm < c.tol_identity && r.conformal_deviation < c.tol_identity &&
                    std::abs(r.scalar_factor) > 1e-6 && r.sign_c == (r.scalar_factor > 0 ? 1 : -1) &&
                    orth < c.tol_identity && reform < c.tol_rel && lin < c.tol_identity;
    t.record(ok, std::max({res, r.lhs_minus_rhs_norm, r.conformal_deviation, reform, lin}), f);
  }
  return t.finish(Json{{"solutions", sols.size()},
                       {"max_pairwise_deviation", worst_c1},
                       {"min_abs_scalar_factor", min_sf},
                       {"first_solution", to_json(sample)}});
}

Report suite_prop_d1(Sampler& s, const Campaign& c) {
  Tally t("propD1");
  const G2Data& g = standard_g2();
  for (int i = 0; i < c.samples; ++i) {
    const Form f = s.form(7, 2, s.uniform(0.1, 3.0));
    const double dev = rel_gap(ddt_residual(f, g), ddt_residual_decomposed(f, g), g.metric);
    t.record(dev < c.tol_rel, dev, f);
  }
  return t.finish(Json::object());
}

Report suite_cor_d2(Sampler& s, const Campaign& c) {
  Tally t("corD2");
  const G2Data& g = standard_g2();
  const Tolerance tol{c.tol_rel, 1e-12};
  const double r3 = std::sqrt(3.0);

  const std::vector<double> roots = cartan_solve(0.0, 0.0, 0.0);
  const std::array<double, 3> want = {-r3, 0.0, r3};
  double root_dev = roots.size() == 3 ? 0.0 : INFINITY;
  Json f7_norms = Json::array();
  for (std::size_t i = 0; i < roots.size() && i < 3; ++i) {
    root_dev = std::max(root_dev, std::abs(roots[i] - want[i]));
    const double n7 = norm(project2(cartan_form(roots[i], 0, 0, 0), g).f7, g.metric);
    root_dev = std::max(root_dev, std::min(std::abs(n7), std::abs(n7 - 3.0)));
    f7_norms.push_back(n7);
  }
  t.record(root_dev < 1e-10, root_dev, g.phi);

  // F_14 = 0 solutions in arbitrary directions.
  for (int i = 0; i < std::max(1, c.samples / 10); ++i) {
    Vector w = s.vector(7);
    w *= r3 / w.norm();
    const Form f = interior(w, g.phi);
    const double res = ddt_relative_residual(f, g, tol);
    const double dev = std::abs(norm(project2(f, g).f7, g.metric) - 3.0);
    t.record(res < c.tol_rel && dev < 1e-10, res, f);
  }

  double worst_margin = -INFINITY;
  for (const Form& f : cartan_solutions(s, g, std::max(1, c.samples / 4))) {
    const NormBound b = norm_bound_check(f, g);
    worst_margin = std::max(worst_margin, b.lhs - b.rhs);
    t.record(b.ok, 0.0, f);
  }

  for (int i = 0; i < c.samples; ++i) {
    const Form beta = s.lambda14(g, s.uniform(0.1, 3.0));
    const CubeBound b = f14_cube_bound(beta, g);
    t.record(b.lhs <= b.rhs + 1e-9, 0.0, beta);
  }
  const CubeBound eq = f14_cube_bound(cartan_form(0.0, 1.0, 1.0, -2.0), g);
  t.record(std::abs(eq.lhs / eq.rhs - 1.0) < 1e-12, std::abs(eq.lhs / eq.rhs - 1.0), cartan_form(0.0, 1.0, 1.0, -2.0));

  return t.finish(Json{{"f14_zero_roots", roots},
                       {"f7_norms", f7_norms},
                       {"worst_bound_margin", worst_margin},
                       {"cube_equality_ratio", eq.lhs / eq.rhs}});
}

Report suite_dhym(Sampler& s, const Campaign& c) {
  Tally t("dhym");
  const Tolerance tol{c.tol_rel, 1e-12};
  double min_r = INFINITY;
  for (int n = 1; n <= 3; ++n) {
    const HermitianPoint base = standard_kahler(n);
    for (int i = 0; i < c.samples; ++i) {
      const HermitianPoint pt = i % 2 ? with_curvature(base, s.type11_form(base.J, s.uniform(0.1, 3.0)))
                                      : s.hermitian_point(n);
      const RadiusAngle ra = radius_angle(pt, tol);
      const double vol = vol_identity_check(pt, tol);
      const double im = im_identity_check(pt, tol);
      const double re = rel_gap(reassemble({pt.lambdas, pt.adapted_basis}), pt.F, pt.g);
      const double p02 = p02_norm(pt.F, pt.J, pt.g);
      min_r = std::min(min_r, ra.r);
      const bool ok = ra.r >= 1.0 && vol < c.tol_rel && im < c.tol_rel && ra.expansion_deviation < c.tol_rel &&
                      re < c.tol_rel && p02 < 1e-12;
      t.record(ok, std::max({vol, im, ra.expansion_deviation, re}), pt.F);
    }
  }

  // Reference point n = 2, lambdas (1, 1).
  const HermitianPoint ref = point_with_lambdas({1.0, 1.0}, Eigen::MatrixXd::Identity(4, 4));
  const RadiusAngle ra = radius_angle(ref, tol);
  const double ref_dev = std::max(std::abs(ra.r - 2.0), std::abs(ra.theta - std::numbers::pi / 2));
  const DhymReport at_phase = dhym_residual(ref, std::numbers::pi / 2, tol);
  const DhymReport at_zero = dhym_residual(ref, 0.0, tol);
  t.record(ref_dev < 1e-12 && at_phase.im_residual < 1e-12 && std::abs(at_zero.im_residual - 2.0) < 1e-12, ref_dev,
           ref.F);

  int pairs = 0;
  for (int i = 0; i < std::min(100, c.samples); ++i) {
    const HermitianPoint pt = s.hermitian_point(1 + i % 3);
    for (int j = 0; j < 100; ++j) {
      const Form xi = s.form(2 * pt.n, 1);
      const SymbolBound sb = symbol_bound(pt, xi);
      const double route = tol.relative(std::abs(sb.sigma - sb.wedge_route), sb.sigma);
      t.record(sb.sigma >= sb.bound - 1e-12 && route < c.tol_rel, route, xi);
      ++pairs;
    }
  }

  for (int i = 0; i < c.samples; ++i) {
    const HermitianPoint base = standard_kahler(1 + i % 3);
    const Form alpha = s.form(2 * base.n, 1);
    const double res = lemma_a1_residual(base, alpha, tol);
    t.record(res < c.tol_rel, res, alpha);
  }

  return t.finish(Json{{"n", {1, 2, 3}},
                       {"min_r", min_r},
                       {"reference", to_json(at_phase)},
                       {"symbol_pairs", pairs}});
}

Report suite_product(Sampler& s, const Campaign& c) {
  Tally t("product");
  const SU3Point p = standard_su3();
  const ProductG2 prod = product_g2(p);
  const Metric m7 = metric_from_three_form(prod.phi7);
  const double star_gap = norm(Form(hodge(prod.phi7, m7) - prod.psi7), m7);
  const double phi_psi = top_coefficient(wedge(prod.phi7, prod.psi7)) / top_coefficient(volume_form(m7));
  const CForm omega = holomorphic_volume(p);
  const Complex omega_const = top_coefficient(wedge(omega, omega.conjugate()));
  const bool relabel_exact = (pullback(product_relabeling(), prod.phi7) - standard_phi()).max_abs() == 0.0;
  const double golden = std::max({star_gap, std::abs(phi_psi - 7.0), std::abs(omega_const - Complex(0.0, -8.0))});
  t.record(golden < 1e-10 && relabel_exact, golden, prod.phi7);

  const double thr = 1e-8;
  int ddt_true = 0;
  int disagreements = 0;
  for (int i = 0; i < c.samples; ++i) {
    Form f6(6, 2);
    const int kind = i % 4;
    if (kind == 0) {
      f6 = s.form(6, 2);
    } else if (kind == 3) {
      f6 = s.type11_form(p.J6, s.uniform(0.1, 3.0));
    } else {
      double l1, l2, l3;
      do {
        l1 = s.uniform(-3.0, 3.0);
        l2 = s.uniform(-3.0, 3.0);
        l3 = std::tan(-std::atan(l1) - std::atan(l2));
      } while (std::abs(l3) > 10.0);
      f6 = point_with_lambdas({l1, l2, l3}, s.unitary(3)).F;
      if (kind == 2) {
        const Form r = s.form(6, 2, 0.1);
        f6 += 0.5 * (r - pullback(LinearMap{p.J6}, r));
      }
    }
    const CorrespondenceCheck cc = correspondence_check(p, f6, thr);
    if (cc.ddt_holds) ++ddt_true;
    if (!cc.agree()) ++disagreements;
    const bool wedge_agrees = (cc.wedge_im_omega < thr) == (cc.p02 < thr);
    t.record(cc.agree() && wedge_agrees, 0.0, f6);
  }
  return t.finish(Json{{"threshold", thr},
                       {"ddt_solutions", ddt_true},
                       {"disagreements", disagreements},
                       {"omega_wedge_conjugate", {omega_const.real(), omega_const.imag()}}});
}

Report suite_torus(Sampler& s, const Campaign& c) {
  Tally t("torus");
  const G2Data& g = standard_g2();
  const TorusComplex tc(g);
  Json summaries = Json::array();
  CohomologySummary last;
  for (int cutoff = 1; cutoff <= 3; ++cutoff) {
    last = tc.harmonic_dim(cutoff);
    summaries.push_back(to_json(last));
    t.record(last.dim_check_H1 == 7 && last.dim_H2 == 0, 0.0, g.phi);
  }
  for (int i = 0; i < std::min(100, c.samples); ++i) {
    ModeVector k;
    for (int& kj : k) kj = s.uniform_int(-5, 5);
    const double adj = tc.adjoint_check(k);
    const ModeBlock b = tc.mode_block(k);
    const double dd = std::max((b.d1prime * b.d01).norm(), (b.d1 * b.d01).norm());
    Form witness(7, 1);
    for (int j = 0; j < 7; ++j) witness.coeffs()[j] = k[j];
    t.record(adj < 1e-10 && dd < 1e-12, adj, witness);
  }
  Json details = to_json(last);
  details["cutoffs"] = std::move(summaries);
  return t.finish(std::move(details));
}

using SuiteFn = std::function<Report(Sampler&, const Campaign&)>;

const std::vector<SuiteFn>& suite_functions() {
  static const std::vector<SuiteFn> fns = {suite_appendix_a, suite_appendix_b, suite_thm_c1, suite_prop_d1,
                                           suite_cor_d2,     suite_dhym,       suite_product, suite_torus};
  return fns;
}

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"appendixA", "appendixB", "thmC1",   "propD1",
                                                 "corD2",     "dhym",      "product", "torus"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Report> run(const Campaign& campaign) {
  require(campaign.samples >= 1, "samples must be positive");
  std::vector<std::size_t> selected;
  const auto& names = suite_names();
  if (campaign.suites.empty()) {
    for (std::size_t i = 0; i < names.size(); ++i) selected.push_back(i);
  } else {
    for (const std::string& s : campaign.suites) {
      if (!is_suite(s)) {
        std::string valid;
        for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
        throw ContractViolation("unknown suite '" + s + "'; valid suites: " + valid);
      }
      const auto idx = static_cast<std::size_t>(std::find(names.begin(), names.end(), s) - names.begin());
      if (std::find(selected.begin(), selected.end(), idx) == selected.end()) selected.push_back(idx);
    }
  }

  std::vector<std::future<Report>> jobs;
  for (std::size_t idx : selected) {
    jobs.push_back(std::async(std::launch::async, [idx, &campaign] {
      Sampler s(suite_seed(campaign.seed, idx));
      return suite_functions()[idx](s, campaign);
    }));
  }
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Json to_json(const Report& r) {
  Json w = Json::array();
  for (const Form& f : r.witnesses) w.push_back(to_json(f));
  return Json{{"suite", r.suite},
              {"passed", r.passed},
              {"failed", r.failed},
              {"worst_residual", r.worst_residual},
              {"witnesses", std::move(w)},
              {"details", r.details}};
}

std::string emit(const std::vector<Report>& reports, Format format) {
  if (format == Format::json) {
    Json arr = Json::array();
    for (const Report& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const Report& r : reports) {
    os << (r.failed == 0 ? "PASS " : "FAIL ") << r.suite << "  passed=" << r.passed << " failed=" << r.failed
       << " worst_residual=" << format_double(r.worst_residual) << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.failed == 0; });
}

}  // namespace extcalc
