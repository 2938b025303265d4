#include "extcalc/serialize.hpp"

#include <cmath>
#include <numbers>

namespace extcalc {

double reduce_angle(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t <= -std::numbers::pi) t += two_pi;
  if (t > std::numbers::pi) t -= two_pi;
  return t;
}

Json to_json(const Form& f) {
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < f.coeffs().size(); ++i) coeffs.push_back(f.coeffs()[i]);
  return Json{{"dim", f.dim()}, {"grade", f.grade()}, {"coeffs", std::move(coeffs)}};
}

Form form_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("grade") && j.contains("coeffs"),
          "form record needs dim, grade and coeffs");
  const int dim = j.at("dim").get<int>();
  const int grade = j.at("grade").get<int>();
  require(dim >= 0 && dim <= kMaxDim && grade >= 0 && grade <= dim, "form record has invalid dim or grade");
  const auto& c = j.at("coeffs");
  require(c.is_array() && static_cast<int>(c.size()) == binomial(dim, grade), "form record has wrong coefficient count");
  Form f(dim, grade);
  for (int i = 0; i < binomial(dim, grade); ++i) f.coeffs()[i] = c[i].get<double>();
  return f;
}

Json to_json(const DdtReport& r) {
  return Json{{"residual_norm", r.residual_norm},
              {"scalar_factor", r.scalar_factor},
              {"thmC1_max_deviation", r.lhs_minus_rhs_norm},
              {"bound_lhs", r.bound_lhs},
              {"bound_rhs", r.bound_rhs}};
}

Json to_json(const DhymReport& r) {
  return Json{{"r", r.r}, {"theta", reduce_angle(r.theta)}, {"p02_norm", r.p02_norm}, {"im_residual", r.im_residual}};
}

Json to_json(const CohomologySummary& s) {
  return Json{{"cutoff", s.cutoff}, {"dim_check_H1", s.dim_check_H1}, {"dim_H2", s.dim_H2}, {"b1", s.b1}};
}

}  // namespace extcalc
