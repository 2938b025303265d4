#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "extcalc/serialize.hpp"

namespace extcalc {

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

struct Campaign {
  std::uint64_t seed = 42;
  int samples = 1000;
  double tol_rel = 1e-9;
  double tol_identity = 1e-8;
  std::vector<std::string> suites;  ///< empty means all
};

struct Report {
  std::string suite;
  int passed = 0;
  int failed = 0;
  double worst_residual = 0.0;
  std::vector<Form> witnesses;  ///< at most kMaxWitnesses failing inputs
  Json details = Json::object();

  static constexpr int kMaxWitnesses = 5;
};

/// Runs the requested suites. Each suite draws from its own generator seeded
/// by (seed, suite), so results do not depend on which suites run together
/// or on scheduling. Throws ContractViolation on an unknown suite name.
std::vector<Report> run(const Campaign& campaign);

Json to_json(const Report& r);

enum class Format { json, text };

std::string emit(const std::vector<Report>& reports, Format format);

bool all_passed(const std::vector<Report>& reports);

}  // namespace extcalc
