#ifndef ATLAS_VERIFY_HPP
#define ATLAS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace atlas {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int samples = 0;     // 0 = suite default
  int grid_bound = 2;  // coordinate box for evaluation cross-checks
  bool full = false;   // acceptance scale when set
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> lines;     // per-property outcomes
  std::vector<std::string> findings;  // reported observations, not failures
};

std::vector<std::string> suite_names();
bool have_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace atlas

#endif
