#pragma once

#include "qgauss/gauss.hpp"

#include <string>
#include <vector>

namespace qgauss {

struct SuiteCheck {
  std::string suite;
  CheckResult result;
};

struct SuiteOptions {
  bool long_run = false;
  std::uint64_t budget = kDefaultStepBudget;
};

/// frt, ybe, central, gauss, bcd, all.
const std::vector<std::string>& suite_names();

/// Accepts the preset names and the spellings "gl(2)", "GL(1|1)", "sp(2)", "so(3)".
std::string canonical_group_name(const std::string& name);

/// Runs one suite (or all applicable ones) on a preset group. Throws
/// std::invalid_argument for an unknown suite or one that does not apply to
/// the group (bcd on a GL group).
std::vector<SuiteCheck> run_suite(const std::string& group, const std::string& suite, const SuiteOptions& opt = {});

} // namespace qgauss
