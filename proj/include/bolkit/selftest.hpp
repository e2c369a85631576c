#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bolkit {

enum class CriterionStatus { pass, fail, skip, inconclusive };

const char* status_name(CriterionStatus s);

struct CriterionResult {
  std::string id;
  std::string title;
  CriterionStatus status = CriterionStatus::fail;
  std::string detail;
};

struct SelftestOptions {
  // Path to a loop file with the 2038 proper right Bol loops of order 16 in
  // library order. Empty: the census checks are skipped.
  std::string order16_catalog_path;
  long long search_node_budget = 100'000'000;
  size_t max_cosets = 1'000'000;
  bool run_stretch = false;  // also search orders 12 and 15 for completeness
  int jobs = 1;
};

// Runs the whole acceptance suite, one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt = {});

// True when nothing failed; skipped and inconclusive entries are acceptable.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace bolkit
