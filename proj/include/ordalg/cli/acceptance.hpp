#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ordalg::cli {

enum class Selector { All, Fast };

/// Throws std::invalid_argument for anything but "all" and "fast".
Selector selector_from_string(const std::string& s);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;       // the checks held and the time budget was met
  bool checks_ok = false;  // the checks alone
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

struct CriterionInfo {
  int id;
  const char* name;
  double budget_seconds;
};

/// Budgets of at most 10 s make a criterion part of the fast selection.
const std::vector<CriterionInfo>& criteria();

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(Selector selector);

/// "PASS  3  name  (0.41 s, budget 30 s)  detail"
std::string format_line(const CriterionResult& r);
nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace ordalg::cli
