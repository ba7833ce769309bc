#ifndef HOMLEIB_REPORT_HPP
#define HOMLEIB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace homleib {

enum class CheckStatus { Pass, Fail, Error };

std::string status_name(CheckStatus s);

/// Outcome of checking one identity over all basis assignments.
struct CheckReport {
  std::string identity;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::size_t> assignment;  // 1-based, lexicographically first failure
  std::vector<std::string> residual;    // canonical coefficient strings
  std::string residual_sort;            // "vector", "tensor" or "scalar"
  std::uint64_t assignments_evaluated = 0;
  std::string error;

  bool passed() const { return status == CheckStatus::Pass; }
  bool operator==(const CheckReport& o) const;
};

struct SuiteReport {
  std::vector<CheckReport> checks;

  bool all_passed() const;
  const CheckReport* find(const std::string& identity) const;
  void append(CheckReport r) { checks.push_back(std::move(r)); }
  void append(const SuiteReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  bool operator==(const SuiteReport& o) const { return checks == o.checks; }
};

/// Stable line-oriented rendering: "PASS hom_leibniz (8 assignments)".
std::string render_text(const SuiteReport& r);
/// Structured JSON rendering; parse_machine inverts it exactly.
std::string render_machine(const SuiteReport& r);
SuiteReport parse_machine(const std::string& text);

}  // namespace homleib

#endif
