#include "homleib/report.hpp"

#include "homleib/field.hpp"

#include <json.hpp>

#include <sstream>

namespace homleib {

using json = nlohmann::ordered_json;

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

bool CheckReport::operator==(const CheckReport& o) const {
  return identity == o.identity && status == o.status && assignment == o.assignment &&
         residual == o.residual && residual_sort == o.residual_sort &&
         assignments_evaluated == o.assignments_evaluated && error == o.error;
}

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return !checks.empty() || true;
}

const CheckReport* SuiteReport::find(const std::string& identity) const {
  for (const auto& c : checks)
    if (c.identity == identity) return &c;
  return nullptr;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    switch (c.status) {
      case CheckStatus::Pass:
        os << "PASS " << c.identity << " (" << c.assignments_evaluated << " assignments)\n";
        break;
      case CheckStatus::Fail: {
        os << "FAIL " << c.identity << " at (";
        for (std::size_t i = 0; i < c.assignment.size(); ++i) {
          if (i) os << ",";
          os << "e" << c.assignment[i];
        }
        os << "): residual";
        if (!c.residual_sort.empty()) os << " [" << c.residual_sort << "]";
        os << " = [";
        for (std::size_t i = 0; i < c.residual.size(); ++i) {
          if (i) os << ", ";
          os << c.residual[i];
        }
        os << "] (" << c.assignments_evaluated << " assignments)\n";
        break;
      }
      case CheckStatus::Error:
        os << "ERROR " << c.identity << ": " << c.error << "\n";
        break;
    }
  }
  return os.str();
}

std::string render_machine(const SuiteReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks) {
    json j;
    j["identity"] = c.identity;
    j["status"] = status_name(c.status);
    j["assignment"] = c.assignment;
    j["residual"] = c.residual;
    j["residual_sort"] = c.residual_sort;
    j["assignments"] = c.assignments_evaluated;
    j["error"] = c.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

SuiteReport parse_machine(const std::string& text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), static_cast<long>(e.byte));
  }
  if (!arr.is_array()) throw ParseError("report must be a JSON array");
  SuiteReport r;
  for (const auto& j : arr) {
    CheckReport c;
    c.identity = j.at("identity").get<std::string>();
    const std::string st = j.at("status").get<std::string>();
    if (st == "pass")
      c.status = CheckStatus::Pass;
    else if (st == "fail")
      c.status = CheckStatus::Fail;
    else if (st == "error")
      c.status = CheckStatus::Error;
    else
      throw ParseError("unknown status '" + st + "'");
    c.assignment = j.at("assignment").get<std::vector<std::size_t>>();
    c.residual = j.at("residual").get<std::vector<std::string>>();
    c.residual_sort = j.at("residual_sort").get<std::string>();
    c.assignments_evaluated = j.at("assignments").get<std::uint64_t>();
    c.error = j.at("error").get<std::string>();
    r.append(std::move(c));
  }
  return r;
}

}  // namespace homleib
