#include "homleib/field.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace homleib {

namespace {

bool is_square_free(long long d) {
  long long n = d < 0 ? -d : d;
  if (n == 0) return false;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

bool valid_param_name(const std::string& s) {
  if (s.empty()) return false;
  if (s == "s") return false;  // reserved for the quadratic generator
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::quadratic(long long d) {
  if (d == 0 || d == 1 || !is_square_free(d))
    throw ShapeError("quadratic field requires a square-free d other than 0 and 1");
  FieldSpec f;
  f.kind_ = FieldKind::Quadratic;
  f.d_ = d;
  return f;
}

FieldSpec FieldSpec::rational_functions(std::vector<std::string> params) {
  if (params.empty())
    throw ShapeError("rational-function field requires at least one parameter");
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (!valid_param_name(p))
      throw ShapeError("invalid parameter name '" + p + "'");
    if (!seen.insert(p).second)
      throw ShapeError("duplicate parameter name '" + p + "'");
  }
  FieldSpec f;
  f.kind_ = FieldKind::RationalFunctions;
  f.params_ = std::move(params);
  return f;
}

int FieldSpec::param_index(const std::string& name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return static_cast<int>(i);
  return -1;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  return kind_ == other.kind_ && d_ == other.d_ && params_ == other.params_;
}

std::string FieldSpec::describe() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Quadratic:
      return "Q(sqrt(" + std::to_string(d_) + "))";
    case FieldKind::RationalFunctions: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) s += ",";
        s += params_[i];
      }
      return s + ")";
    }
  }
  return "?";
}

FieldPtr make_field(FieldSpec spec) {
  return std::make_shared<const FieldSpec>(std::move(spec));
}

}  // namespace homleib
