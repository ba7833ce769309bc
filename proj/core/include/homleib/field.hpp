#ifndef HOMLEIB_FIELD_HPP
#define HOMLEIB_FIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace homleib {

/// Raised on malformed input documents and coefficient strings.
/// `position` is a byte offset into the offending text when known, -1 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long position = -1)
      : std::runtime_error(position >= 0 ? msg + " (at offset " + std::to_string(position) + ")"
                                         : msg),
        position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind { Rationals, Quadratic, RationalFunctions };

/// Coefficient field description: Q, Q(sqrt(d)) for a square-free d, or the
/// field of rational functions Q(p1,...,pk) in named parameters.
class FieldSpec {
 public:
  static FieldSpec rationals();
  static FieldSpec quadratic(long long d);
  static FieldSpec rational_functions(std::vector<std::string> params);

  FieldKind kind() const { return kind_; }
  long long d() const { return d_; }
  const std::vector<std::string>& params() const { return params_; }

  int param_index(const std::string& name) const;  // -1 when absent

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  long long d_ = 0;
  std::vector<std::string> params_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

FieldPtr make_field(FieldSpec spec);

}  // namespace homleib

#endif
