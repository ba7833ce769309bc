#ifndef HOMLEIB_SCALAR_HPP
#define HOMLEIB_SCALAR_HPP

#include "homleib/field.hpp"
#include "homleib/polynomial.hpp"

#include <string>
#include <variant>

namespace homleib {

/// a + b*sqrt(d); the d lives in the FieldSpec.
struct QuadElem {
  Rational a, b;
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

/// Unreduced fraction of expanded polynomials; den is never the zero
/// polynomial. No gcd is taken: equality and the zero test go through
/// cross-multiplication, which is sound because the representation of an
/// expanded polynomial is unique.
struct RatFunc {
  Polynomial num, den;
  bool operator==(const RatFunc& o) const = delete;  // semantic equality only
};

/// Exact element of the configured coefficient field. Immutable value type.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar from_int(const FieldPtr& f, long long v);
  static Scalar from_rational(const FieldPtr& f, const Rational& r);
  /// sqrt(d) in a quadratic field.
  static Scalar sqrt_gen(const FieldPtr& f);
  /// The i-th parameter in a rational-function field.
  static Scalar parameter(const FieldPtr& f, std::size_t index);

  const FieldPtr& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;  // semantic (cross-multiplied)
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical string in the coefficient grammar. Parsing it back yields an
  /// equal Scalar; for rationals and quadratic elements the representation is
  /// unique, for rational functions it is unique whenever the denominator is
  /// the constant 1 (which all additive/multiplicative arithmetic preserves).
  std::string to_string() const;

  /// Returns a representation-normalized copy: constant denominators are
  /// folded into the numerator. Idempotent.
  Scalar canonical() const;

 private:
  FieldPtr field_;
  std::variant<Rational, QuadElem, RatFunc> data_;

  void check_same_field(const Scalar& o) const;
};

/// Parses a coefficient literal. Grammar (whitespace ignored):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/')? factor)*     // juxtaposition multiplies
///   factor := atom ('^' uint)?
///   atom   := uint | uint'/'uint | ident | 's' | '(' expr ')'
/// 's' denotes sqrt(d) and is only valid over a quadratic field; identifiers
/// must be declared parameters of a rational-function field.
Scalar scalar_parse(const std::string& text, const FieldPtr& field);

}  // namespace homleib

#endif
