#ifndef HOMLEIB_POLYNOMIAL_HPP
#define HOMLEIB_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace homleib {

using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector; its length equals the number of declared parameters.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic: higher total degree first, ties broken by the
/// exponent of the earliest parameter. Leading term sorts first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q, always stored expanded with like monomials
/// combined and zero coefficients dropped.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nparams) : nparams_(nparams) {}
  static Polynomial constant(std::size_t nparams, const Rational& c);
  static Polynomial variable(std::size_t nparams, std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  std::size_t nparams() const { return nparams_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(std::uint32_t n) const;

  bool operator==(const Polynomial& o) const { return nparams_ == o.nparams_ && terms_ == o.terms_; }

  void add_term(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational, GradedLexGreater>& terms() const { return terms_; }

  /// Canonical text in the coefficient grammar (graded-lex term order).
  std::string to_string(const std::vector<std::string>& params) const;

 private:
  std::size_t nparams_ = 0;
  std::map<Monomial, Rational, GradedLexGreater> terms_;
};

std::string rational_to_string(const Rational& r);

}  // namespace homleib

#endif
