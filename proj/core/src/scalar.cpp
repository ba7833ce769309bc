#include "homleib/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace homleib {

namespace {

const Polynomial& as_num(const RatFunc& f) { return f.num; }

RatFunc rf_make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc{std::move(num), std::move(den)};
}

}  // namespace

Scalar Scalar::zero(const FieldPtr& f) { return from_rational(f, Rational(0)); }
Scalar Scalar::one(const FieldPtr& f) { return from_rational(f, Rational(1)); }
Scalar Scalar::from_int(const FieldPtr& f, long long v) { return from_rational(f, Rational(v)); }

Scalar Scalar::from_rational(const FieldPtr& f, const Rational& r) {
  Scalar s;
  s.field_ = f;
  switch (f->kind()) {
    case FieldKind::Rationals:
      s.data_ = r;
      break;
    case FieldKind::Quadratic:
      s.data_ = QuadElem{r, Rational(0)};
      break;
    case FieldKind::RationalFunctions: {
      const auto n = f->params().size();
      s.data_ = rf_make(Polynomial::constant(n, r), Polynomial::constant(n, 1));
      break;
    }
  }
  return s;
}

Scalar Scalar::sqrt_gen(const FieldPtr& f) {
  if (f->kind() != FieldKind::Quadratic)
    throw std::domain_error("'s' is only defined over a quadratic field");
  Scalar s;
  s.field_ = f;
  s.data_ = QuadElem{Rational(0), Rational(1)};
  return s;
}

Scalar Scalar::parameter(const FieldPtr& f, std::size_t index) {
  if (f->kind() != FieldKind::RationalFunctions)
    throw std::domain_error("parameters require a rational-function field");
  const auto n = f->params().size();
  Scalar s;
  s.field_ = f;
  s.data_ = rf_make(Polynomial::variable(n, index), Polynomial::constant(n, 1));
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!field_ || !o.field_ || *field_ != *o.field_)
    throw std::domain_error("mixed-field scalar operands");
}

bool Scalar::is_zero() const {
  if (!field_) throw std::domain_error("uninitialized scalar");
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(data_) == 0;
    case FieldKind::Quadratic: {
      const auto& q = std::get<QuadElem>(data_);
      return q.a == 0 && q.b == 0;
    }
    case FieldKind::RationalFunctions:
      return as_num(std::get<RatFunc>(data_)).is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == Scalar::one(field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.data_ = std::get<Rational>(data_) + std::get<Rational>(o.data_);
      break;
    case FieldKind::Quadratic: {
      const auto& x = std::get<QuadElem>(data_);
      const auto& y = std::get<QuadElem>(o.data_);
      r.data_ = QuadElem{x.a + y.a, x.b + y.b};
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(data_);
      const auto& y = std::get<RatFunc>(o.data_);
      if (x.den == y.den) {
        r.data_ = rf_make(x.num + y.num, x.den);
      } else {
        r.data_ = rf_make(x.num * y.den + y.num * x.den, x.den * y.den);
      }
      break;
    }
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.data_ = Rational(-std::get<Rational>(data_));
      break;
    case FieldKind::Quadratic: {
      const auto& x = std::get<QuadElem>(data_);
      r.data_ = QuadElem{-x.a, -x.b};
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(data_);
      r.data_ = rf_make(-x.num, x.den);
      break;
    }
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.data_ = std::get<Rational>(data_) * std::get<Rational>(o.data_);
      break;
    case FieldKind::Quadratic: {
      const auto& x = std::get<QuadElem>(data_);
      const auto& y = std::get<QuadElem>(o.data_);
      const Rational d(field_->d());
      r.data_ = QuadElem{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(data_);
      const auto& y = std::get<RatFunc>(o.data_);
      r.data_ = rf_make(x.num * y.num, x.den * y.den);
      break;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.field_ = field_;
  switch (field_->kind()) {
    case FieldKind::Rationals:
      r.data_ = Rational(1 / std::get<Rational>(data_));
      break;
    case FieldKind::Quadratic: {
      const auto& x = std::get<QuadElem>(data_);
      const Rational d(field_->d());
      const Rational nrm = x.a * x.a - d * x.b * x.b;  // nonzero: d square-free
      r.data_ = QuadElem{x.a / nrm, -x.b / nrm};
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(data_);
      r.data_ = rf_make(x.den, x.num);
      break;
    }
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(data_) == std::get<Rational>(o.data_);
    case FieldKind::Quadratic: {
      const auto& x = std::get<QuadElem>(data_);
      const auto& y = std::get<QuadElem>(o.data_);
      return x == y;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = std::get<RatFunc>(data_);
      const auto& y = std::get<RatFunc>(o.data_);
      return (x.num * y.den - y.num * x.den).is_zero();
    }
  }
  return false;
}

Scalar Scalar::canonical() const {
  if (field_->kind() != FieldKind::RationalFunctions) return *this;
  const auto& x = std::get<RatFunc>(data_);
  Scalar r;
  r.field_ = field_;
  if (x.den.is_constant()) {
    const Rational c = x.den.constant_value();
    Polynomial num(field_->params().size());
    for (const auto& [m, coef] : x.num.terms()) num.add_term(m, coef / c);
    r.data_ = rf_make(std::move(num), Polynomial::constant(field_->params().size(), 1));
    return r;
  }
  // Make the denominator's leading coefficient 1.
  const Rational lead = x.den.terms().begin()->second;
  Polynomial num(field_->params().size()), den(field_->params().size());
  for (const auto& [m, coef] : x.num.terms()) num.add_term(m, coef / lead);
  for (const auto& [m, coef] : x.den.terms()) den.add_term(m, coef / lead);
  r.data_ = rf_make(std::move(num), std::move(den));
  return r;
}

std::string Scalar::to_string() const {
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return rational_to_string(std::get<Rational>(data_));
    case FieldKind::Quadratic: {
      const auto& q = std::get<QuadElem>(data_);
      if (q.b == 0) return rational_to_string(q.a);
      std::string bs;
      if (q.b == 1)
        bs = "s";
      else if (q.b == -1)
        bs = "-s";
      else
        bs = rational_to_string(q.b) + "s";
      if (q.a == 0) return bs;
      if (q.b > 0) return rational_to_string(q.a) + "+" + bs;
      return rational_to_string(q.a) + bs;  // bs already carries the sign
    }
    case FieldKind::RationalFunctions: {
      const Scalar c = canonical();
      const auto& x = std::get<RatFunc>(c.data_);
      const auto& params = field_->params();
      if (x.den.is_constant()) return x.num.to_string(params);
      return "(" + x.num.to_string(params) + ")/(" + x.den.to_string(params) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Coefficient parser

namespace {

class CoeffParser {
 public:
  CoeffParser(const std::string& text, const FieldPtr& field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in coefficient", static_cast<long>(pos_));
    return v;
  }

 private:
  const std::string& text_;
  FieldPtr field_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Scalar expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Scalar v = term();
    if (neg) v = -v;
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Scalar t = term();
        v = (c == '+') ? v + t : v - t;
      } else {
        break;
      }
    }
    return v;
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        Scalar f = factor();
        if (c == '/') {
          if (f.is_zero()) throw ParseError("division by zero", static_cast<long>(pos_));
          v = v / f;
        } else {
          v = v * f;
        }
      } else if (starts_factor(c)) {
        v = v * factor();
      } else {
        break;
      }
    }
    return v;
  }

  Scalar factor() {
    Scalar v = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected a nonnegative integer exponent", static_cast<long>(pos_));
      unsigned long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
        if (e > 100000) throw ParseError("exponent too large", static_cast<long>(pos_));
        ++pos_;
      }
      Scalar r = Scalar::one(field_);
      Scalar base = v;
      unsigned long long n = e;
      while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
      }
      v = r;
    }
    return v;
  }

  Scalar atom() {
    char c = peek();
    const long here = static_cast<long>(pos_);
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (peek() != ')') throw ParseError("expected ')'", static_cast<long>(pos_));
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return Scalar::from_rational(field_, Rational(boost::multiprecision::cpp_int(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      if (name == "s") {
        if (field_->kind() != FieldKind::Quadratic)
          throw ParseError("'s' is reserved for quadratic fields", here);
        return Scalar::sqrt_gen(field_);
      }
      if (field_->kind() != FieldKind::RationalFunctions)
        throw ParseError("unknown identifier '" + name + "'", here);
      const int idx = field_->param_index(name);
      if (idx >= 0) return Scalar::parameter(field_, static_cast<std::size_t>(idx));
      // Juxtaposed parameters lex as one identifier ("pq" for p*q, "l1p^2"
      // for l1*p^2). Consume only the longest declared prefix and leave the
      // rest in the stream, so exponents bind to the final name.
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t pi = 0; pi < field_->params().size(); ++pi) {
        const std::string& pn = field_->params()[pi];
        if (pn.size() > best_len && name.compare(0, pn.size(), pn) == 0) {
          best = static_cast<int>(pi);
          best_len = pn.size();
        }
      }
      if (best < 0) throw ParseError("unknown parameter '" + name + "'", here);
      pos_ = static_cast<std::size_t>(here) + best_len;
      return Scalar::parameter(field_, static_cast<std::size_t>(best));
    }
    throw ParseError("expected a coefficient atom", here);
  }
};

}  // namespace

Scalar scalar_parse(const std::string& text, const FieldPtr& field) {
  if (!field) throw std::domain_error("null field");
  return CoeffParser(text, field).parse();
}

}  // namespace homleib
