#include "homleib/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homleib {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto deg = [](const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
  };
  const auto da = deg(a), db = deg(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, earliest parameter first
}

Polynomial Polynomial::constant(std::size_t nparams, const Rational& c) {
  Polynomial p(nparams);
  if (c != 0) p.terms_.emplace(Monomial(nparams, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nparams, std::size_t index) {
  if (index >= nparams) throw std::out_of_range("parameter index");
  Polynomial p(nparams);
  Monomial m(nparams, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nparams_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nparams_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nparams_, 0);
      for (std::size_t i = 0; i < nparams_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial r = Polynomial::constant(nparams_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string Polynomial::to_string(const std::vector<std::string>& params) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      vars += params[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag);
      out += vars;
    }
  }
  return out;
}

}  // namespace homleib
