#include "homleib/scalar.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace homleib;

namespace {

const FieldPtr kQ = make_field(FieldSpec::rationals());
const FieldPtr kQs2 = make_field(FieldSpec::quadratic(2));
const FieldPtr kQpq = make_field(FieldSpec::rational_functions({"p", "q"}));

// Independent expand-and-compare oracle: polynomials as unsorted term lists,
// multiplied and collected with none of the library's machinery.
using NaiveTerm = std::pair<std::vector<unsigned>, Rational>;
using NaivePoly = std::vector<NaiveTerm>;

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.emplace_back(std::move(e), ca * cb);
    }
  return out;
}

NaivePoly naive_add(NaivePoly a, const NaivePoly& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::map<std::vector<unsigned>, Rational> naive_collect(const NaivePoly& p) {
  std::map<std::vector<unsigned>, Rational> m;
  for (const auto& [e, c] : p) {
    m[e] += c;
    if (m[e] == 0) m.erase(e);
  }
  return m;
}

bool scalar_matches_naive(const Scalar& s, const NaivePoly& expected) {
  // Compare via the library's own parser on the naive printout; equality in
  // Scalar is semantic, so agreement pins the value, not the representation.
  Scalar acc = Scalar::zero(kQpq);
  for (const auto& [e, c] : naive_collect(expected)) {
    Scalar term = Scalar::from_rational(kQpq, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * Scalar::parameter(kQpq, i);
    acc = acc + term;
  }
  return acc == s;
}

Scalar rand_scalar(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  const auto r = [&] { return Rational(num(rng), den(rng)); };
  switch (f->kind()) {
    case FieldKind::Rationals:
      return Scalar::from_rational(f, r());
    case FieldKind::Quadratic:
      return Scalar::from_rational(f, r()) + Scalar::sqrt_gen(f) * Scalar::from_rational(f, r());
    case FieldKind::RationalFunctions: {
      Scalar p = Scalar::parameter(f, 0), q = Scalar::parameter(f, 1);
      Scalar v = Scalar::from_rational(f, r()) + p.operator*(Scalar::from_rational(f, r())) +
                 q * p * Scalar::from_rational(f, r());
      if (num(rng) % 2 == 0) {
        Scalar d = Scalar::one(f) + p * Scalar::from_rational(f, Rational(den(rng)));
        v = v / d;
      }
      return v;
    }
  }
  return Scalar::zero(f);
}

}  // namespace

TEST_CASE("coefficient parsing") {
  CHECK(scalar_parse("-1/2", kQ) == Scalar::from_rational(kQ, Rational(-1, 2)));
  CHECK(scalar_parse("0", kQ).is_zero());
  CHECK(scalar_parse("3", kQ) == Scalar::from_int(kQ, 3));
  CHECK(scalar_parse("2^10", kQ) == Scalar::from_int(kQ, 1024));
  CHECK(scalar_parse("(1+1)/4", kQ) == Scalar::from_rational(kQ, Rational(1, 2)));

  // p^2/3 over Q(p, q)
  const Scalar p = Scalar::parameter(kQpq, 0);
  const Scalar q = Scalar::parameter(kQpq, 1);
  CHECK(scalar_parse("p^2/3", kQpq) == p * p / Scalar::from_int(kQpq, 3));
  CHECK(scalar_parse("4pq/3", kQpq) ==
        Scalar::from_rational(kQpq, Rational(4, 3)) * p * q);
  CHECK(scalar_parse("-2p/3", kQpq) == Scalar::from_rational(kQpq, Rational(-2, 3)) * p);
  CHECK(scalar_parse("p q", kQpq) == p * q);
  CHECK(scalar_parse("p*q", kQpq) == p * q);

  // 's' denotes sqrt(d) over a quadratic field.
  const Scalar s = Scalar::sqrt_gen(kQs2);
  CHECK(scalar_parse("s", kQs2) == s);
  CHECK(scalar_parse("s*s", kQs2) == Scalar::from_int(kQs2, 2));
  CHECK(scalar_parse("1/2+3/4s", kQs2) ==
        Scalar::from_rational(kQs2, Rational(1, 2)) +
            s * Scalar::from_rational(kQs2, Rational(3, 4)));

  CHECK_THROWS_AS(scalar_parse("x", kQ), ParseError);
  CHECK_THROWS_AS(scalar_parse("r", kQpq), ParseError);     // unknown parameter
  CHECK_THROWS_AS(scalar_parse("s", kQpq), ParseError);     // reserved token
  CHECK_THROWS_AS(scalar_parse("1/0", kQ), ParseError);     // division by literal zero
  CHECK_THROWS_AS(scalar_parse("1+", kQ), ParseError);
  CHECK_THROWS_AS(scalar_parse("(1", kQ), ParseError);
  CHECK_THROWS_AS(scalar_parse("1)", kQ), ParseError);

  // Errors carry a position.
  try {
    scalar_parse("1 + x", kQ);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("field specs") {
  CHECK_THROWS_AS(FieldSpec::quadratic(4), ShapeError);   // perfect square
  CHECK_THROWS_AS(FieldSpec::quadratic(12), ShapeError);  // not square-free
  CHECK_NOTHROW(FieldSpec::quadratic(-1));
  CHECK_THROWS_AS(FieldSpec::rational_functions({"p", "p"}), ShapeError);
  CHECK_THROWS_AS(FieldSpec::rational_functions({"s"}), ShapeError);
  CHECK_THROWS_AS(FieldSpec::rational_functions({""}), ShapeError);
  CHECK_THROWS_AS(FieldSpec::rational_functions({}), ShapeError);
}

TEST_CASE("exact arithmetic on literals") {
  CHECK(scalar_parse("1/2", kQ) * scalar_parse("1/2", kQ) ==
        Scalar::from_rational(kQ, Rational(1, 4)));
  CHECK(Scalar::sqrt_gen(kQs2) * Scalar::sqrt_gen(kQs2) == Scalar::from_int(kQs2, 2));

  // (p^2/3) * q, checked against the independent expander.
  const Scalar prod = scalar_parse("p^2/3", kQpq) * scalar_parse("q", kQpq);
  NaivePoly expected = naive_mul({{{2, 0}, Rational(1, 3)}}, {{{0, 1}, Rational(1)}});
  CHECK(scalar_matches_naive(prod, expected));
  CHECK(prod == scalar_parse("p^2q/3", kQpq));
}

TEST_CASE("zero test") {
  CHECK(scalar_parse("0/1", kQ).is_zero());
  CHECK((scalar_parse("pq", kQpq) - scalar_parse("qp", kQpq)).is_zero());

  // (p+q)^2 - p^2 - 2pq - q^2, against the brute-force expansion.
  const Scalar lhs = scalar_parse("(p+q)^2 - p^2 - 2pq - q^2", kQpq);
  CHECK(lhs.is_zero());
  NaivePoly pq = {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
  NaivePoly sq = naive_mul(pq, pq);
  sq = naive_add(sq, {{{2, 0}, Rational(-1)}, {{1, 1}, Rational(-2)}, {{0, 2}, Rational(-1)}});
  CHECK(naive_collect(sq).empty());

  // Cross-multiplied equality on unreduced fractions.
  const Scalar a = scalar_parse("(p^2-q^2)/(p-q)", kQpq);
  const Scalar b = scalar_parse("p+q", kQpq);
  CHECK(a == b);
  CHECK((a - b).is_zero());
}

TEST_CASE("canonical form is idempotent and round-trips") {
  std::mt19937_64 rng(42);
  for (const auto& f : {kQ, kQs2, kQpq}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar x = rand_scalar(f, rng);
      const Scalar c1 = x.canonical();
      const Scalar c2 = c1.canonical();
      CHECK(c1.to_string() == c2.to_string());
      CHECK(scalar_parse(x.to_string(), f) == x);
    }
  }
}

TEST_CASE("field axioms on randomized elements") {
  std::mt19937_64 rng(7);
  for (const auto& f : {kQ, kQs2, kQpq}) {
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (int i = 0; i < 1000; ++i) {
      const Scalar a = rand_scalar(f, rng), b = rand_scalar(f, rng), c = rand_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      CHECK(a + zero == a);
      CHECK(a * one == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one);
        CHECK(a / a == one);
      }
    }
  }
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(Scalar::one(kQ) + Scalar::one(kQs2), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(kQpq) / Scalar::zero(kQpq), std::domain_error);
}
