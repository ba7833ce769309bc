#ifndef HOMLEIB_IDENTITY_HPP
#define HOMLEIB_IDENTITY_HPP

#include "homleib/field.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homleib {

/// Sorts of the identity DSL. Algebra variables range over the primary
/// carrier, Module variables over the module (or the second algebra in
/// matched-pair contexts). Tensor and scalar sorts only occur as result
/// sorts of subexpressions.
enum class Sort { Algebra, Module, Tensor, ScalarSort };

std::string sort_name(Sort s);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Operator argument of kron(f,g): id, a twist name, or left/right
/// multiplication by an algebra element.
struct TensorOp {
  enum class Kind { Id, Al, Be, LeftMul, RightMul };
  Kind kind = Kind::Id;
  ExprPtr arg;  // for LeftMul/RightMul
};

struct Expr {
  enum class Kind {
    Var,      // sym = variable name
    Unary,    // sym in {al, be, al2, be2, beV, beV2, T, Delta, sigma}; child a
    Product,  // sym in {br, prec, succ}; children a, b
    Action,   // sym in {l, r, lprec, rprec, lsucc, rsucc}; actor a, target b
    Form,     // B(a, b)
    Kron,     // kron(op1, op2)(a)
    Sum,      // signed terms
  };

  Kind kind = Kind::Var;
  std::string sym;
  ExprPtr a, b;
  std::vector<std::pair<int, ExprPtr>> terms;  // Sum
  TensorOp op1, op2;                           // Kron
  Sort sort = Sort::Algebra;
};

struct IdentityVar {
  std::string name;
  Sort sort;
};

/// A parsed, well-sorted multilinear identity `name over (vars): expr = 0`.
struct Identity {
  std::string name;
  std::vector<IdentityVar> vars;
  ExprPtr body;
  Sort result_sort = Sort::Algebra;
};

/// Parses one identity. Throws ParseError with the offending offset.
Identity parse_identity(const std::string& text);

/// Parses a catalog file: identities separated by whitespace, '#' comments.
std::vector<Identity> parse_identity_file(const std::string& text);

}  // namespace homleib

#endif
