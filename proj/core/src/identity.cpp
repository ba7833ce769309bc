#include "homleib/identity.hpp"

#include <cctype>
#include <map>
#include <set>

namespace homleib {

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::Algebra: return "A";
    case Sort::Module: return "V";
    case Sort::Tensor: return "tensor";
    case Sort::ScalarSort: return "scalar";
  }
  return "?";
}

namespace {

const std::set<std::string> kUnarySyms = {"al", "be", "al2", "be2", "beV", "beV2",
                                          "T",  "Delta", "sigma"};
const std::set<std::string> kProductSyms = {"br", "prec", "succ"};
const std::set<std::string> kActionSyms = {"l", "r", "lprec", "rprec", "lsucc", "rsucc"};

class IdentityParser {
 public:
  explicit IdentityParser(const std::string& text) : text_(text) {}

  std::vector<Identity> parse_all() {
    std::vector<Identity> out;
    skip_ws();
    while (pos_ < text_.size()) {
      out.push_back(parse_one());
      skip_ws();
    }
    return out;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  Identity parse_one() {
    Identity id;
    id.name = expect_name("identity name");
    expect_keyword("over");
    expect_char('(');
    while (true) {
      IdentityVar v;
      v.name = expect_name("variable name");
      expect_char(':');
      const std::string s = expect_name("sort");
      if (s == "A")
        v.sort = Sort::Algebra;
      else if (s == "V")
        v.sort = Sort::Module;
      else
        throw err("sort must be 'A' or 'V'");
      for (const auto& w : id.vars)
        if (w.name == v.name) throw err("duplicate variable '" + v.name + "'");
      id.vars.push_back(v);
      char c = peek();
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == ')') {
        ++pos_;
        break;
      }
      throw err("expected ',' or ')' in variable list");
    }
    expect_char(':');
    vars_ = &id.vars;
    ExprPtr body = parse_expr();
    expect_char('=');
    expect_char('0');
    id.body = body;
    id.result_sort = body->sort;
    if (id.result_sort == Sort::Module) {
      // residual lives in the module; fine
    }
    return id;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  const std::vector<IdentityVar>* vars_ = nullptr;

  ParseError err(const std::string& msg) const {
    return ParseError(msg, static_cast<long>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect_char(char c) {
    if (peek() != c) throw err(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string expect_name(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                  text_[pos_] == '_'))
      throw err("expected " + what);
    std::string name;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      name += text_[pos_++];
    return name;
  }

  void expect_keyword(const std::string& kw) {
    const std::string got = expect_name("keyword '" + kw + "'");
    if (got != kw) throw err("expected keyword '" + kw + "', got '" + got + "'");
  }

  Sort var_sort(const std::string& name) {
    for (const auto& v : *vars_)
      if (v.name == name) return v.sort;
    throw err("undeclared variable '" + name + "'");
  }

  ExprPtr parse_expr() {
    std::vector<std::pair<int, ExprPtr>> terms;
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    terms.emplace_back(sign, parse_term());
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        terms.emplace_back(c == '-' ? -1 : 1, parse_term());
      } else {
        break;
      }
    }
    if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sum;
    e->sort = terms[0].second->sort;
    for (const auto& [s, t] : terms) {
      if (t->sort != e->sort)
        throw err("sum mixes sorts " + sort_name(e->sort) + " and " + sort_name(t->sort));
    }
    e->terms = terms;
    return e;
  }

  ExprPtr parse_term() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect_char(')');
      return inner;
    }
    const std::string name = expect_name("expression");
    if (name == "kron") return parse_kron();
    if (kUnarySyms.count(name)) return parse_unary(name);
    if (kProductSyms.count(name)) return parse_product(name);
    if (kActionSyms.count(name)) return parse_action(name);
    if (name == "B") return parse_form();
    // a bare variable
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    e->sym = name;
    e->sort = var_sort(name);
    return e;
  }

  ExprPtr parse_unary(const std::string& sym) {
    expect_char('(');
    ExprPtr arg = parse_expr();
    expect_char(')');
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unary;
    e->sym = sym;
    e->a = arg;
    if (sym == "al" || sym == "be") {
      if (arg->sort != Sort::Algebra) throw err("'" + sym + "' expects an algebra argument");
      e->sort = Sort::Algebra;
    } else if (sym == "al2" || sym == "be2" || sym == "beV" || sym == "beV2") {
      if (arg->sort != Sort::Module) throw err("'" + sym + "' expects a module argument");
      e->sort = Sort::Module;
    } else if (sym == "T") {
      if (arg->sort != Sort::Module) throw err("'T' expects a module argument");
      e->sort = Sort::Algebra;
    } else if (sym == "Delta") {
      if (arg->sort != Sort::Algebra) throw err("'Delta' expects an algebra argument");
      e->sort = Sort::Tensor;
    } else {  // sigma
      if (arg->sort != Sort::Tensor) throw err("'sigma' expects a tensor argument");
      e->sort = Sort::Tensor;
    }
    return e;
  }

  ExprPtr parse_product(const std::string& sym) {
    expect_char('(');
    ExprPtr lhs = parse_expr();
    expect_char(',');
    ExprPtr rhs = parse_expr();
    expect_char(')');
    if (lhs->sort != rhs->sort || (lhs->sort != Sort::Algebra && lhs->sort != Sort::Module))
      throw err("product '" + sym + "' expects two arguments of the same carrier sort");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Product;
    e->sym = sym;
    e->a = lhs;
    e->b = rhs;
    e->sort = lhs->sort;
    return e;
  }

  ExprPtr parse_action(const std::string& sym) {
    expect_char('(');
    ExprPtr actor = parse_expr();
    expect_char(')');
    expect_char('(');
    ExprPtr target = parse_expr();
    expect_char(')');
    if (actor->sort == Sort::Algebra && target->sort == Sort::Module) {
      // action of the algebra on the module
    } else if (actor->sort == Sort::Module && target->sort == Sort::Algebra) {
      // reverse action (matched-pair contexts)
    } else {
      throw err("action '" + sym + "' expects (algebra)(module) or (module)(algebra) arguments");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Action;
    e->sym = sym;
    e->a = actor;
    e->b = target;
    e->sort = target->sort;
    return e;
  }

  ExprPtr parse_form() {
    expect_char('(');
    ExprPtr lhs = parse_expr();
    expect_char(',');
    ExprPtr rhs = parse_expr();
    expect_char(')');
    if (lhs->sort != Sort::Algebra || rhs->sort != Sort::Algebra)
      throw err("'B' expects two algebra arguments");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Form;
    e->sym = "B";
    e->a = lhs;
    e->b = rhs;
    e->sort = Sort::ScalarSort;
    return e;
  }

  TensorOp parse_tensor_op() {
    const std::string name = expect_name("tensor operator");
    TensorOp op;
    if (name == "id") {
      op.kind = TensorOp::Kind::Id;
    } else if (name == "al") {
      op.kind = TensorOp::Kind::Al;
    } else if (name == "be") {
      op.kind = TensorOp::Kind::Be;
    } else if (name == "L" || name == "R") {
      op.kind = name == "L" ? TensorOp::Kind::LeftMul : TensorOp::Kind::RightMul;
      expect_char('(');
      op.arg = parse_expr();
      expect_char(')');
      if (op.arg->sort != Sort::Algebra)
        throw err("'" + name + "' expects an algebra argument");
    } else {
      throw err("unknown tensor operator '" + name + "'");
    }
    return op;
  }

  ExprPtr parse_kron() {
    expect_char('(');
    TensorOp op1 = parse_tensor_op();
    expect_char(',');
    TensorOp op2 = parse_tensor_op();
    expect_char(')');
    expect_char('(');
    ExprPtr arg = parse_expr();
    expect_char(')');
    if (arg->sort != Sort::Tensor) throw err("'kron' applies to a tensor expression");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Kron;
    e->sym = "kron";
    e->a = arg;
    e->op1 = op1;
    e->op2 = op2;
    e->sort = Sort::Tensor;
    return e;
  }
};

}  // namespace

Identity parse_identity(const std::string& text) {
  IdentityParser p(text);
  Identity id = p.parse_one();
  if (!p.at_end()) throw ParseError("trailing input after identity");
  return id;
}

std::vector<Identity> parse_identity_file(const std::string& text) {
  return IdentityParser(text).parse_all();
}

}  // namespace homleib
