#include "homleib/engine.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace homleib {

EvalContext EvalContext::variety(const AlgebraPresentation& p) {
  EvalContext ctx;
  ctx.A = &p;
  return ctx;
}

EvalContext EvalContext::bimodule(const AlgebraPresentation& p, const ActionFamily& a) {
  EvalContext ctx;
  ctx.A = &p;
  ctx.act_a_on_m = &a;
  ctx.module_dim = a.module_dim;
  return ctx;
}

EvalContext EvalContext::matched(const AlgebraPresentation& pa, const AlgebraPresentation& pb,
                                 const ActionFamily& a_on_b, const ActionFamily& b_on_a) {
  EvalContext ctx;
  ctx.A = &pa;
  ctx.B = &pb;
  ctx.act_a_on_m = &a_on_b;
  ctx.act_m_on_a = &b_on_a;
  ctx.module_dim = pb.dim;
  return ctx;
}

EvalContext EvalContext::ooperator(const AlgebraPresentation& p, const ActionFamily& a,
                                   const LinearMap& t) {
  EvalContext ctx;
  ctx.A = &p;
  ctx.act_a_on_m = &a;
  ctx.op_t = &t;
  ctx.module_dim = a.module_dim;
  return ctx;
}

const FieldPtr& EvalContext::field() const {
  if (!A) throw ShapeError("evaluation context has no algebra");
  return A->field;
}

std::size_t EvalContext::sort_dim(Sort s) const {
  switch (s) {
    case Sort::Algebra:
      return A->dim;
    case Sort::Module:
      if (module_dim == 0) throw ShapeError("context binds no module sort");
      return module_dim;
    default:
      throw ShapeError("variables must have sort A or V");
  }
}

namespace {

// Looks up the product tensor for a sort; for dendriform presentations 'br'
// means the sub-adjacent sum prec + succ.
Product resolve_product(const EvalContext& ctx, Sort sort, const std::string& sym) {
  const AlgebraPresentation* p = nullptr;
  if (sort == Sort::Algebra) {
    p = ctx.A;
  } else {
    p = ctx.B;
    if (!p) throw ShapeError("context binds no second algebra for module-sort products");
  }
  if (p->has_product(sym)) return p->product(sym);
  if (sym == "br" && variety_is_dendriform(p->variety)) return p->bracket_sum();
  throw ShapeError("missing product symbol '" + sym + "'");
}

class Evaluator {
 public:
  Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

  Value eval(const Identity& id, const std::vector<Vector>& var_values) {
    var_names_ = &id.vars;
    values_ = &var_values;
    return eval_expr(*id.body);
  }

 private:
  const EvalContext& ctx_;
  const std::vector<IdentityVar>* var_names_ = nullptr;
  const std::vector<Vector>* values_ = nullptr;

  const Vector& var_value(const std::string& name) const {
    for (std::size_t i = 0; i < var_names_->size(); ++i)
      if ((*var_names_)[i].name == name) return (*values_)[i];
    throw ShapeError("unbound variable '" + name + "'");
  }

  Vector eval_vector(const Expr& e) {
    Value v = eval_expr(e);
    if (auto* vec = std::get_if<Vector>(&v)) return std::move(*vec);
    throw ShapeError("expected a vector-sort expression");
  }

  Tensor2Element eval_tensor(const Expr& e) {
    Value v = eval_expr(e);
    if (auto* t = std::get_if<Tensor2Element>(&v)) return std::move(*t);
    throw ShapeError("expected a tensor-sort expression");
  }

  LinearMap tensor_op_matrix(const TensorOp& op) {
    const auto& A = *ctx_.A;
    switch (op.kind) {
      case TensorOp::Kind::Id:
        return LinearMap::identity(A.field, A.dim);
      case TensorOp::Kind::Al:
        return A.twist("al");
      case TensorOp::Kind::Be:
        return A.twist("be");
      case TensorOp::Kind::LeftMul:
      case TensorOp::Kind::RightMul: {
        const Vector w = eval_vector(*op.arg);
        const Product br = resolve_product(ctx_, Sort::Algebra, "br");
        LinearMap m(A.field, A.dim, A.dim);
        for (std::size_t i = 0; i < A.dim; ++i) {
          if (w[i].is_zero()) continue;
          const LinearMap mi =
              op.kind == TensorOp::Kind::LeftMul ? br.left_matrix(i) : br.right_matrix(i);
          m = m + mi.scaled(w[i]);
        }
        return m;
      }
    }
    throw ShapeError("bad tensor operator");
  }

  Value eval_expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Var:
        return var_value(e.sym);

      case Expr::Kind::Sum: {
        Value acc = eval_expr(*e.terms[0].second);
        if (e.terms[0].first < 0) {
          std::visit([](auto& v) { v = -v; }, acc);
        }
        for (std::size_t i = 1; i < e.terms.size(); ++i) {
          Value t = eval_expr(*e.terms[i].second);
          const int sign = e.terms[i].first;
          if (std::holds_alternative<Vector>(acc)) {
            auto& a = std::get<Vector>(acc);
            const auto& b = std::get<Vector>(t);
            a = sign > 0 ? a + b : a - b;
          } else if (std::holds_alternative<Tensor2Element>(acc)) {
            auto& a = std::get<Tensor2Element>(acc);
            const auto& b = std::get<Tensor2Element>(t);
            a = sign > 0 ? a + b : a - b;
          } else {
            auto& a = std::get<Scalar>(acc);
            const auto& b = std::get<Scalar>(t);
            a = sign > 0 ? a + b : a - b;
          }
        }
        return acc;
      }

      case Expr::Kind::Unary: {
        if (e.sym == "Delta") {
          if (!ctx_.A->cobracket)
            throw ShapeError("presentation has no cobracket; 'Delta' is undefined");
          const Vector v = eval_vector(*e.a);
          const Vector flat = map_apply(*ctx_.A->cobracket, v);
          Tensor2Element t(ctx_.A->field, ctx_.A->dim);
          for (std::size_t i = 0; i < ctx_.A->dim; ++i)
            for (std::size_t j = 0; j < ctx_.A->dim; ++j) t.at(i, j) = flat[i * ctx_.A->dim + j];
          return t;
        }
        if (e.sym == "sigma") return tensor_swap(eval_tensor(*e.a));
        if (e.sym == "T") {
          if (!ctx_.op_t) throw ShapeError("context binds no operator 'T'");
          return map_apply(*ctx_.op_t, eval_vector(*e.a));
        }
        const Vector v = eval_vector(*e.a);
        const LinearMap* m = nullptr;
        if (e.sym == "al" || e.sym == "be") {
          m = &ctx_.A->twist(e.sym);
        } else if (e.sym == "al2" || e.sym == "be2") {
          if (!ctx_.B) throw ShapeError("context binds no second algebra for '" + e.sym + "'");
          m = &ctx_.B->twist(e.sym == "al2" ? "al" : "be");
        } else {  // beV, beV2
          if (ctx_.act_a_on_m && ctx_.act_a_on_m->module_twists.count(
                                     e.sym == "beV" ? "beV" : "beV2")) {
            m = &ctx_.act_a_on_m->module_twist(e.sym == "beV" ? "beV" : "beV2");
          } else if (ctx_.B) {
            m = &ctx_.B->twist(e.sym == "beV" ? "al" : "be");
          } else {
            throw ShapeError("context binds no module twist '" + e.sym + "'");
          }
        }
        return map_apply(*m, v);
      }

      case Expr::Kind::Product: {
        const Product p = resolve_product(ctx_, e.sort, e.sym);
        return product_apply(p, eval_vector(*e.a), eval_vector(*e.b));
      }

      case Expr::Kind::Action: {
        const Vector actor = eval_vector(*e.a);
        const Vector target = eval_vector(*e.b);
        const ActionFamily* fam = nullptr;
        if (e.a->sort == Sort::Algebra) {
          fam = ctx_.act_a_on_m;
          if (!fam) throw ShapeError("context binds no actions of the algebra on the module");
        } else {
          fam = ctx_.act_m_on_a;
          if (!fam) throw ShapeError("context binds no actions of the module on the algebra");
        }
        if (!fam->has_action(e.sym)) throw ShapeError("missing action symbol '" + e.sym + "'");
        return map_apply(fam->action_of(e.sym, actor), target);
      }

      case Expr::Kind::Form: {
        if (!ctx_.A->form) throw ShapeError("presentation has no bilinear form; 'B' is undefined");
        const Vector x = eval_vector(*e.a);
        const Vector y = eval_vector(*e.b);
        const Vector fy = map_apply(*ctx_.A->form, y);
        Scalar acc = Scalar::zero(ctx_.A->field);
        for (std::size_t i = 0; i < x.dim(); ++i) {
          if (x[i].is_zero() || fy[i].is_zero()) continue;
          acc = acc + x[i] * fy[i];
        }
        return acc;
      }

      case Expr::Kind::Kron: {
        const Tensor2Element t = eval_tensor(*e.a);
        return tensor_apply(t, tensor_op_matrix(e.op1), tensor_op_matrix(e.op2));
      }
    }
    throw ShapeError("bad expression");
  }
};

bool value_is_zero(const Value& v) {
  if (auto* vec = std::get_if<Vector>(&v)) return vec->is_zero();
  if (auto* t = std::get_if<Tensor2Element>(&v)) return t->is_zero();
  return std::get<Scalar>(v).is_zero();
}

std::vector<std::string> value_strings(const Value& v) {
  if (auto* vec = std::get_if<Vector>(&v)) return vec->to_strings();
  if (auto* t = std::get_if<Tensor2Element>(&v)) return t->to_strings();
  return {std::get<Scalar>(v).to_string()};
}

std::string value_sort(const Value& v) {
  if (std::holds_alternative<Vector>(v)) return "vector";
  if (std::holds_alternative<Tensor2Element>(v)) return "tensor";
  return "scalar";
}

std::vector<Vector> assignment_vectors(const Identity& id, const EvalContext& ctx,
                                       const std::vector<std::size_t>& assignment) {
  std::vector<Vector> vals;
  vals.reserve(id.vars.size());
  for (std::size_t i = 0; i < id.vars.size(); ++i) {
    const std::size_t d = ctx.sort_dim(id.vars[i].sort);
    if (assignment[i] >= d) throw ShapeError("assignment index out of range");
    vals.push_back(Vector::basis(ctx.field(), d, assignment[i]));
  }
  return vals;
}

std::vector<std::size_t> unflatten(const Identity& id, const EvalContext& ctx, std::uint64_t flat) {
  std::vector<std::size_t> idx(id.vars.size(), 0);
  for (std::size_t i = id.vars.size(); i-- > 0;) {
    const std::size_t d = ctx.sort_dim(id.vars[i].sort);
    idx[i] = static_cast<std::size_t>(flat % d);
    flat /= d;
  }
  return idx;
}

}  // namespace

Value evaluate_identity(const Identity& id, const EvalContext& ctx,
                        const std::vector<std::size_t>& assignment) {
  if (assignment.size() != id.vars.size())
    throw ShapeError("assignment arity mismatch");
  return Evaluator(ctx).eval(id, assignment_vectors(id, ctx, assignment));
}

Value evaluate_identity_vectors(const Identity& id, const EvalContext& ctx,
                                const std::vector<Vector>& values) {
  if (values.size() != id.vars.size()) throw ShapeError("assignment arity mismatch");
  return Evaluator(ctx).eval(id, values);
}

CheckReport check_identity(const Identity& id, const EvalContext& ctx, unsigned jobs) {
  CheckReport rep;
  rep.identity = id.name;

  std::uint64_t total = 1;
  try {
    for (const auto& v : id.vars) total *= ctx.sort_dim(v.sort);
    // Evaluate the first assignment up front so binding errors surface
    // deterministically rather than from a worker thread.
    Value first = evaluate_identity(id, ctx, unflatten(id, ctx, 0));
    const std::uint64_t kFirstFail = value_is_zero(first) ? total : 0;

    std::uint64_t fail_at = kFirstFail;
    if (fail_at == total && total > 1) {
      const unsigned nthreads =
          jobs <= 1 ? 1u : std::min<std::uint64_t>(jobs, total - 1) > 0
              ? static_cast<unsigned>(std::min<std::uint64_t>(jobs, total - 1))
              : 1u;
      if (nthreads == 1) {
        for (std::uint64_t f = 1; f < total; ++f) {
          Value v = evaluate_identity(id, ctx, unflatten(id, ctx, f));
          if (!value_is_zero(v)) {
            fail_at = f;
            break;
          }
        }
      } else {
        std::atomic<std::uint64_t> best{total};
        std::vector<std::thread> workers;
        std::exception_ptr error;
        std::mutex err_mu;
        const std::uint64_t count = total - 1;
        const std::uint64_t chunk = (count + nthreads - 1) / nthreads;
        for (unsigned w = 0; w < nthreads; ++w) {
          const std::uint64_t lo = 1 + w * chunk;
          const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
          if (lo >= hi) break;
          workers.emplace_back([&, lo, hi] {
            try {
              for (std::uint64_t f = lo; f < hi; ++f) {
                if (best.load(std::memory_order_relaxed) <= lo) return;
                Value v = evaluate_identity(id, ctx, unflatten(id, ctx, f));
                if (!value_is_zero(v)) {
                  std::uint64_t cur = best.load();
                  while (f < cur && !best.compare_exchange_weak(cur, f)) {
                  }
                  return;
                }
              }
            } catch (...) {
              std::lock_guard<std::mutex> lock(err_mu);
              if (!error) error = std::current_exception();
            }
          });
        }
        for (auto& t : workers) t.join();
        if (error) std::rethrow_exception(error);
        fail_at = best.load();
      }
    }

    if (fail_at == total) {
      rep.status = CheckStatus::Pass;
      rep.assignments_evaluated = total;
    } else {
      Value v = evaluate_identity(id, ctx, unflatten(id, ctx, fail_at));
      rep.status = CheckStatus::Fail;
      rep.assignments_evaluated = fail_at + 1;
      const auto idx = unflatten(id, ctx, fail_at);
      rep.assignment.reserve(idx.size());
      for (auto i : idx) rep.assignment.push_back(i + 1);
      rep.residual = value_strings(v);
      rep.residual_sort = value_sort(v);
    }
  } catch (const std::exception& e) {
    rep.status = CheckStatus::Error;
    rep.error = e.what();
  }
  return rep;
}

CheckReport check_identity_named(const std::string& name, const EvalContext& ctx, unsigned jobs) {
  const Identity* id = Catalog::active().find(name);
  if (!id) {
    CheckReport rep;
    rep.identity = name;
    rep.status = CheckStatus::Error;
    rep.error = "unknown identity '" + name + "'";
    return rep;
  }
  return check_identity(*id, ctx, jobs);
}

SuiteReport check_variety(const AlgebraPresentation& p, unsigned jobs) {
  p.validate();
  EvalContext ctx = EvalContext::variety(p);
  SuiteReport suite;
  for (const auto& name : Catalog::variety_identity_names(p.variety))
    suite.append(check_identity_named(name, ctx, jobs));
  if (p.multiplicative_claimed)
    for (const auto& name : Catalog::multiplicativity_identity_names(p.variety))
      suite.append(check_identity_named(name, ctx, jobs));
  return suite;
}

SuiteReport check_bimodule(const AlgebraPresentation& p, const ActionFamily& a, unsigned jobs) {
  validate_pair(p, a);
  EvalContext ctx = EvalContext::bimodule(p, a);
  SuiteReport suite;
  for (const auto& name : Catalog::bimodule_identity_names(p.variety))
    suite.append(check_identity_named(name, ctx, jobs));
  // The consequence identity is a derived property, asserted only once the
  // bimodule conditions themselves hold.
  if (!variety_is_dendriform(p.variety) && !variety_is_bihom(p.variety) && suite.all_passed())
    suite.append(check_identity_named("homleib_bimod_consequence", ctx, jobs));
  return suite;
}

SuiteReport MatchedPairReport::flattened(bool prefix_bimodules) const {
  SuiteReport out;
  for (auto c : bimodule_a.checks) {
    if (prefix_bimodules) c.identity = "A." + c.identity;
    out.append(std::move(c));
  }
  for (auto c : bimodule_b.checks) {
    if (prefix_bimodules) c.identity = "B." + c.identity;
    out.append(std::move(c));
  }
  out.append(coupling);
  return out;
}

MatchedPairReport check_matched_pair(const AlgebraPresentation& pa, const AlgebraPresentation& pb,
                                     const ActionFamily& a_on_b, const ActionFamily& b_on_a,
                                     unsigned jobs) {
  pa.validate();
  pb.validate();
  validate_pair(pa, a_on_b);
  validate_pair(pb, b_on_a);
  if (a_on_b.module_dim != pb.dim || b_on_a.module_dim != pa.dim)
    throw ShapeError("matched-pair action families do not match the two carriers");
  if (variety_is_dendriform(pa.variety) != variety_is_dendriform(pb.variety) ||
      variety_is_bihom(pa.variety) != variety_is_bihom(pb.variety))
    throw ShapeError("matched pair requires presentations of the same variety class");

  MatchedPairReport rep;
  rep.bimodule_a = check_bimodule(pa, a_on_b, jobs);
  rep.bimodule_b = check_bimodule(pb, b_on_a, jobs);
  EvalContext ctx = EvalContext::matched(pa, pb, a_on_b, b_on_a);
  for (const auto& name : Catalog::matched_identity_names(pa.variety))
    rep.coupling.append(check_identity_named(name, ctx, jobs));
  return rep;
}

CheckReport fuzz_multilinearity(const Identity& id, const EvalContext& ctx, unsigned samples,
                                std::uint64_t seed) {
  CheckReport basis = check_identity(id, ctx, 1);
  CheckReport rep;
  rep.identity = id.name + ".multilinearity";
  if (basis.status == CheckStatus::Error) {
    rep.status = CheckStatus::Error;
    rep.error = basis.error;
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const FieldPtr& f = ctx.field();
  try {
    for (unsigned s = 0; s < samples; ++s) {
      std::vector<Vector> vals;
      vals.reserve(id.vars.size());
      for (const auto& v : id.vars) {
        Vector vec(f, ctx.sort_dim(v.sort));
        for (std::size_t i = 0; i < vec.dim(); ++i)
          vec[i] = Scalar::from_rational(f, Rational(num(rng), den(rng)));
        vals.push_back(std::move(vec));
      }
      Value r = evaluate_identity_vectors(id, ctx, vals);
      const bool zero = value_is_zero(r);
      if (zero != (basis.status == CheckStatus::Pass) && !zero) {
        // A nonzero residual at a random point while every basis residual
        // vanished would disprove the multilinear shortcut.
        rep.status = CheckStatus::Fail;
        rep.residual = value_strings(r);
        rep.residual_sort = value_sort(r);
        rep.assignments_evaluated = s + 1;
        return rep;
      }
      ++rep.assignments_evaluated;
    }
  } catch (const std::exception& e) {
    rep.status = CheckStatus::Error;
    rep.error = e.what();
    return rep;
  }
  rep.status = CheckStatus::Pass;
  return rep;
}

}  // namespace homleib
