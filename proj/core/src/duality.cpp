#include "homleib/duality.hpp"

#include <algorithm>
#include <set>

namespace homleib {

namespace {

CheckReport structural_check(const std::string& name, bool ok, const std::string& detail = "") {
  CheckReport rep;
  rep.identity = name;
  rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) rep.error = detail;
  return rep;
}

std::vector<LinearMap> signed_duals(const std::vector<LinearMap>& mats) {
  std::vector<LinearMap> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(dual_map(m));
  return out;
}

std::vector<LinearMap> add_families(const std::vector<LinearMap>& a,
                                    const std::vector<LinearMap>& b) {
  std::vector<LinearMap> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

std::vector<LinearMap> negate_family(const std::vector<LinearMap>& a) {
  std::vector<LinearMap> out;
  out.reserve(a.size());
  for (const auto& m : a) out.push_back(-m);
  return out;
}

std::vector<LinearMap> zero_family(const FieldPtr& f, std::size_t n, std::size_t m) {
  return std::vector<LinearMap>(n, LinearMap::zero(f, m, m));
}

SuiteReport involutive_multiplicative_preconditions(const AlgebraPresentation& p) {
  SuiteReport suite;
  EvalContext ctx = EvalContext::variety(p);
  suite.append(check_identity_named("involutivity_al", ctx));
  for (const auto& name : Catalog::multiplicativity_identity_names(p.variety))
    suite.append(check_identity_named(name, ctx));
  return suite;
}

template <typename T>
Constructed<T> finish(Constructed<T> c, bool allow, const std::string& op) {
  const bool pre_ok = c.preconditions.all_passed();
  if (!pre_ok && !allow) {
    std::string first;
    for (const auto& chk : c.preconditions.checks)
      if (!chk.passed()) {
        first = chk.identity;
        break;
      }
    throw PreconditionError(op + ": precondition '" + first + "' failed", c.preconditions);
  }
  c.forced = !pre_ok;
  if (!allow && pre_ok && !c.verification.all_passed())
    throw InternalVerificationError(op + ": output failed post-verification", c.verification);
  return c;
}

}  // namespace

std::string dual_mode_name(DualMode m) {
  switch (m) {
    case DualMode::LR: return "lr";
    case DualMode::LMinusLR: return "l_minus";
    case DualMode::LZero: return "l0";
    case DualMode::ZeroR: return "0r";
    case DualMode::SumSum: return "sum_sum";
    case DualMode::SuccMinus: return "succ_minus";
    case DualMode::SuccPrec: return "succ_prec";
    case DualMode::DendrShapedSumSum: return "dendr_sum_sum";
    case DualMode::DendrShapedSuccMinus: return "dendr_succ_minus";
    case DualMode::DendrShapedSuccPrec: return "dendr_succ_prec";
  }
  return "?";
}

DualMode dual_mode_from_name(const std::string& name) {
  for (auto m : {DualMode::LR, DualMode::LMinusLR, DualMode::LZero, DualMode::ZeroR,
                 DualMode::SumSum, DualMode::SuccMinus, DualMode::SuccPrec,
                 DualMode::DendrShapedSumSum, DualMode::DendrShapedSuccMinus,
                 DualMode::DendrShapedSuccPrec}) {
    if (dual_mode_name(m) == name) return m;
  }
  throw ShapeError("unknown dual mode '" + name + "'");
}

Constructed<ActionFamily> dual_actions(const AlgebraPresentation& p, const ActionFamily& a,
                                       DualMode mode, bool allow_failed_preconditions) {
  validate_pair(p, a);
  if (variety_is_bihom(p.variety))
    throw ShapeError("dual actions are defined for single-twist presentations");
  Constructed<ActionFamily> out;
  out.preconditions = involutive_multiplicative_preconditions(p);

  const bool dendr_input = a.actions.count("lprec") != 0;
  const bool bracket_mode = mode == DualMode::LR || mode == DualMode::LMinusLR ||
                            mode == DualMode::LZero || mode == DualMode::ZeroR;
  if (bracket_mode && dendr_input)
    throw ShapeError("modes lr/l_minus/l0/0r take a bracket bimodule");
  if (!bracket_mode && !dendr_input)
    throw ShapeError("dendriform dual combinations take a dendriform bimodule");

  ActionFamily d;
  d.algebra_dim = a.algebra_dim;
  d.module_dim = a.module_dim;
  d.field = a.field;

  if (bracket_mode) {
    const auto ls = signed_duals(a.action("l"));
    const auto rs = signed_duals(a.action("r"));
    switch (mode) {
      case DualMode::LR:
        d.actions.emplace("l", ls);
        d.actions.emplace("r", rs);
        break;
      case DualMode::LMinusLR:
        d.actions.emplace("l", ls);
        d.actions.emplace("r", negate_family(add_families(ls, rs)));
        break;
      case DualMode::LZero:
        d.actions.emplace("l", ls);
        d.actions.emplace("r", zero_family(a.field, a.algebra_dim, a.module_dim));
        break;
      default:
        d.actions.emplace("l", zero_family(a.field, a.algebra_dim, a.module_dim));
        d.actions.emplace("r", rs);
        break;
    }
  } else {
    const auto lp = signed_duals(a.action("lprec"));
    const auto rp = signed_duals(a.action("rprec"));
    const auto lsu = signed_duals(a.action("lsucc"));
    const auto rsu = signed_duals(a.action("rsucc"));
    std::vector<LinearMap> l, r;
    switch (mode) {
      case DualMode::SumSum:
      case DualMode::DendrShapedSumSum:
        l = add_families(lp, lsu);
        r = add_families(rp, rsu);
        break;
      case DualMode::SuccMinus:
      case DualMode::DendrShapedSuccMinus:
        l = lsu;
        r = negate_family(add_families(lsu, rp));
        break;
      default:  // SuccPrec variants
        l = lsu;
        r = rp;
        break;
    }
    const bool shaped = mode == DualMode::DendrShapedSumSum ||
                        mode == DualMode::DendrShapedSuccMinus ||
                        mode == DualMode::DendrShapedSuccPrec;
    if (shaped) {
      d.actions.emplace("lprec", zero_family(a.field, a.algebra_dim, a.module_dim));
      d.actions.emplace("rprec", std::move(l));
      d.actions.emplace("lsucc", std::move(r));
      d.actions.emplace("rsucc", zero_family(a.field, a.algebra_dim, a.module_dim));
    } else {
      d.actions.emplace("l", std::move(l));
      d.actions.emplace("r", std::move(r));
    }
  }
  d.module_twists.emplace("beV", dual_map(a.module_twist("beV")));
  out.value = std::move(d);

  const bool dendr_output = out.value.actions.count("lprec") != 0;
  if (dendr_output == variety_is_dendriform(p.variety)) {
    out.verification = check_bimodule(p, out.value);
  } else {
    // Bracket bimodule of the sub-adjacent algebra.
    const auto sub = sub_adjacent(p, /*allow_failed_preconditions=*/true);
    out.verification = check_bimodule(sub.value, out.value);
  }
  return finish(std::move(out), allow_failed_preconditions, "dual_actions");
}

LinearMap standard_form(const FieldPtr& field, std::size_t dim_a) {
  LinearMap b(field, 2 * dim_a, 2 * dim_a);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < dim_a; ++i) {
    b.at(i, dim_a + i) = -one;  // B(e_i, eps_i) = -<eps_i, e_i>
    b.at(dim_a + i, i) = one;   // B(eps_i, e_i) = +<eps_i, e_i>
  }
  return b;
}

bool FormReport::skew() const {
  const CheckReport* c = identities.find("form_skew");
  return c && c->passed();
}
bool FormReport::alpha_invariant() const {
  const CheckReport* c = identities.find("form_alpha_invariant");
  return c && c->passed();
}
bool FormReport::cyclic_invariant() const {
  const CheckReport* c = identities.find("form_cyclic_invariant");
  return c && c->passed();
}

FormReport check_form(const AlgebraPresentation& p, const LinearMap& form) {
  if (form.rows() != p.dim || form.cols() != p.dim)
    throw ShapeError("form must be square of the carrier dimension");
  FormReport rep;
  const Scalar det = map_determinant(form);
  rep.parametric = p.field->kind() == FieldKind::RationalFunctions;
  rep.nondegenerate = det.is_zero() ? CheckStatus::Fail : CheckStatus::Pass;
  if (!rep.parametric) rep.determinant = det.to_string();

  AlgebraPresentation q = p;
  q.form = form;
  EvalContext ctx = EvalContext::variety(q);
  for (const char* name : {"form_skew", "form_alpha_invariant", "form_cyclic_invariant"})
    rep.identities.append(check_identity_named(name, ctx));
  return rep;
}

namespace {

bool spans_subalgebra(const AlgebraPresentation& p, const std::set<std::size_t>& s) {
  for (const auto& [name, prod] : p.products)
    for (auto i : s)
      for (auto j : s)
        for (std::size_t k = 0; k < p.dim; ++k)
          if (!s.count(k) && !prod.at(i, j, k).is_zero()) return false;
  return true;
}

bool twist_preserves(const AlgebraPresentation& p, const std::set<std::size_t>& s) {
  for (const auto& [name, t] : p.twists)
    for (auto j : s)
      for (std::size_t k = 0; k < p.dim; ++k)
        if (!s.count(k) && !t.at(k, j).is_zero()) return false;
  return true;
}

bool isotropic(const LinearMap& form, const std::set<std::size_t>& s) {
  for (auto i : s)
    for (auto j : s)
      if (!form.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

bool ManinReport::passed() const {
  return form.nondegenerate == CheckStatus::Pass && form.skew() && form.alpha_invariant() &&
         split_partitions && subalgebra_1 && subalgebra_2 && isotropic_1 && isotropic_2 &&
         twist_preserves_split && variety.all_passed();
}

ManinReport manin_check(const AlgebraPresentation& p, const LinearMap& form,
                        const std::vector<std::size_t>& split1,
                        const std::vector<std::size_t>& split2) {
  ManinReport rep;
  rep.form = check_form(p, form);
  std::set<std::size_t> s1, s2;
  for (auto i : split1) {
    if (i < 1 || i > p.dim) throw ShapeError("split index out of range");
    s1.insert(i - 1);
  }
  for (auto i : split2) {
    if (i < 1 || i > p.dim) throw ShapeError("split index out of range");
    s2.insert(i - 1);
  }
  rep.split_partitions = s1.size() + s2.size() == p.dim;
  for (auto i : s1) rep.split_partitions = rep.split_partitions && !s2.count(i);
  rep.subalgebra_1 = spans_subalgebra(p, s1);
  rep.subalgebra_2 = spans_subalgebra(p, s2);
  rep.isotropic_1 = isotropic(form, s1);
  rep.isotropic_2 = isotropic(form, s2);
  rep.twist_preserves_split = twist_preserves(p, s1) && twist_preserves(p, s2);
  rep.variety = check_variety(p);
  return rep;
}

AlgebraPresentation dual_presentation(const AlgebraPresentation& p, const Product& dual_product) {
  if (variety_is_dendriform(p.variety) || variety_is_bihom(p.variety))
    throw ShapeError("dual presentations are built for single-twist bracket presentations");
  if (dual_product.dim() != p.dim) throw ShapeError("dual product dimension mismatch");
  AlgebraPresentation q;
  q.dim = p.dim;
  q.field = p.field;
  q.variety = VarietyTag::HomLeibniz;
  q.products.emplace("br", dual_product);
  q.twists.emplace("al", dual_map(p.twist("al")));
  return q;
}

LinearMap cobracket_from_dual(const Product& dual_product) {
  const std::size_t n = dual_product.dim();
  LinearMap cb(dual_product.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) cb.at(i * n + j, k) = dual_product.at(i, j, k);
  return cb;
}

Constructed<SuiteReport> check_bialgebra(const AlgebraPresentation& p) {
  Constructed<SuiteReport> out;
  out.preconditions = involutive_multiplicative_preconditions(p);
  out.preconditions.append(
      structural_check("cobracket_present", p.cobracket.has_value(),
                       "presentation carries no cobracket"));
  if (!p.cobracket) {
    out.forced = true;
    return out;
  }
  EvalContext ctx = EvalContext::variety(p);
  out.value.append(check_identity_named("bialg_1", ctx));
  out.value.append(check_identity_named("bialg_2", ctx));
  out.verification = out.value;
  out.forced = !out.preconditions.all_passed();
  return out;
}

std::pair<ActionFamily, ActionFamily> dual_pair_actions(const AlgebraPresentation& p,
                                                        const AlgebraPresentation& p_dual) {
  if (p.dim != p_dual.dim || *p.field != *p_dual.field)
    throw ShapeError("dual pair must share the carrier dimension and field");
  const std::size_t n = p.dim;
  ActionFamily a_on_b, b_on_a;
  a_on_b.algebra_dim = a_on_b.module_dim = n;
  a_on_b.field = p.field;
  b_on_a.algebra_dim = b_on_a.module_dim = n;
  b_on_a.field = p.field;

  std::vector<LinearMap> l1, r1, l2, r2;
  const Product& br = p.product("br");
  const Product& brace = p_dual.product("br");
  for (std::size_t i = 0; i < n; ++i) {
    l1.push_back(dual_map(br.left_matrix(i)));
    r1.push_back(dual_map(br.right_matrix(i)));
    l2.push_back(dual_map(brace.left_matrix(i)));
    r2.push_back(dual_map(brace.right_matrix(i)));
  }
  a_on_b.actions.emplace("l", std::move(l1));
  a_on_b.actions.emplace("r", std::move(r1));
  a_on_b.module_twists.emplace("beV", p_dual.twist("al"));
  b_on_a.actions.emplace("l", std::move(l2));
  b_on_a.actions.emplace("r", std::move(r2));
  b_on_a.module_twists.emplace("beV", p.twist("al"));
  return {std::move(a_on_b), std::move(b_on_a)};
}

EquivReport bialgebra_matchedpair_equiv(const AlgebraPresentation& p,
                                        const AlgebraPresentation& p_dual) {
  EquivReport rep;
  rep.preconditions = involutive_multiplicative_preconditions(p);
  rep.preconditions.append(structural_check(
      "dual_twist_is_signed_dual", p_dual.twist("al") == dual_map(p.twist("al")),
      "the dual presentation's twist must be the signed dual of the primal twist"));

  auto [raw_a, raw_b] = dual_pair_actions(p, p_dual);
  const auto combine = [](const ActionFamily& raw) {
    ActionFamily fam = raw;
    fam.actions["r"] = negate_family(add_families(raw.action("l"), raw.action("r")));
    return fam;
  };
  const ActionFamily a_on_b = combine(raw_a);
  const ActionFamily b_on_a = combine(raw_b);

  EvalContext ctx = EvalContext::matched(p, p_dual, a_on_b, b_on_a);
  for (const auto& name : Catalog::matched_identity_names(VarietyTag::HomLeibniz))
    rep.matched_coupling.append(check_identity_named(name, ctx));

  AlgebraPresentation q = p;
  q.cobracket = cobracket_from_dual(p_dual.product("br"));
  EvalContext bctx = EvalContext::variety(q);
  rep.cobracket.append(check_identity_named("bialg_1", bctx));
  rep.cobracket.append(check_identity_named("bialg_2", bctx));

  rep.matched_verdict = rep.matched_coupling.all_passed();
  rep.cobracket_verdict = rep.cobracket.all_passed();
  rep.agree = rep.matched_verdict == rep.cobracket_verdict;
  return rep;
}

SuiteReport check_ooperator(const AlgebraPresentation& p, const ActionFamily& a,
                            const OOperatorData& data) {
  const ActionFamily fam = data.rota_baxter ? regular_actions(p) : a;
  validate_pair(p, fam);
  if (variety_is_dendriform(p.variety))
    throw ShapeError("operators act on bracket presentations");
  if (data.t.rows() != p.dim || data.t.cols() != fam.module_dim)
    throw ShapeError("operator must map the module into the algebra");

  SuiteReport suite;
  EvalContext ctx = EvalContext::ooperator(p, fam, data.t);
  const bool bihom = variety_is_bihom(p.variety);
  if (data.rota_baxter) {
    suite.append(check_identity_named("rota_baxter_intertwine_al", ctx));
    if (bihom) suite.append(check_identity_named("rota_baxter_intertwine_be", ctx));
    suite.append(check_identity_named(bihom ? "rota_baxter_bihom" : "rota_baxter_hom", ctx));
  } else if (bihom) {
    suite.append(check_identity_named("ooperator_intertwine_bihom_1", ctx));
    suite.append(check_identity_named("ooperator_intertwine_bihom_2", ctx));
    suite.append(check_identity_named("ooperator_bihom", ctx));
  } else {
    suite.append(check_identity_named("ooperator_intertwine_al", ctx));
    suite.append(check_identity_named("ooperator_hom", ctx));
  }
  return suite;
}

namespace {

CheckReport operator_morphism_check(const AlgebraPresentation& p, const AlgebraPresentation& mod,
                                    const LinearMap& t) {
  // T(u .C v) = [T u, T v] on all basis pairs, where .C is the sub-adjacent
  // product of the induced structure.
  CheckReport rep;
  rep.identity = "operator_is_morphism";
  rep.status = CheckStatus::Pass;
  const Product c = mod.bracket_sum();
  const Product& br = p.product("br");
  const std::size_t m = mod.dim;
  for (std::size_t i = 0; i < m && rep.status == CheckStatus::Pass; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ++rep.assignments_evaluated;
      Vector cij(mod.field, m);
      for (std::size_t k = 0; k < m; ++k) cij[k] = c.at(i, j, k);
      const Vector lhs = map_apply(t, cij);
      const Vector rhs = product_apply(br, map_apply(t, Vector::basis(mod.field, m, i)),
                                       map_apply(t, Vector::basis(mod.field, m, j)));
      const Vector diff = lhs - rhs;
      if (!diff.is_zero()) {
        rep.status = CheckStatus::Fail;
        rep.assignment = {i + 1, j + 1};
        rep.residual = diff.to_strings();
        rep.residual_sort = "vector";
        break;
      }
    }
  return rep;
}

}  // namespace

Constructed<AlgebraPresentation> induce_dendriform(const AlgebraPresentation& p,
                                                   const ActionFamily& a, const OOperatorData& data,
                                                   bool allow_failed_preconditions) {
  const ActionFamily fam = data.rota_baxter ? regular_actions(p) : a;
  Constructed<AlgebraPresentation> out;
  out.preconditions = check_ooperator(p, fam, data);

  const std::size_t m = fam.module_dim;
  AlgebraPresentation q;
  q.dim = m;
  q.field = p.field;
  q.variety = variety_is_bihom(p.variety) ? VarietyTag::BiHomLeibnizDendriform
                                          : VarietyTag::HomLeibnizDendriform;
  Product prec(p.field, m), succ(p.field, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector ti = map_apply(data.t, Vector::basis(p.field, m, i));
      const Vector tj = map_apply(data.t, Vector::basis(p.field, m, j));
      Vector pv(p.field, m), sv(p.field, m);
      if (data.convention == OOperatorData::Convention::Standard) {
        pv = map_apply(fam.action_of("r", tj), Vector::basis(p.field, m, i));
        sv = map_apply(fam.action_of("l", ti), Vector::basis(p.field, m, j));
      } else {
        pv = map_apply(fam.action_of("r", ti), Vector::basis(p.field, m, j));
        sv = map_apply(fam.action_of("l", tj), Vector::basis(p.field, m, i));
      }
      for (std::size_t k = 0; k < m; ++k) {
        prec.at(i, j, k) = pv[k];
        succ.at(i, j, k) = sv[k];
      }
    }
  q.products.emplace("prec", std::move(prec));
  q.products.emplace("succ", std::move(succ));
  q.twists.emplace("al", fam.module_twist("beV"));
  if (variety_is_bihom(p.variety)) q.twists.emplace("be", fam.module_twist("beV2"));
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  out.verification.append(operator_morphism_check(p, out.value, data.t));
  return finish(std::move(out), allow_failed_preconditions, "induce_dendriform");
}

Constructed<AlgebraPresentation> dendriform_from_invertible(const AlgebraPresentation& p,
                                                            const ActionFamily& a,
                                                            const OOperatorData& data,
                                                            bool allow_failed_preconditions) {
  const ActionFamily fam = data.rota_baxter ? regular_actions(p) : a;
  Constructed<AlgebraPresentation> out;
  out.preconditions = check_ooperator(p, fam, data);
  bool invertible = true;
  std::string why;
  LinearMap tinv;
  try {
    tinv = map_inverse(data.t);
  } catch (const SingularMatrixError& e) {
    invertible = false;
    why = e.what();
  } catch (const ShapeError& e) {
    invertible = false;
    why = e.what();
  }
  out.preconditions.append(structural_check("operator_invertible", invertible, why));
  if (!invertible) {
    if (!allow_failed_preconditions)
      throw PreconditionError("dendriform_from_invertible: operator is singular",
                              out.preconditions);
    out.forced = true;
    return out;
  }

  const std::size_t n = p.dim;
  AlgebraPresentation q;
  q.dim = n;
  q.field = p.field;
  q.variety = variety_is_bihom(p.variety) ? VarietyTag::BiHomLeibnizDendriform
                                          : VarietyTag::HomLeibnizDendriform;
  Product prec(p.field, n), succ(p.field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // x > y = T(l(x) T^-1 y), x < y = T(r(y) T^-1 x)
      const Vector x = Vector::basis(p.field, n, i);
      const Vector y = Vector::basis(p.field, n, j);
      const Vector sv = map_apply(data.t, map_apply(fam.action_of("l", x), map_apply(tinv, y)));
      const Vector pv = map_apply(data.t, map_apply(fam.action_of("r", y), map_apply(tinv, x)));
      for (std::size_t k = 0; k < n; ++k) {
        succ.at(i, j, k) = sv[k];
        prec.at(i, j, k) = pv[k];
      }
    }
  q.products.emplace("prec", std::move(prec));
  q.products.emplace("succ", std::move(succ));
  q.twists = p.twists;
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  out.verification.append(structural_check("compatible_bracket",
                                           out.value.bracket_sum() == p.product("br"),
                                           "sub-adjacent bracket differs from the input bracket"));
  return finish(std::move(out), allow_failed_preconditions, "dendriform_from_invertible");
}

Constructed<AlgebraPresentation> dendriform_from_form(const AlgebraPresentation& p,
                                                      const LinearMap& omega,
                                                      bool allow_failed_preconditions) {
  p.validate();
  if (variety_is_dendriform(p.variety) || variety_is_bihom(p.variety))
    throw ShapeError("the form construction applies to single-twist bracket presentations");
  Constructed<AlgebraPresentation> out;
  {
    const FormReport fr = check_form(p, omega);
    out.preconditions.append(structural_check("form_nondegenerate",
                                              fr.nondegenerate == CheckStatus::Pass));
    if (const CheckReport* c = fr.identities.find("form_skew")) out.preconditions.append(*c);
    if (const CheckReport* c = fr.identities.find("form_cyclic_invariant"))
      out.preconditions.append(*c);
    EvalContext ctx = EvalContext::variety(p);
    out.preconditions.append(check_identity_named("involutivity_al", ctx));
  }
  if (out.preconditions.all_passed() || allow_failed_preconditions) {
    bool solvable = true;
    LinearMap ginv_t;
    try {
      ginv_t = map_inverse(omega.transpose());
    } catch (const SingularMatrixError&) {
      solvable = false;
    }
    if (!solvable) {
      out.preconditions.append(structural_check("gram_solvable", false, "singular Gram matrix"));
      if (!allow_failed_preconditions)
        throw PreconditionError("dendriform_from_form: singular Gram matrix", out.preconditions);
      out.forced = true;
      return out;
    }
    const std::size_t n = p.dim;
    const Product& br = p.product("br");
    AlgebraPresentation q;
    q.dim = n;
    q.field = p.field;
    q.variety = VarietyTag::HomLeibnizDendriform;
    Product prec(p.field, n), succ(p.field, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // omega(e_i < e_j, z) = omega(e_j, [z, e_i]) and
        // omega(e_i > e_j, z) = omega(e_i, [e_j, z]) for all z.
        Vector rhs_prec(p.field, n), rhs_succ(p.field, n);
        for (std::size_t m = 0; m < n; ++m) {
          Vector bmi(p.field, n), bjm(p.field, n);
          for (std::size_t k = 0; k < n; ++k) {
            bmi[k] = br.at(m, i, k);
            bjm[k] = br.at(j, m, k);
          }
          const Vector wj = map_apply(omega, bmi);  // omega(e_j, [e_m, e_i])
          rhs_prec[m] = wj[j];
          const Vector wi = map_apply(omega, bjm);  // omega(e_i, [e_j, e_m])
          rhs_succ[m] = wi[i];
        }
        const Vector pv = map_apply(ginv_t, rhs_prec);
        const Vector sv = map_apply(ginv_t, rhs_succ);
        for (std::size_t k = 0; k < n; ++k) {
          prec.at(i, j, k) = pv[k];
          succ.at(i, j, k) = sv[k];
        }
      }
    q.products.emplace("prec", std::move(prec));
    q.products.emplace("succ", std::move(succ));
    q.twists.emplace("al", p.twist("al"));
    out.value = std::move(q);
    out.verification = check_variety(out.value);
    out.verification.append(structural_check("compatible_bracket",
                                             out.value.bracket_sum() == p.product("br"),
                                             "sub-adjacent bracket differs from the input bracket"));
    // The defining identity, asserted verbatim on all basis triples.
    {
      CheckReport rep;
      rep.identity = "symplectic_identity";
      rep.status = CheckStatus::Pass;
      const Product& prec2 = out.value.product("prec");
      for (std::size_t i = 0; i < n && rep.status == CheckStatus::Pass; ++i)
        for (std::size_t j = 0; j < n && rep.status == CheckStatus::Pass; ++j)
          for (std::size_t z = 0; z < n; ++z) {
            ++rep.assignments_evaluated;
            Vector pij(p.field, n), bzi(p.field, n);
            for (std::size_t k = 0; k < n; ++k) {
              pij[k] = prec2.at(i, j, k);
              bzi[k] = br.at(z, i, k);
            }
            const Vector oz = map_apply(omega, Vector::basis(p.field, n, z));
            Scalar lhs = Scalar::zero(p.field);
            for (std::size_t k = 0; k < n; ++k) lhs = lhs + pij[k] * oz[k];
            const Vector obzi = map_apply(omega, bzi);
            const Scalar rhs = obzi[j];
            if (lhs != rhs) {
              rep.status = CheckStatus::Fail;
              rep.assignment = {i + 1, j + 1, z + 1};
              rep.residual = {(lhs - rhs).to_string()};
              rep.residual_sort = "scalar";
              break;
            }
          }
      out.verification.append(std::move(rep));
    }
  }
  return finish(std::move(out), allow_failed_preconditions, "dendriform_from_form");
}

}  // namespace homleib
