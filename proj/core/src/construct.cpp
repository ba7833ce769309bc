#include "homleib/construct.hpp"

namespace homleib {

namespace {

CheckReport structural_check(const std::string& name, bool ok, const std::string& detail = "") {
  CheckReport rep;
  rep.identity = name;
  rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) rep.error = detail;
  return rep;
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

Product post_compose(const Product& p, const LinearMap& m) {
  Product out(p.field(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      Vector col(p.field(), p.dim());
      for (std::size_t k = 0; k < p.dim(); ++k) col[k] = p.at(i, j, k);
      const Vector img = map_apply(m, col);
      for (std::size_t k = 0; k < p.dim(); ++k) out.at(i, j, k) = img[k];
    }
  return out;
}

Product pre_compose(const Product& p, const LinearMap& m1, const LinearMap& m2) {
  Product out(p.field(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      const Vector img = product_apply(p, map_apply(m1, Vector::basis(p.field(), p.dim(), i)),
                                       map_apply(m2, Vector::basis(p.field(), p.dim(), j)));
      for (std::size_t k = 0; k < p.dim(); ++k) out.at(i, j, k) = img[k];
    }
  return out;
}

// Constructions generally leave the strict tags: a nontrivial twist breaks
// the Leibniz tag, and sums along arbitrary bimodules need not stay skew.
VarietyTag bracket_output_tag(VarietyTag in) {
  if (in == VarietyTag::Leibniz || in == VarietyTag::HomLie) return VarietyTag::HomLeibniz;
  return in;
}

// The multiplicativity flag is a claim, not a fact; outputs only claim it
// when it actually holds for them (and the input claimed it).
void set_honest_multiplicativity(AlgebraPresentation& q, bool input_claimed) {
  q.multiplicative_claimed = false;
  if (!input_claimed) return;
  EvalContext ctx = EvalContext::variety(q);
  for (const auto& name : Catalog::multiplicativity_identity_names(q.variety))
    if (!check_identity_named(name, ctx).passed()) return;
  q.multiplicative_claimed = true;
}

LinearMap block_diag(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace

SuiteReport check_morphism(const AlgebraPresentation& p, const LinearMap& f,
                           const std::string& label) {
  SuiteReport suite;
  if (f.rows() != p.dim || f.cols() != p.dim) {
    suite.append(structural_check(label + "_shape", false, "morphism must be square of the carrier dimension"));
    return suite;
  }
  for (const auto& [name, prod] : p.products) {
    CheckReport rep;
    rep.identity = label + "_preserves_" + name;
    rep.status = CheckStatus::Pass;
    for (std::size_t i = 0; i < p.dim && rep.status == CheckStatus::Pass; ++i)
      for (std::size_t j = 0; j < p.dim; ++j) {
        ++rep.assignments_evaluated;
        Vector lhs(p.field, p.dim);
        for (std::size_t k = 0; k < p.dim; ++k) lhs[k] = prod.at(i, j, k);
        lhs = map_apply(f, lhs);
        const Vector rhs = product_apply(prod, map_apply(f, Vector::basis(p.field, p.dim, i)),
                                         map_apply(f, Vector::basis(p.field, p.dim, j)));
        const Vector diff = lhs - rhs;
        if (!diff.is_zero()) {
          rep.status = CheckStatus::Fail;
          rep.assignment = {i + 1, j + 1};
          rep.residual = diff.to_strings();
          rep.residual_sort = "vector";
          break;
        }
      }
    suite.append(std::move(rep));
  }
  for (const auto& [name, t] : p.twists) {
    const bool ok = map_compose(f, t) == map_compose(t, f);
    suite.append(structural_check(label + "_commutes_" + name, ok,
                                  ok ? "" : "does not commute with twist '" + name + "'"));
  }
  return suite;
}

Constructed<AlgebraPresentation> yau_twist(const AlgebraPresentation& p, const TwistRecipe& r,
                                           bool allow_failed_preconditions) {
  p.validate();
  const bool bihom = variety_is_bihom(p.variety);
  Constructed<AlgebraPresentation> out;

  const std::size_t want = bihom ? 2 : 1;
  if (r.morphisms.size() != want)
    throw ShapeError("twist recipe needs " + std::to_string(want) + " morphism(s) for " +
                     variety_name(p.variety));
  for (std::size_t i = 0; i < r.morphisms.size(); ++i)
    out.preconditions.append(
        check_morphism(p, r.morphisms[i], "morphism" + std::to_string(i + 1)));
  if (r.morphisms.size() == 2) {
    const bool comm = map_compose(r.morphisms[0], r.morphisms[1]) ==
                      map_compose(r.morphisms[1], r.morphisms[0]);
    out.preconditions.append(structural_check("morphisms_commute", comm));
  }
  if (r.mode == TwistRecipe::Mode::YauFromUntwisted) {
    bool untw = true;
    for (const auto& [name, t] : p.twists) untw = untw && t.is_identity();
    out.preconditions.append(structural_check("untwisted_input", untw,
                                              untw ? "" : "input twists are not the identity"));
  }

  AlgebraPresentation q;
  q.dim = p.dim;
  q.field = p.field;
  q.variety = bracket_output_tag(p.variety);
  for (const auto& [name, prod] : p.products) {
    if (bihom)
      q.products.emplace(name, pre_compose(prod, r.morphisms[0], r.morphisms[1]));
    else
      q.products.emplace(name, post_compose(prod, r.morphisms[0]));
  }
  if (bihom) {
    q.twists.emplace("al", map_compose(p.twist("al"), r.morphisms[0]));
    q.twists.emplace("be", map_compose(p.twist("be"), r.morphisms[1]));
  } else {
    q.twists.emplace("al", map_compose(p.twist("al"), r.morphisms[0]));
  }
  set_honest_multiplicativity(q, p.multiplicative_claimed);
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  return finish(std::move(out), allow_failed_preconditions, "yau_twist");
}

Constructed<AlgebraPresentation> derived_algebra(const AlgebraPresentation& p, int type,
                                                 unsigned n, bool allow_failed_preconditions) {
  p.validate();
  if (type != 1 && type != 2) throw ShapeError("derived type must be 1 or 2");
  if (n == 0) throw ShapeError("derived index n must be positive");
  if (type == 2 && n > 20) throw ShapeError("derived type 2 exponent too large");

  Constructed<AlgebraPresentation> out;
  {
    EvalContext ctx = EvalContext::variety(p);
    for (const auto& name : Catalog::multiplicativity_identity_names(p.variety))
      out.preconditions.append(check_identity_named(name, ctx));
  }

  const std::uint64_t prod_exp = type == 1 ? n : (std::uint64_t{1} << n) - 1;
  const std::uint64_t twist_exp = type == 1 ? n + 1 : (std::uint64_t{1} << n);

  AlgebraPresentation q;
  q.dim = p.dim;
  q.field = p.field;
  q.variety = bracket_output_tag(p.variety);
  if (variety_is_bihom(p.variety)) {
    const LinearMap a1 = map_power(p.twist("al"), prod_exp);
    const LinearMap a2 = map_power(p.twist("be"), prod_exp);
    for (const auto& [name, prod] : p.products) q.products.emplace(name, pre_compose(prod, a1, a2));
    q.twists.emplace("al", map_power(p.twist("al"), twist_exp));
    q.twists.emplace("be", map_power(p.twist("be"), twist_exp));
  } else {
    const LinearMap ak = map_power(p.twist("al"), prod_exp);
    for (const auto& [name, prod] : p.products) q.products.emplace(name, post_compose(prod, ak));
    q.twists.emplace("al", map_power(p.twist("al"), twist_exp));
  }
  set_honest_multiplicativity(q, p.multiplicative_claimed);
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  return finish(std::move(out), allow_failed_preconditions, "derived_algebra");
}

Constructed<AlgebraPresentation> sub_adjacent(const AlgebraPresentation& p,
                                              bool allow_failed_preconditions) {
  p.validate();
  if (!variety_is_dendriform(p.variety))
    throw ShapeError("sub_adjacent requires a dendriform presentation");
  Constructed<AlgebraPresentation> out;
  {
    EvalContext ctx = EvalContext::variety(p);
    for (const auto& name : Catalog::variety_identity_names(p.variety))
      out.preconditions.append(check_identity_named(name, ctx));
  }

  AlgebraPresentation q;
  q.dim = p.dim;
  q.field = p.field;
  q.variety = variety_is_bihom(p.variety) ? VarietyTag::BiHomLeibniz : VarietyTag::HomLeibniz;
  q.products.emplace("br", p.product("prec") + p.product("succ"));
  q.twists = p.twists;
  set_honest_multiplicativity(q, p.multiplicative_claimed);
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  return finish(std::move(out), allow_failed_preconditions, "sub_adjacent");
}

namespace {

// Block product for the semidirect sum along one (l, r) action pair.
Product semidirect_product(const Product& p, const std::vector<LinearMap>& l,
                           const std::vector<LinearMap>& r, std::size_t n, std::size_t m) {
  Product out(p.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = p.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) out.at(i, n + j, n + k) = l[i].at(k, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) out.at(n + i, j, n + k) = r[j].at(k, i);
  return out;
}

}  // namespace

Constructed<AlgebraPresentation> semidirect_sum(const AlgebraPresentation& p,
                                                const ActionFamily& a,
                                                bool allow_failed_preconditions) {
  Constructed<AlgebraPresentation> out;
  out.preconditions = check_bimodule(p, a);

  const std::size_t n = p.dim, m = a.module_dim;
  AlgebraPresentation q;
  q.dim = n + m;
  q.field = p.field;
  q.variety = bracket_output_tag(p.variety);
  if (variety_is_dendriform(p.variety)) {
    q.products.emplace("prec", semidirect_product(p.product("prec"), a.action("lprec"),
                                                  a.action("rprec"), n, m));
    q.products.emplace("succ", semidirect_product(p.product("succ"), a.action("lsucc"),
                                                  a.action("rsucc"), n, m));
  } else {
    q.products.emplace("br",
                       semidirect_product(p.product("br"), a.action("l"), a.action("r"), n, m));
  }
  q.twists.emplace("al", block_diag(p.twist("al"), a.module_twist("beV")));
  if (variety_is_bihom(p.variety))
    q.twists.emplace("be", block_diag(p.twist("be"), a.module_twist("beV2")));
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  return finish(std::move(out), allow_failed_preconditions, "semidirect_sum");
}

namespace {

// Bowtie product on A (+) B along one pair of mutual (l, r) action families.
Product bowtie_product(const Product& pa, const Product& pb, const std::vector<LinearMap>& la,
                       const std::vector<LinearMap>& ra, const std::vector<LinearMap>& lb,
                       const std::vector<LinearMap>& rb, std::size_t n, std::size_t m) {
  Product out(pa.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = pa.at(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) out.at(n + i, n + j, n + k) = pb.at(i, j, k);
  // x . b: A-part r_B(b)x, B-part l_A(x)b
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.at(i, n + j, k) = rb[j].at(k, i);
      for (std::size_t k = 0; k < m; ++k) out.at(i, n + j, n + k) = la[i].at(k, j);
    }
  // a . y: A-part l_B(a)y, B-part r_A(y)a
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.at(n + i, j, k) = lb[i].at(k, j);
      for (std::size_t k = 0; k < m; ++k) out.at(n + i, j, n + k) = ra[j].at(k, i);
    }
  return out;
}

}  // namespace

Constructed<AlgebraPresentation> matched_sum(const AlgebraPresentation& pa,
                                             const AlgebraPresentation& pb,
                                             const ActionFamily& a_on_b,
                                             const ActionFamily& b_on_a,
                                             bool allow_failed_preconditions) {
  Constructed<AlgebraPresentation> out;
  const MatchedPairReport mp = check_matched_pair(pa, pb, a_on_b, b_on_a);
  out.preconditions = mp.flattened();

  const std::size_t n = pa.dim, m = pb.dim;
  AlgebraPresentation q;
  q.dim = n + m;
  q.field = pa.field;
  q.variety = bracket_output_tag(pa.variety);
  if (variety_is_dendriform(pa.variety)) {
    q.products.emplace("prec", bowtie_product(pa.product("prec"), pb.product("prec"),
                                              a_on_b.action("lprec"), a_on_b.action("rprec"),
                                              b_on_a.action("lprec"), b_on_a.action("rprec"), n, m));
    q.products.emplace("succ", bowtie_product(pa.product("succ"), pb.product("succ"),
                                              a_on_b.action("lsucc"), a_on_b.action("rsucc"),
                                              b_on_a.action("lsucc"), b_on_a.action("rsucc"), n, m));
  } else {
    q.products.emplace("br", bowtie_product(pa.product("br"), pb.product("br"), a_on_b.action("l"),
                                            a_on_b.action("r"), b_on_a.action("l"),
                                            b_on_a.action("r"), n, m));
  }
  q.twists.emplace("al", block_diag(pa.twist("al"), pb.twist("al")));
  if (variety_is_bihom(pa.variety))
    q.twists.emplace("be", block_diag(pa.twist("be"), pb.twist("be")));
  out.value = std::move(q);
  out.verification = check_variety(out.value);
  return finish(std::move(out), allow_failed_preconditions, "matched_sum");
}

ActionFamily regular_actions(const AlgebraPresentation& p) {
  p.validate();
  ActionFamily a;
  a.algebra_dim = p.dim;
  a.module_dim = p.dim;
  a.field = p.field;
  const auto add = [&](const std::string& lname, const std::string& rname, const Product& prod) {
    std::vector<LinearMap> ls, rs;
    for (std::size_t i = 0; i < p.dim; ++i) {
      ls.push_back(prod.left_matrix(i));
      rs.push_back(prod.right_matrix(i));
    }
    a.actions.emplace(lname, std::move(ls));
    a.actions.emplace(rname, std::move(rs));
  };
  if (variety_is_dendriform(p.variety)) {
    add("lprec", "rprec", p.product("prec"));
    add("lsucc", "rsucc", p.product("succ"));
  } else {
    add("l", "r", p.product("br"));
  }
  a.module_twists.emplace("beV", p.twist("al"));
  if (variety_is_bihom(p.variety)) a.module_twists.emplace("beV2", p.twist("be"));
  return a;
}

ActionFamily regular_actions_l_zero(const AlgebraPresentation& p) {
  if (variety_is_dendriform(p.variety))
    throw ShapeError("the (L, 0) family applies to bracket varieties");
  ActionFamily a = regular_actions(p);
  std::vector<LinearMap> zeros(p.dim, LinearMap::zero(p.field, p.dim, p.dim));
  a.actions["r"] = std::move(zeros);
  return a;
}

Constructed<ActionFamily> tensor_bimodule(const AlgebraPresentation& p,
                                          bool allow_failed_preconditions) {
  p.validate();
  if (variety_is_dendriform(p.variety) || variety_is_bihom(p.variety))
    throw ShapeError("tensor bimodule applies to single-twist bracket presentations");
  Constructed<ActionFamily> out;
  {
    EvalContext ctx = EvalContext::variety(p);
    for (const auto& name : Catalog::multiplicativity_identity_names(p.variety))
      out.preconditions.append(check_identity_named(name, ctx));
  }
  const auto& al = p.twist("al");
  const auto& br = p.product("br");
  ActionFamily a;
  a.algebra_dim = p.dim;
  a.module_dim = p.dim * p.dim;
  a.field = p.field;
  std::vector<LinearMap> ls, rs;
  for (std::size_t i = 0; i < p.dim; ++i) {
    ls.push_back(kronecker(al, br.left_matrix(i)));
    rs.push_back(kronecker(al, br.right_matrix(i)));
  }
  a.actions.emplace("l", std::move(ls));
  a.actions.emplace("r", std::move(rs));
  a.module_twists.emplace("beV", kronecker(al, al));
  out.value = std::move(a);
  out.verification = check_bimodule(p, out.value);
  return finish(std::move(out), allow_failed_preconditions, "tensor_bimodule");
}

Constructed<ActionFamily> pullback_actions(const LinearMap& f, const AlgebraPresentation& source,
                                           const AlgebraPresentation& target,
                                           bool allow_failed_preconditions) {
  source.validate();
  target.validate();
  if (variety_is_dendriform(source.variety) != variety_is_dendriform(target.variety) ||
      variety_is_bihom(source.variety) != variety_is_bihom(target.variety))
    throw ShapeError("pullback requires presentations of the same variety class");
  if (f.rows() != target.dim || f.cols() != source.dim)
    throw ShapeError("pullback morphism must map the source carrier to the target carrier");

  Constructed<ActionFamily> out;
  // f must be an algebra map intertwining the twists.
  for (const auto& [name, sprod] : source.products) {
    CheckReport rep;
    rep.identity = "pullback_preserves_" + name;
    rep.status = CheckStatus::Pass;
    const Product& tprod = target.product(name);
    for (std::size_t i = 0; i < source.dim && rep.status == CheckStatus::Pass; ++i)
      for (std::size_t j = 0; j < source.dim; ++j) {
        ++rep.assignments_evaluated;
        Vector col(source.field, source.dim);
        for (std::size_t k = 0; k < source.dim; ++k) col[k] = sprod.at(i, j, k);
        const Vector lhs = map_apply(f, col);
        const Vector rhs =
            product_apply(tprod, map_apply(f, Vector::basis(source.field, source.dim, i)),
                          map_apply(f, Vector::basis(source.field, source.dim, j)));
        const Vector diff = lhs - rhs;
        if (!diff.is_zero()) {
          rep.status = CheckStatus::Fail;
          rep.assignment = {i + 1, j + 1};
          rep.residual = diff.to_strings();
          rep.residual_sort = "vector";
          break;
        }
      }
    out.preconditions.append(std::move(rep));
  }
  for (const auto& name : variety_twist_names(source.variety)) {
    const bool ok = map_compose(f, source.twist(name)) == map_compose(target.twist(name), f);
    out.preconditions.append(structural_check("pullback_intertwines_" + name, ok));
  }

  ActionFamily a;
  a.algebra_dim = source.dim;
  a.module_dim = target.dim;
  a.field = source.field;
  const auto add = [&](const std::string& lname, const std::string& rname, const Product& tprod) {
    std::vector<LinearMap> ls, rs;
    for (std::size_t i = 0; i < source.dim; ++i) {
      LinearMap li(target.field, target.dim, target.dim), ri(target.field, target.dim, target.dim);
      for (std::size_t k = 0; k < target.dim; ++k) {
        if (f.at(k, i).is_zero()) continue;
        li = li + tprod.left_matrix(k).scaled(f.at(k, i));
        ri = ri + tprod.right_matrix(k).scaled(f.at(k, i));
      }
      ls.push_back(std::move(li));
      rs.push_back(std::move(ri));
    }
    a.actions.emplace(lname, std::move(ls));
    a.actions.emplace(rname, std::move(rs));
  };
  if (variety_is_dendriform(source.variety)) {
    add("lprec", "rprec", target.product("prec"));
    add("lsucc", "rsucc", target.product("succ"));
  } else {
    add("l", "r", target.product("br"));
  }
  a.module_twists.emplace("beV", target.twist("al"));
  if (variety_is_bihom(source.variety)) a.module_twists.emplace("beV2", target.twist("be"));
  out.value = std::move(a);
  out.verification = check_bimodule(source, out.value);
  return finish(std::move(out), allow_failed_preconditions, "pullback_actions");
}

Constructed<ActionFamily> twisted_bimodule(const AlgebraPresentation& p, const ActionFamily& a,
                                           const LinearMap& alpha_prime,
                                           const LinearMap& beta_prime,
                                           bool allow_failed_preconditions) {
  validate_pair(p, a);
  if (variety_is_bihom(p.variety))
    throw ShapeError("twisted_bimodule applies to single-twist presentations");
  Constructed<ActionFamily> out;
  out.preconditions = check_morphism(p, alpha_prime, "alpha_prime");
  {
    const auto& beV = a.module_twist("beV");
    const bool comm = map_compose(beta_prime, beV) == map_compose(beV, beta_prime);
    out.preconditions.append(structural_check("beta_prime_commutes_beV", comm));
  }
  for (const auto& [name, mats] : a.actions) {
    bool ok = true;
    for (std::size_t i = 0; i < p.dim && ok; ++i) {
      const LinearMap lhs = map_compose(beta_prime, mats[i]);
      const LinearMap rhs = map_compose(
          a.action_of(name, map_apply(alpha_prime, Vector::basis(p.field, p.dim, i))), beta_prime);
      ok = lhs == rhs;
    }
    out.preconditions.append(structural_check("beta_prime_intertwines_" + name, ok));
  }

  ActionFamily t;
  t.algebra_dim = a.algebra_dim;
  t.module_dim = a.module_dim;
  t.field = a.field;
  for (const auto& [name, mats] : a.actions) {
    std::vector<LinearMap> tw;
    for (std::size_t i = 0; i < p.dim; ++i)
      tw.push_back(map_compose(
          a.action_of(name, map_apply(alpha_prime, Vector::basis(p.field, p.dim, i))), beta_prime));
    t.actions.emplace(name, std::move(tw));
  }
  t.module_twists.emplace("beV", map_compose(a.module_twist("beV"), beta_prime));
  out.value = std::move(t);

  TwistRecipe recipe;
  recipe.mode = TwistRecipe::Mode::ComposeOntoTwisted;
  recipe.morphisms = {alpha_prime};
  const auto twisted = yau_twist(p, recipe, /*allow_failed_preconditions=*/true);
  out.verification = check_bimodule(twisted.value, out.value);
  return finish(std::move(out), allow_failed_preconditions, "twisted_bimodule");
}

Constructed<ActionFamily> power_bimodule(const AlgebraPresentation& p, const ActionFamily& a,
                                         int which, unsigned n, bool allow_failed_preconditions) {
  validate_pair(p, a);
  if (!variety_is_bihom(p.variety))
    throw ShapeError("power_bimodule applies to two-twist presentations");
  if (which != 1 && which != 2) throw ShapeError("power_bimodule twist selector must be 1 or 2");
  Constructed<ActionFamily> out;
  {
    EvalContext ctx = EvalContext::variety(p);
    for (const auto& name : Catalog::multiplicativity_identity_names(p.variety))
      out.preconditions.append(check_identity_named(name, ctx));
  }
  const LinearMap pw = map_power(p.twist(which == 1 ? "al" : "be"), n);
  ActionFamily t;
  t.algebra_dim = a.algebra_dim;
  t.module_dim = a.module_dim;
  t.field = a.field;
  for (const auto& [name, mats] : a.actions) {
    std::vector<LinearMap> tw;
    for (std::size_t i = 0; i < p.dim; ++i)
      tw.push_back(a.action_of(name, map_apply(pw, Vector::basis(p.field, p.dim, i))));
    t.actions.emplace(name, std::move(tw));
  }
  t.module_twists = a.module_twists;
  out.value = std::move(t);
  out.verification = check_bimodule(p, out.value);
  return finish(std::move(out), allow_failed_preconditions, "power_bimodule");
}

Constructed<AlgebraPresentation> omni_gl_example(std::size_t n, const LinearMap& beta) {
  if (n == 0) throw ShapeError("omni construction requires n >= 1");
  if (beta.rows() != n || beta.cols() != n) throw ShapeError("beta must be n x n");
  const FieldPtr f = beta.field();
  const LinearMap beta_inv = map_inverse(beta);  // throws on singular beta

  const std::size_t gl = n * n, dim = gl + n;
  const auto midx = [n](std::size_t i, std::size_t j) { return i * n + j; };

  // Untwisted products on gl(V) (+) V.
  Product prec(f, dim), succ(f, dim);
  const Scalar one = Scalar::one(f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (b == c) prec.at(midx(a, b), midx(c, d), midx(a, d)) = one;           // E_ab E_cd
          if (d == a) succ.at(midx(a, b), midx(c, d), midx(c, b)) = -one;          // -E_cd E_ab
        }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        if (b == k) prec.at(midx(a, b), gl + k, gl + a) = one;                     // E_ab e_k

  // delta(A + u) = beta A beta^{-1} + beta u, as a block matrix.
  LinearMap delta(f, dim, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      LinearMap e_ab(f, n, n);
      e_ab.at(a, b) = one;
      const LinearMap img = map_compose(map_compose(beta, e_ab), beta_inv);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) delta.at(midx(i, j), midx(a, b)) = img.at(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) delta.at(gl + i, gl + j) = beta.at(i, j);

  AlgebraPresentation base;
  base.dim = dim;
  base.field = f;
  base.variety = VarietyTag::HomLeibnizDendriform;
  base.multiplicative_claimed = true;
  base.products.emplace("prec", std::move(prec));
  base.products.emplace("succ", std::move(succ));
  base.twists.emplace("al", LinearMap::identity(f, dim));

  TwistRecipe recipe;
  recipe.mode = TwistRecipe::Mode::YauFromUntwisted;
  recipe.morphisms = {delta};
  return yau_twist(base, recipe);
}

}  // namespace homleib
