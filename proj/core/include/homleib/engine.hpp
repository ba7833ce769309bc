#ifndef HOMLEIB_ENGINE_HPP
#define HOMLEIB_ENGINE_HPP

#include "homleib/catalog.hpp"
#include "homleib/identity.hpp"
#include "homleib/model.hpp"
#include "homleib/report.hpp"

#include <variant>

namespace homleib {

/// Everything an identity may reference. A plain variety check binds only
/// `A`; bimodule checks add `act_a_on_m`; matched-pair checks bind a second
/// algebra as the module sort plus both action directions; operator checks
/// bind `op_t`.
struct EvalContext {
  const AlgebraPresentation* A = nullptr;
  const AlgebraPresentation* B = nullptr;         // second algebra (= module sort)
  const ActionFamily* act_a_on_m = nullptr;       // actions of A on the module
  const ActionFamily* act_m_on_a = nullptr;       // actions of the module algebra on A
  const LinearMap* op_t = nullptr;                // T : module -> algebra
  std::size_t module_dim = 0;                     // dimension of sort V

  static EvalContext variety(const AlgebraPresentation& p);
  static EvalContext bimodule(const AlgebraPresentation& p, const ActionFamily& a);
  static EvalContext matched(const AlgebraPresentation& pa, const AlgebraPresentation& pb,
                             const ActionFamily& a_on_b, const ActionFamily& b_on_a);
  static EvalContext ooperator(const AlgebraPresentation& p, const ActionFamily& a,
                               const LinearMap& t);

  const FieldPtr& field() const;
  std::size_t sort_dim(Sort s) const;
};

using Value = std::variant<Vector, Tensor2Element, Scalar>;

/// Exact residual of `id` at one basis assignment (0-based indices, one per
/// declared variable).
Value evaluate_identity(const Identity& id, const EvalContext& ctx,
                        const std::vector<std::size_t>& assignment);

/// Evaluates `id` at an arbitrary (not necessarily basis) assignment of
/// vectors to variables. Used by the multilinearity spot check.
Value evaluate_identity_vectors(const Identity& id, const EvalContext& ctx,
                                const std::vector<Vector>& values);

/// Brute-force check over all basis assignments, lexicographic order. The
/// first failing assignment is reported; `jobs` only affects wall time.
CheckReport check_identity(const Identity& id, const EvalContext& ctx, unsigned jobs = 1);
CheckReport check_identity_named(const std::string& name, const EvalContext& ctx,
                                 unsigned jobs = 1);

/// Runs the variety's axiom set (plus multiplicativity when claimed).
SuiteReport check_variety(const AlgebraPresentation& p, unsigned jobs = 1);

/// Runs the variety's bimodule condition set against the family.
SuiteReport check_bimodule(const AlgebraPresentation& p, const ActionFamily& a, unsigned jobs = 1);

struct MatchedPairReport {
  SuiteReport bimodule_a;  // conditions of (aA, module = B)
  SuiteReport bimodule_b;
  SuiteReport coupling;
  bool bimodules_passed() const {
    return bimodule_a.all_passed() && bimodule_b.all_passed();
  }
  bool all_passed() const { return bimodules_passed() && coupling.all_passed(); }
  SuiteReport flattened(bool prefix_bimodules = true) const;
};

MatchedPairReport check_matched_pair(const AlgebraPresentation& pa, const AlgebraPresentation& pb,
                                     const ActionFamily& a_on_b, const ActionFamily& b_on_a,
                                     unsigned jobs = 1);

/// Spot-checks that basis verdicts extend multilinearly: evaluates the
/// identity at `samples` random rational assignments and reports any nonzero
/// residual for an identity whose basis check passed (and vice versa).
CheckReport fuzz_multilinearity(const Identity& id, const EvalContext& ctx, unsigned samples,
                                std::uint64_t seed);

}  // namespace homleib

#endif
