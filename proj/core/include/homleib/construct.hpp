#ifndef HOMLEIB_CONSTRUCT_HPP
#define HOMLEIB_CONSTRUCT_HPP

#include "homleib/engine.hpp"

namespace homleib {

/// A required hypothesis of a constructive theorem does not hold.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& msg, SuiteReport report)
      : std::runtime_error(msg), report_(std::move(report)) {}
  const SuiteReport& report() const { return report_; }

 private:
  SuiteReport report_;
};

/// Post-verification of a constructed object failed although the
/// preconditions held; indicates a defect in the construction formulas.
class InternalVerificationError : public std::runtime_error {
 public:
  InternalVerificationError(const std::string& msg, SuiteReport report)
      : std::runtime_error(msg), report_(std::move(report)) {}
  const SuiteReport& report() const { return report_; }

 private:
  SuiteReport report_;
};

/// Every constructor re-verifies its output. `preconditions` holds the
/// hypothesis checks (empty entries for purely structural hypotheses);
/// `verification` the post-check of the output. When hypotheses fail and the
/// caller forced construction anyway, `forced` is set.
template <typename T>
struct Constructed {
  SuiteReport preconditions;
  T value{};
  SuiteReport verification;
  bool forced = false;

  bool ok() const { return preconditions.all_passed() && verification.all_passed(); }
};

struct TwistRecipe {
  enum class Mode { YauFromUntwisted, ComposeOntoTwisted };
  Mode mode = Mode::ComposeOntoTwisted;
  std::vector<LinearMap> morphisms;  // one for single-twist, two for two-twist
};

/// Checks that f preserves every product of p and commutes with its twists.
SuiteReport check_morphism(const AlgebraPresentation& p, const LinearMap& f,
                           const std::string& label = "morphism");

/// Twist deformation: single-twist inputs get products post-composed with the
/// morphism, two-twist inputs get products pre-composed argumentwise; the
/// twist maps compose onto the existing ones.
Constructed<AlgebraPresentation> yau_twist(const AlgebraPresentation& p, const TwistRecipe& r,
                                           bool allow_failed_preconditions = false);

/// Derived structure of type 1 (exponents n, n+1) or type 2 (2^n - 1, 2^n).
Constructed<AlgebraPresentation> derived_algebra(const AlgebraPresentation& p, int type,
                                                 unsigned n,
                                                 bool allow_failed_preconditions = false);

/// Sum of the two dendriform products; the variety drops to the bracket
/// counterpart.
Constructed<AlgebraPresentation> sub_adjacent(const AlgebraPresentation& p,
                                              bool allow_failed_preconditions = false);

/// Semidirect sum A (+) V along a bimodule.
Constructed<AlgebraPresentation> semidirect_sum(const AlgebraPresentation& p,
                                                const ActionFamily& a,
                                                bool allow_failed_preconditions = false);

/// Bowtie sum A (+) B along a matched pair.
Constructed<AlgebraPresentation> matched_sum(const AlgebraPresentation& pa,
                                             const AlgebraPresentation& pb,
                                             const ActionFamily& a_on_b,
                                             const ActionFamily& b_on_a,
                                             bool allow_failed_preconditions = false);

/// Left/right multiplications of the presentation acting on itself.
ActionFamily regular_actions(const AlgebraPresentation& p);
/// Same with the left actions replaced by zero or the right by zero.
ActionFamily regular_actions_l_zero(const AlgebraPresentation& p);

/// (alpha (x) L, alpha (x) R) on A (x) A; requires a multiplicative
/// single-twist bracket presentation.
Constructed<ActionFamily> tensor_bimodule(const AlgebraPresentation& p,
                                          bool allow_failed_preconditions = false);

/// Pulls the target's regular actions back along a morphism f: source -> target.
Constructed<ActionFamily> pullback_actions(const LinearMap& f, const AlgebraPresentation& source,
                                           const AlgebraPresentation& target,
                                           bool allow_failed_preconditions = false);

/// Twists a bimodule by an algebra morphism and a compatible module map; the
/// result is a bimodule of the compose-mode twist of p by alpha_prime.
Constructed<ActionFamily> twisted_bimodule(const AlgebraPresentation& p, const ActionFamily& a,
                                           const LinearMap& alpha_prime,
                                           const LinearMap& beta_prime,
                                           bool allow_failed_preconditions = false);

/// Pre-composes a two-twist bimodule's actions with the n-th power of one of
/// the algebra twists (which = 1 or 2); a bimodule of the same presentation.
Constructed<ActionFamily> power_bimodule(const AlgebraPresentation& p, const ActionFamily& a,
                                         int which, unsigned n,
                                         bool allow_failed_preconditions = false);

/// The gl(V) (+) V dendriform structure twisted by conjugation with beta:
/// on pure matrices (A+u) < (B+v) = AB + Av and (A+u) > (B+v) = -BA, then the
/// whole structure is twist-deformed by delta(A+u) = beta A beta^{-1} + beta u.
/// beta must be invertible. Dimension n^2 + n.
Constructed<AlgebraPresentation> omni_gl_example(std::size_t n, const LinearMap& beta);

}  // namespace homleib

#endif
