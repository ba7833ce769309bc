#ifndef HOMLEIB_DUALITY_HPP
#define HOMLEIB_DUALITY_HPP

#include "homleib/construct.hpp"

namespace homleib {

/// Dual-action combinations. The first four take a bracket bimodule (l, r);
/// the Sum/SuccMinus/SuccPrec modes take a dendriform bimodule and produce a
/// bracket bimodule of the sub-adjacent algebra; the DendrShaped variants
/// wrap the same combinations as (0, l, r, 0) dendriform bimodules.
enum class DualMode {
  LR,               // (l*, r*)
  LMinusLR,         // (l*, -l* - r*)
  LZero,            // (l*, 0)
  ZeroR,            // (0, r*)
  SumSum,           // (l*prec + l*succ, r*prec + r*succ)
  SuccMinus,        // (l*succ, -l*succ - r*prec)
  SuccPrec,         // (l*succ, r*prec)
  DendrShapedSumSum,
  DendrShapedSuccMinus,
  DendrShapedSuccPrec,
};

std::string dual_mode_name(DualMode m);
DualMode dual_mode_from_name(const std::string& name);

/// Signed duals (-transpose) of the given actions combined per mode; the
/// module twist dualizes likewise. Requires a multiplicative presentation
/// with involutive twist. The verification checks the result against the
/// bracket presentation (sub-adjacent when p is dendriform).
Constructed<ActionFamily> dual_actions(const AlgebraPresentation& p, const ActionFamily& a,
                                       DualMode mode, bool allow_failed_preconditions = false);

/// The two-block pairing form on A (+) A*.
LinearMap standard_form(const FieldPtr& field, std::size_t dim_a);

struct FormReport {
  CheckStatus nondegenerate = CheckStatus::Pass;
  bool parametric = false;  // determinant classified over the parameter field
  std::string determinant;  // canonical string when printable
  SuiteReport identities;   // form_skew, form_alpha_invariant, form_cyclic_invariant
  bool skew() const;
  bool alpha_invariant() const;
  bool cyclic_invariant() const;
};

FormReport check_form(const AlgebraPresentation& p, const LinearMap& form);

struct ManinReport {
  FormReport form;
  bool split_partitions = false;
  bool subalgebra_1 = false, subalgebra_2 = false;
  bool isotropic_1 = false, isotropic_2 = false;
  bool twist_preserves_split = false;
  SuiteReport variety;
  bool passed() const;
};

/// Verifies the Manin decomposition: the form is nondegenerate, skew and
/// invariant, both index sets span isotropic subalgebras, and the twist
/// preserves the split. Indices are 1-based.
ManinReport manin_check(const AlgebraPresentation& p, const LinearMap& form,
                        const std::vector<std::size_t>& split1,
                        const std::vector<std::size_t>& split2);

/// The dual-space presentation (A*, dual product, -alpha^T).
AlgebraPresentation dual_presentation(const AlgebraPresentation& p, const Product& dual_product);

/// Cobracket matrix read off a dual product's structure constants.
LinearMap cobracket_from_dual(const Product& dual_product);

/// Runs the two cobracket conditions; requires an involutive multiplicative
/// presentation carrying a cobracket.
Constructed<SuiteReport> check_bialgebra(const AlgebraPresentation& p);

struct EquivReport {
  SuiteReport preconditions;
  SuiteReport matched_coupling;  // the six coupling conditions with dual actions
  SuiteReport cobracket;         // bialg_1, bialg_2
  bool matched_verdict = false;
  bool cobracket_verdict = false;
  bool agree = false;
};

/// Independently decides the coupling conditions (with the signed dual
/// actions both ways) and the cobracket conditions, and reports whether the
/// verdicts agree.
EquivReport bialgebra_matchedpair_equiv(const AlgebraPresentation& p,
                                        const AlgebraPresentation& p_dual);

/// The two raw signed-dual action families used by the equivalence check:
/// actions of A on A* (duals of bracket multiplications) and of A* on A.
std::pair<ActionFamily, ActionFamily> dual_pair_actions(const AlgebraPresentation& p,
                                                        const AlgebraPresentation& p_dual);

struct OOperatorData {
  enum class Convention { Standard, Swapped };
  LinearMap t;  // module -> algebra
  Convention convention = Convention::Standard;
  bool rota_baxter = false;  // use the uncrossed intertwining and regular actions
};

/// Verifies the intertwining relations and the operator identity on all basis
/// pairs. In Rota-Baxter mode the module is the carrier with regular actions.
SuiteReport check_ooperator(const AlgebraPresentation& p, const ActionFamily& a,
                            const OOperatorData& data);

/// Module-side dendriform structure induced by an operator; requires
/// check_ooperator to pass. The result carries the module twists.
Constructed<AlgebraPresentation> induce_dendriform(const AlgebraPresentation& p,
                                                   const ActionFamily& a, const OOperatorData& data,
                                                   bool allow_failed_preconditions = false);

/// Carrier-side dendriform structure from an invertible operator:
/// x > y = T(l(x)T^{-1}(y)), x < y = T(r(y)T^{-1}(x)).
Constructed<AlgebraPresentation> dendriform_from_invertible(const AlgebraPresentation& p,
                                                            const ActionFamily& a,
                                                            const OOperatorData& data,
                                                            bool allow_failed_preconditions = false);

/// Compatible dendriform structure from a nondegenerate skew cyclic-invariant
/// form on an involutive bracket presentation, by exact linear solves.
Constructed<AlgebraPresentation> dendriform_from_form(const AlgebraPresentation& p,
                                                      const LinearMap& omega,
                                                      bool allow_failed_preconditions = false);

}  // namespace homleib

#endif
