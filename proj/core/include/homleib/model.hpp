#ifndef HOMLEIB_MODEL_HPP
#define HOMLEIB_MODEL_HPP

#include "homleib/linalg.hpp"

#include <map>
#include <optional>
#include <string>

namespace homleib {

enum class VarietyTag {
  HomLeibniz,
  HomLie,
  Leibniz,
  HomLeibnizDendriform,
  BiHomLeibniz,
  BiHomLeibnizDendriform,
};

std::string variety_name(VarietyTag tag);
VarietyTag variety_from_name(const std::string& name);

bool variety_is_dendriform(VarietyTag tag);
bool variety_is_bihom(VarietyTag tag);

/// Product names required by a tag: {"br"} or {"prec","succ"}.
std::vector<std::string> variety_product_names(VarietyTag tag);
/// Twist names required by a tag: {"al"} or {"al","be"}.
std::vector<std::string> variety_twist_names(VarietyTag tag);

/// An algebra given by structure constants and twist matrices over an exact
/// coefficient field. Immutable after load.
struct AlgebraPresentation {
  std::size_t dim = 0;
  FieldPtr field;
  VarietyTag variety = VarietyTag::HomLeibniz;
  std::map<std::string, Product> products;
  std::map<std::string, LinearMap> twists;
  bool multiplicative_claimed = false;
  std::optional<LinearMap> form;       // dim x dim Gram matrix
  std::optional<LinearMap> cobracket;  // dim^2 x dim; column j = Delta(e_j), rows flatten e_i(x)e_j

  const Product& product(const std::string& name) const;
  const LinearMap& twist(const std::string& name) const;
  bool has_product(const std::string& name) const { return products.count(name) != 0; }

  /// Sum of all products; for dendriform tags this is the sub-adjacent
  /// bracket, for bracket tags it is the bracket itself.
  Product bracket_sum() const;

  void validate() const;  // shape checks; throws ShapeError
};

/// A bimodule presentation: per-basis-element action matrices plus module
/// twist maps. Action names: l, r (bracket varieties) or lprec, rprec, lsucc,
/// rsucc (dendriform varieties). Module twists: beV (and beV2 for BiHom).
struct ActionFamily {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  FieldPtr field;
  std::map<std::string, std::vector<LinearMap>> actions;
  std::map<std::string, LinearMap> module_twists;

  bool has_action(const std::string& name) const { return actions.count(name) != 0; }
  const std::vector<LinearMap>& action(const std::string& name) const;
  const LinearMap& module_twist(const std::string& name) const;

  /// Action of an arbitrary algebra element (linear combination of the
  /// per-basis matrices).
  LinearMap action_of(const std::string& name, const Vector& algebra_elem) const;

  void validate() const;
};

// --- (de)serialization -----------------------------------------------------

FieldPtr field_from_json_text(const std::string& text);

AlgebraPresentation load_presentation(const std::string& document);
std::string save_presentation(const AlgebraPresentation& p);
AlgebraPresentation load_presentation_file(const std::string& path);

ActionFamily load_action(const std::string& document);
std::string save_action(const ActionFamily& a);
ActionFamily load_action_file(const std::string& path);

LinearMap load_map(const std::string& document);
std::string save_map(const LinearMap& m);
LinearMap load_map_file(const std::string& path);

/// Checks that an action family fits a presentation: variety-appropriate
/// action names, matching algebra dimension and field. Throws ShapeError.
void validate_pair(const AlgebraPresentation& p, const ActionFamily& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace homleib

#endif
