#include "homleib/model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace homleib {

using json = nlohmann::ordered_json;

std::string variety_name(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::HomLeibniz: return "HomLeibniz";
    case VarietyTag::HomLie: return "HomLie";
    case VarietyTag::Leibniz: return "Leibniz";
    case VarietyTag::HomLeibnizDendriform: return "HomLeibnizDendriform";
    case VarietyTag::BiHomLeibniz: return "BiHomLeibniz";
    case VarietyTag::BiHomLeibnizDendriform: return "BiHomLeibnizDendriform";
  }
  return "?";
}

VarietyTag variety_from_name(const std::string& name) {
  for (auto tag : {VarietyTag::HomLeibniz, VarietyTag::HomLie, VarietyTag::Leibniz,
                   VarietyTag::HomLeibnizDendriform, VarietyTag::BiHomLeibniz,
                   VarietyTag::BiHomLeibnizDendriform}) {
    if (variety_name(tag) == name) return tag;
  }
  throw ShapeError("unknown variety '" + name + "'");
}

bool variety_is_dendriform(VarietyTag tag) {
  return tag == VarietyTag::HomLeibnizDendriform || tag == VarietyTag::BiHomLeibnizDendriform;
}

bool variety_is_bihom(VarietyTag tag) {
  return tag == VarietyTag::BiHomLeibniz || tag == VarietyTag::BiHomLeibnizDendriform;
}

std::vector<std::string> variety_product_names(VarietyTag tag) {
  if (variety_is_dendriform(tag)) return {"prec", "succ"};
  return {"br"};
}

std::vector<std::string> variety_twist_names(VarietyTag tag) {
  if (variety_is_bihom(tag)) return {"al", "be"};
  return {"al"};
}

const Product& AlgebraPresentation::product(const std::string& name) const {
  auto it = products.find(name);
  if (it == products.end()) throw ShapeError("presentation has no product '" + name + "'");
  return it->second;
}

const LinearMap& AlgebraPresentation::twist(const std::string& name) const {
  auto it = twists.find(name);
  if (it == twists.end()) throw ShapeError("presentation has no twist '" + name + "'");
  return it->second;
}

Product AlgebraPresentation::bracket_sum() const {
  Product sum(field, dim);
  for (const auto& [name, p] : products) sum = sum + p;
  return sum;
}

void AlgebraPresentation::validate() const {
  if (dim == 0) throw ShapeError("dimension must be positive");
  if (!field) throw ShapeError("missing field");
  for (const auto& name : variety_product_names(variety))
    if (!products.count(name))
      throw ShapeError("variety " + variety_name(variety) + " requires product '" + name + "'");
  for (const auto& name : variety_twist_names(variety))
    if (!twists.count(name))
      throw ShapeError("variety " + variety_name(variety) + " requires twist '" + name + "'");
  for (const auto& [name, p] : products) {
    if (p.dim() != dim) throw ShapeError("product '" + name + "' has wrong dimension");
  }
  for (const auto& [name, t] : twists) {
    if (t.rows() != dim || t.cols() != dim)
      throw ShapeError("twist '" + name + "' must be a " + std::to_string(dim) + "x" +
                       std::to_string(dim) + " matrix");
  }
  // Twist commutation for the two-twist varieties is decided by the
  // bihom_twist_commute identity in the variety check rather than rejected at
  // load time; several bundled worked examples carry defective twists whose
  // failures the goldens record.
  if (variety == VarietyTag::Leibniz && !twist("al").is_identity())
    throw ShapeError("variety Leibniz requires the identity twist");
  if (form && (form->rows() != dim || form->cols() != dim))
    throw ShapeError("form must be a square matrix of the carrier dimension");
  if (cobracket && (cobracket->rows() != dim * dim || cobracket->cols() != dim))
    throw ShapeError("cobracket must be a dim^2 x dim matrix");
}

const std::vector<LinearMap>& ActionFamily::action(const std::string& name) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw ShapeError("action family has no action '" + name + "'");
  return it->second;
}

const LinearMap& ActionFamily::module_twist(const std::string& name) const {
  auto it = module_twists.find(name);
  if (it == module_twists.end()) throw ShapeError("action family has no module twist '" + name + "'");
  return it->second;
}

LinearMap ActionFamily::action_of(const std::string& name, const Vector& algebra_elem) const {
  const auto& mats = action(name);
  if (algebra_elem.dim() != algebra_dim) throw ShapeError("action argument dimension mismatch");
  LinearMap acc(field, module_dim, module_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i) {
    if (algebra_elem[i].is_zero()) continue;
    acc = acc + mats[i].scaled(algebra_elem[i]);
  }
  return acc;
}

void ActionFamily::validate() const {
  if (algebra_dim == 0 || module_dim == 0) throw ShapeError("dimensions must be positive");
  if (!field) throw ShapeError("missing field");
  const bool dendr = actions.count("lprec") != 0;
  const std::vector<std::string> expected =
      dendr ? std::vector<std::string>{"lprec", "rprec", "lsucc", "rsucc"}
            : std::vector<std::string>{"l", "r"};
  for (const auto& n : expected)
    if (!actions.count(n)) throw ShapeError("action family requires action '" + n + "'");
  for (const auto& [name, mats] : actions) {
    if (mats.size() != algebra_dim)
      throw ShapeError("action '" + name + "' must list one matrix per algebra basis element");
    for (const auto& m : mats)
      if (m.rows() != module_dim || m.cols() != module_dim)
        throw ShapeError("action '" + name + "' matrices must be module_dim x module_dim");
  }
  if (!module_twists.count("beV")) throw ShapeError("action family requires module twist 'beV'");
  for (const auto& [name, t] : module_twists)
    if (t.rows() != module_dim || t.cols() != module_dim)
      throw ShapeError("module twist '" + name + "' has wrong shape");
}

void validate_pair(const AlgebraPresentation& p, const ActionFamily& a) {
  a.validate();
  if (a.algebra_dim != p.dim) throw ShapeError("action family algebra dimension mismatch");
  if (*a.field != *p.field) throw ShapeError("action family field mismatch");
  const bool dendr_actions = a.actions.count("lprec") != 0;
  if (dendr_actions != variety_is_dendriform(p.variety))
    throw ShapeError("action names do not match the presentation variety");
  if (variety_is_bihom(p.variety) && !a.module_twists.count("beV2"))
    throw ShapeError("BiHom varieties require module twist 'beV2'");
}

// --------------------------------------------------------------- JSON I/O

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what(),
                     static_cast<long>(e.byte));
  }
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ShapeError("field must be an object with a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return make_field(FieldSpec::rationals());
  if (kind == "quadratic") {
    if (!j.contains("d")) throw ShapeError("quadratic field requires 'd'");
    return make_field(FieldSpec::quadratic(j.at("d").get<long long>()));
  }
  if (kind == "rational_functions") {
    if (!j.contains("params")) throw ShapeError("rational_functions field requires 'params'");
    return make_field(FieldSpec::rational_functions(j.at("params").get<std::vector<std::string>>()));
  }
  throw ShapeError("unknown field kind '" + kind + "'");
}

json field_to_json(const FieldSpec& f) {
  json j;
  switch (f.kind()) {
    case FieldKind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::Quadratic:
      j["kind"] = "quadratic";
      j["d"] = f.d();
      break;
    case FieldKind::RationalFunctions:
      j["kind"] = "rational_functions";
      j["params"] = f.params();
      break;
  }
  return j;
}

LinearMap matrix_from_json(const json& j, const FieldPtr& f, std::size_t rows, std::size_t cols,
                           const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw ShapeError(what + " must have " + std::to_string(rows) + " rows");
  LinearMap m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ShapeError(what + " row " + std::to_string(i + 1) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = scalar_parse(row[k].get<std::string>(), f);
  }
  return m;
}

json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Product product_from_json(const json& j, const FieldPtr& f, std::size_t dim,
                          const std::string& name) {
  if (!j.is_array()) throw ShapeError("product '" + name + "' must be a list of [i,j,k,coeff]");
  Product p(f, dim);
  for (const auto& quad : j) {
    if (!quad.is_array() || quad.size() != 4)
      throw ShapeError("product '" + name + "' entries must be [i,j,k,coeff] quadruples");
    const auto i = quad[0].get<std::size_t>(), jj = quad[1].get<std::size_t>(),
               k = quad[2].get<std::size_t>();
    if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
      throw ShapeError("product '" + name + "' has an index out of range (indices are 1-based)");
    p.at(i - 1, jj - 1, k - 1) =
        p.at(i - 1, jj - 1, k - 1) + scalar_parse(quad[3].get<std::string>(), f);
  }
  return p;
}

json product_to_json(const Product& p) {
  json entries = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k) {
        if (p.at(i, j, k).is_zero()) continue;
        entries.push_back(json::array({i + 1, j + 1, k + 1, p.at(i, j, k).to_string()}));
      }
  return entries;
}

}  // namespace

FieldPtr field_from_json_text(const std::string& text) {
  return field_from_json(parse_json(text));
}

AlgebraPresentation load_presentation(const std::string& document) {
  const json j = parse_json(document);
  AlgebraPresentation p;
  try {
    if (!j.contains("dim")) throw ShapeError("missing 'dim'");
    p.dim = j.at("dim").get<std::size_t>();
    if (p.dim == 0) throw ShapeError("'dim' must be positive");
    if (!j.contains("field")) throw ShapeError("missing 'field'");
    p.field = field_from_json(j.at("field"));
    if (!j.contains("variety")) throw ShapeError("missing 'variety'");
    p.variety = variety_from_name(j.at("variety").get<std::string>());
    p.multiplicative_claimed = j.value("multiplicative_claimed", false);
    if (!j.contains("products") || !j.at("products").is_object())
      throw ShapeError("missing 'products' map");
    for (const auto& [name, val] : j.at("products").items())
      p.products.emplace(name, product_from_json(val, p.field, p.dim, name));
    if (!j.contains("twists") || !j.at("twists").is_object())
      throw ShapeError("missing 'twists' map");
    for (const auto& [name, val] : j.at("twists").items())
      p.twists.emplace(name, matrix_from_json(val, p.field, p.dim, p.dim, "twist '" + name + "'"));
    if (j.contains("form"))
      p.form = matrix_from_json(j.at("form"), p.field, p.dim, p.dim, "form");
    if (j.contains("cobracket"))
      p.cobracket =
          matrix_from_json(j.at("cobracket"), p.field, p.dim * p.dim, p.dim, "cobracket");
    p.validate();
  } catch (const ShapeError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed presentation document: ") + e.what());
  }
  return p;
}

std::string save_presentation(const AlgebraPresentation& p) {
  json j;
  j["dim"] = p.dim;
  j["field"] = field_to_json(*p.field);
  j["variety"] = variety_name(p.variety);
  if (p.multiplicative_claimed) j["multiplicative_claimed"] = true;
  json prods;
  for (const auto& [name, prod] : p.products) prods[name] = product_to_json(prod);
  j["products"] = std::move(prods);
  json tws;
  for (const auto& [name, t] : p.twists) tws[name] = matrix_to_json(t);
  j["twists"] = std::move(tws);
  if (p.form) j["form"] = matrix_to_json(*p.form);
  if (p.cobracket) j["cobracket"] = matrix_to_json(*p.cobracket);
  return j.dump(2) + "\n";
}

ActionFamily load_action(const std::string& document) {
  const json j = parse_json(document);
  ActionFamily a;
  try {
    if (!j.contains("algebra_dim") || !j.contains("module_dim"))
      throw ShapeError("action document requires 'algebra_dim' and 'module_dim'");
    a.algebra_dim = j.at("algebra_dim").get<std::size_t>();
    a.module_dim = j.at("module_dim").get<std::size_t>();
    if (!j.contains("field")) throw ShapeError("missing 'field'");
    a.field = field_from_json(j.at("field"));
    if (!j.contains("actions") || !j.at("actions").is_object())
      throw ShapeError("missing 'actions' map");
    for (const auto& [name, val] : j.at("actions").items()) {
      if (!val.is_array() || val.size() != a.algebra_dim)
        throw ShapeError("action '" + name + "' must list one matrix per algebra basis element");
      std::vector<LinearMap> mats;
      mats.reserve(a.algebra_dim);
      for (std::size_t i = 0; i < a.algebra_dim; ++i)
        mats.push_back(matrix_from_json(val[i], a.field, a.module_dim, a.module_dim,
                                        "action '" + name + "' matrix " + std::to_string(i + 1)));
      a.actions.emplace(name, std::move(mats));
    }
    if (!j.contains("module_twists") || !j.at("module_twists").is_object())
      throw ShapeError("missing 'module_twists' map");
    for (const auto& [name, val] : j.at("module_twists").items())
      a.module_twists.emplace(name, matrix_from_json(val, a.field, a.module_dim, a.module_dim,
                                                     "module twist '" + name + "'"));
    a.validate();
  } catch (const ShapeError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed action document: ") + e.what());
  }
  return a;
}

std::string save_action(const ActionFamily& a) {
  json j;
  j["algebra_dim"] = a.algebra_dim;
  j["module_dim"] = a.module_dim;
  j["field"] = field_to_json(*a.field);
  json acts;
  for (const auto& [name, mats] : a.actions) {
    json lst = json::array();
    for (const auto& m : mats) lst.push_back(matrix_to_json(m));
    acts[name] = std::move(lst);
  }
  j["actions"] = std::move(acts);
  json tws;
  for (const auto& [name, t] : a.module_twists) tws[name] = matrix_to_json(t);
  j["module_twists"] = std::move(tws);
  return j.dump(2) + "\n";
}

LinearMap load_map(const std::string& document) {
  const json j = parse_json(document);
  try {
    if (!j.contains("field") || !j.contains("matrix"))
      throw ShapeError("map document requires 'field' and 'matrix'");
    const FieldPtr f = field_from_json(j.at("field"));
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) throw ShapeError("'matrix' must be a nonempty array");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
    return matrix_from_json(rows, f, r, c, "matrix");
  } catch (const ShapeError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed map document: ") + e.what());
  }
}

std::string save_map(const LinearMap& m) {
  json j;
  j["field"] = field_to_json(*m.field());
  j["matrix"] = matrix_to_json(m);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << contents;
}

AlgebraPresentation load_presentation_file(const std::string& path) {
  return load_presentation(read_file(path));
}
ActionFamily load_action_file(const std::string& path) { return load_action(read_file(path)); }
LinearMap load_map_file(const std::string& path) { return load_map(read_file(path)); }

}  // namespace homleib
