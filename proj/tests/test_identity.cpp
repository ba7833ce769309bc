#include "homleib/catalog.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace homleib;

namespace {

const std::string kRoot = HOMLEIB_SOURCE_DIR;

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("parsing the bracket identity source") {
  const Identity id = parse_identity(
      "hom_leibniz over (x:A, y:A, z:A): "
      "br(al(x), br(y, z)) - br(br(x, y), al(z)) - br(al(y), br(x, z)) = 0");
  CHECK(id.name == "hom_leibniz");
  REQUIRE(id.vars.size() == 3);
  CHECK(id.vars[0].name == "x");
  CHECK(id.vars[2].sort == Sort::Algebra);
  CHECK(id.result_sort == Sort::Algebra);
  REQUIRE(id.body->kind == Expr::Kind::Sum);
  CHECK(id.body->terms.size() == 3);
  CHECK(id.body->terms[0].first == 1);
  CHECK(id.body->terms[1].first == -1);
}

TEST_CASE("parsing skew symmetry") {
  const Identity id = parse_identity("skew over (x:A, y:A): br(x, y) + br(y, x) = 0");
  CHECK(id.vars.size() == 2);
  CHECK(id.body->terms.size() == 2);
}

TEST_CASE("sort errors are rejected") {
  // An action symbol needs its module argument list.
  CHECK_THROWS_AS(parse_identity("bad over (x:A, y:A): br(x, l(y)) = 0"), ParseError);
  // Mixing carrier sorts in one product.
  CHECK_THROWS_AS(parse_identity("bad over (x:A, v:V): br(x, v) = 0"), ParseError);
  // Mixing sorts in a sum.
  CHECK_THROWS_AS(parse_identity("bad over (x:A, v:V): x + v = 0"), ParseError);
  // Twist applied to the wrong sort.
  CHECK_THROWS_AS(parse_identity("bad over (v:V): al(v) = 0"), ParseError);
  // Undeclared variable.
  CHECK_THROWS_AS(parse_identity("bad over (x:A): br(x, w) = 0"), ParseError);
  // Duplicate variables.
  CHECK_THROWS_AS(parse_identity("bad over (x:A, x:A): br(x, x) = 0"), ParseError);
  // Tensor operators demand tensor arguments.
  CHECK_THROWS_AS(parse_identity("bad over (x:A): sigma(x) = 0"), ParseError);
}

TEST_CASE("tensor sort expressions parse") {
  const Identity id = parse_identity(
      "b1 over (x:A, y:A): kron(R(x), id)(Delta(al(y))) - "
      "sigma(kron(R(al(y)), id)(Delta(x))) = 0");
  CHECK(id.result_sort == Sort::Tensor);
}

TEST_CASE("catalog completeness against the frozen manifest") {
  std::set<std::string> expected;
  const auto add = [&expected](const std::vector<std::string>& names) {
    expected.insert(names.begin(), names.end());
  };
  add({"hom_leibniz", "skew_symmetry", "hom_jacobi", "involutivity_al"});
  add({"multiplicativity_al_br", "multiplicativity_al_prec", "multiplicativity_al_succ",
       "multiplicativity_be_br", "multiplicativity_be_prec", "multiplicativity_be_succ"});
  add(numbered("homleib_bimod_", 1, 5));
  add({"homleib_bimod_consequence"});
  add(numbered("matched_pair_", 1, 6));
  add({"matched_pair_6_alt"});
  add({"form_skew", "form_alpha_invariant", "form_cyclic_invariant"});
  add({"bialg_1", "bialg_2", "bialg_equiv_1", "bialg_equiv_2"});
  add(numbered("dendr_", 1, 3));
  add(numbered("dendr_bimod_", 1, 13));
  add(numbered("dendr_matched_", 1, 18));
  add({"bihom_twist_commute", "bihom_leibniz"});
  add(numbered("bihom_bimod_", 1, 7));
  add(numbered("bihom_matched_", 1, 6));
  add(numbered("bihom_dendr_", 1, 3));
  add(numbered("bihom_dendr_bimod_", 1, 17));
  add(numbered("bihom_dendr_matched_", 1, 18));
  add({"ooperator_hom", "ooperator_bihom", "ooperator_intertwine_al",
       "ooperator_intertwine_bihom_1", "ooperator_intertwine_bihom_2", "rota_baxter_hom",
       "rota_baxter_bihom", "rota_baxter_intertwine_al", "rota_baxter_intertwine_be"});

  const Catalog cat = Catalog::builtin();
  const auto names = cat.names();
  const std::set<std::string> actual(names.begin(), names.end());
  for (const auto& n : expected) {
    INFO("missing identity: " << n);
    CHECK(actual.count(n) == 1);
  }
  for (const auto& n : actual) {
    INFO("unexpected identity: " << n);
    CHECK(expected.count(n) == 1);
  }
  CHECK(cat.size() == expected.size());
}

TEST_CASE("embedded catalog equals the shipped text files") {
  namespace fs = std::filesystem;
  for (const auto& [name, contents] : builtin_catalog_files()) {
    const fs::path p = fs::path(kRoot) / "core" / "catalog" / name;
    INFO(name);
    REQUIRE(fs::exists(p));
    CHECK(read_file(p.string()) == contents);
  }
}

TEST_CASE("catalog can be swapped through a directory") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "homleib_catalog_test";
  fs::create_directories(dir);
  write_file((dir / "mini.ids").string(), "only over (x:A): br(x, x) = 0\n");
  const Catalog cat = Catalog::from_directory(dir.string());
  CHECK(cat.size() == 1);
  CHECK(cat.find("only") != nullptr);
  CHECK(cat.find("hom_leibniz") == nullptr);
}

TEST_CASE("variety and condition sets") {
  CHECK(Catalog::variety_identity_names(VarietyTag::HomLeibniz) ==
        std::vector<std::string>{"hom_leibniz"});
  CHECK(Catalog::variety_identity_names(VarietyTag::BiHomLeibnizDendriform).front() ==
        "bihom_twist_commute");
  CHECK(Catalog::bimodule_identity_names(VarietyTag::HomLeibnizDendriform).size() == 13);
  CHECK(Catalog::bimodule_identity_names(VarietyTag::BiHomLeibnizDendriform).size() == 17);
  CHECK(Catalog::matched_identity_names(VarietyTag::HomLeibniz).size() == 6);
  CHECK(Catalog::matched_identity_names(VarietyTag::HomLeibnizDendriform).size() == 18);

  const Catalog& cat = Catalog::active();
  for (auto tag : {VarietyTag::HomLeibniz, VarietyTag::HomLie, VarietyTag::Leibniz,
                   VarietyTag::HomLeibnizDendriform, VarietyTag::BiHomLeibniz,
                   VarietyTag::BiHomLeibnizDendriform}) {
    for (const auto& n : Catalog::variety_identity_names(tag)) CHECK(cat.find(n) != nullptr);
    for (const auto& n : Catalog::multiplicativity_identity_names(tag))
      CHECK(cat.find(n) != nullptr);
    for (const auto& n : Catalog::bimodule_identity_names(tag)) CHECK(cat.find(n) != nullptr);
    for (const auto& n : Catalog::matched_identity_names(tag)) CHECK(cat.find(n) != nullptr);
  }
}
