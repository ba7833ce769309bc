#include "homleib/corpus.hpp"

#include "homleib/duality.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>

namespace homleib {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::vector<CorpusEntry> corpus_list(const std::string& root) {
  std::vector<CorpusEntry> out;
  if (!fs::is_directory(root)) throw ShapeError("corpus root '" + root + "' is not a directory");
  for (const auto& e : fs::directory_iterator(root)) {
    if (!e.is_directory()) continue;
    if (fs::exists(e.path() / "checks.json"))
      out.push_back({e.path().filename().string(), e.path().string()});
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

namespace {

void append_prefixed(SuiteReport& suite, const std::string& prefix, const SuiteReport& part) {
  for (auto c : part.checks) {
    c.identity = prefix + "/" + c.identity;
    suite.append(std::move(c));
  }
}

CheckReport match_check(const std::string& name, const std::string& got,
                        const std::string& expected) {
  CheckReport rep;
  rep.identity = name;
  if (got == expected) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = CheckStatus::Fail;
    rep.error = "constructed output differs from the committed expectation";
  }
  return rep;
}

OOperatorData ooperator_from_json(const json& spec, const std::string& dir) {
  OOperatorData data;
  data.t = load_map_file(dir + "/" + spec.at("map").get<std::string>());
  data.rota_baxter = spec.value("rota_baxter", false);
  const std::string conv = spec.value("convention", std::string("hom"));
  data.convention = conv == "swapped" ? OOperatorData::Convention::Swapped
                                      : OOperatorData::Convention::Standard;
  return data;
}

}  // namespace

SuiteReport corpus_run(const std::string& root, const std::string& id, unsigned jobs) {
  const std::string dir = root + "/" + id;
  const json manifest = json::parse(read_file(dir + "/checks.json"));
  SuiteReport suite;
  for (const auto& spec : manifest.at("checks")) {
    const std::string kind = spec.at("kind").get<std::string>();
    const std::string label = spec.at("label").get<std::string>();
    const auto path = [&](const char* key) { return dir + "/" + spec.at(key).get<std::string>(); };

    if (kind == "variety") {
      append_prefixed(suite, label, check_variety(load_presentation_file(path("file")), jobs));
    } else if (kind == "identity") {
      const auto p = load_presentation_file(path("file"));
      EvalContext ctx = EvalContext::variety(p);
      SuiteReport one;
      one.append(check_identity_named(spec.at("name").get<std::string>(), ctx, jobs));
      append_prefixed(suite, label, one);
    } else if (kind == "bimodule") {
      const auto p = load_presentation_file(path("file"));
      const auto a = load_action_file(path("actions"));
      append_prefixed(suite, label, check_bimodule(p, a, jobs));
    } else if (kind == "matched") {
      const auto pa = load_presentation_file(path("a"));
      const auto pb = load_presentation_file(path("b"));
      const auto ab = load_action_file(path("a_on_b"));
      const auto ba = load_action_file(path("b_on_a"));
      append_prefixed(suite, label, check_matched_pair(pa, pb, ab, ba, jobs).flattened());
    } else if (kind == "form") {
      const auto p = load_presentation_file(path("file"));
      if (!p.form) throw ShapeError("entry declares a form check but the file has no form");
      const FormReport fr = check_form(p, *p.form);
      SuiteReport flat = fr.identities;
      CheckReport nd;
      nd.identity = "form_nondegenerate";
      nd.status = fr.nondegenerate;
      flat.append(std::move(nd));
      append_prefixed(suite, label, flat);
    } else if (kind == "ooperator") {
      const auto p = load_presentation_file(path("file"));
      ActionFamily a;
      if (spec.contains("actions")) a = load_action_file(path("actions"));
      append_prefixed(suite, label, check_ooperator(p, a, ooperator_from_json(spec, dir)));
    } else if (kind == "construct_twist" || kind == "construct_derived" ||
               kind == "construct_subadjacent" || kind == "construct_semidirect" ||
               kind == "construct_matched_sum" || kind == "construct_induce") {
      Constructed<AlgebraPresentation> built;
      if (kind == "construct_twist") {
        const auto p = load_presentation_file(path("file"));
        TwistRecipe recipe;
        recipe.mode = spec.value("mode", std::string("compose")) == "yau"
                          ? TwistRecipe::Mode::YauFromUntwisted
                          : TwistRecipe::Mode::ComposeOntoTwisted;
        for (const auto& m : spec.at("morphisms"))
          recipe.morphisms.push_back(load_map_file(dir + "/" + m.get<std::string>()));
        built = yau_twist(p, recipe, /*allow_failed_preconditions=*/true);
      } else if (kind == "construct_derived") {
        built = derived_algebra(load_presentation_file(path("file")), spec.at("type").get<int>(),
                                spec.at("n").get<unsigned>(), true);
      } else if (kind == "construct_subadjacent") {
        built = sub_adjacent(load_presentation_file(path("file")), true);
      } else if (kind == "construct_semidirect") {
        built = semidirect_sum(load_presentation_file(path("file")),
                               load_action_file(path("actions")), true);
      } else if (kind == "construct_matched_sum") {
        built = matched_sum(load_presentation_file(path("a")), load_presentation_file(path("b")),
                            load_action_file(path("a_on_b")), load_action_file(path("b_on_a")),
                            true);
      } else {
        const auto p = load_presentation_file(path("file"));
        ActionFamily a;
        if (spec.contains("actions")) a = load_action_file(path("actions"));
        built = induce_dendriform(p, a, ooperator_from_json(spec, dir), true);
      }
      append_prefixed(suite, label + "/pre", built.preconditions);
      append_prefixed(suite, label + "/post", built.verification);
      if (spec.contains("expect")) {
        const std::string expected = read_file(path("expect"));
        SuiteReport one;
        one.append(match_check("matches_expected", save_presentation(built.value), expected));
        append_prefixed(suite, label, one);
      }
    } else {
      throw ShapeError("unknown corpus check kind '" + kind + "'");
    }
  }
  return suite;
}

std::string corpus_diff_golden(const std::string& root, const std::string& id, unsigned jobs) {
  const SuiteReport got = corpus_run(root, id, jobs);
  const std::string rendered = render_machine(got);
  const std::string golden = read_file(root + "/" + id + "/golden.report");
  if (rendered == golden) return "";
  return "golden mismatch for corpus entry '" + id + "'";
}

}  // namespace homleib
