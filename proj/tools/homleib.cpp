#include "homleib/corpus.hpp"
#include "homleib/duality.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace homleib;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "text";
  unsigned jobs = 1;
  unsigned fuzz = 0;
  std::uint64_t seed = 0;
};

void emit(const SuiteReport& suite, const OutputOptions& opt) {
  if (opt.format == "machine")
    std::cout << render_machine(suite);
  else
    std::cout << render_text(suite);
}

int suite_exit(const SuiteReport& suite) {
  for (const auto& c : suite.checks)
    if (c.status == CheckStatus::Error) return kExitUsage;
  return suite.all_passed() ? kExitPass : kExitCheckFailed;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoul(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

LinearMap parse_beta_spec(const std::string& spec, std::size_t n) {
  const FieldPtr f = make_field(FieldSpec::rationals());
  if (spec == "id") return LinearMap::identity(f, n);
  if (spec.rfind("diag:", 0) == 0) {
    LinearMap m(f, n, n);
    const auto entries = spec.substr(5);
    std::size_t pos = 0, i = 0;
    while (pos < entries.size() && i < n) {
      std::size_t next = entries.find(',', pos);
      if (next == std::string::npos) next = entries.size();
      m.at(i, i) = scalar_parse(entries.substr(pos, next - pos), f);
      pos = next + 1;
      ++i;
    }
    if (i != n) throw ShapeError("diag: expects " + std::to_string(n) + " entries");
    return m;
  }
  return load_map_file(spec);
}

int run_check(const std::vector<std::string>& files, bool variety, const std::string& identity,
              const std::string& bimodule, bool matched, const std::string& ooperator_actions,
              const std::string& op_map, bool rota_baxter, const std::string& convention,
              bool bialgebra, const std::string& manin_split, const OutputOptions& opt) {
  if (files.empty()) {
    std::cerr << "check: no input files\n";
    return kExitUsage;
  }

  if (matched) {
    if (files.size() != 4) {
      std::cerr << "check --matched expects four files: A.alg B.alg AonB.act BonA.act\n";
      return kExitUsage;
    }
    const auto pa = load_presentation_file(files[0]);
    const auto pb = load_presentation_file(files[1]);
    const auto ab = load_action_file(files[2]);
    const auto ba = load_action_file(files[3]);
    const SuiteReport suite = check_matched_pair(pa, pb, ab, ba, opt.jobs).flattened();
    emit(suite, opt);
    return suite_exit(suite);
  }

  const auto p = load_presentation_file(files[0]);
  SuiteReport suite;
  if (!identity.empty()) {
    EvalContext ctx = EvalContext::variety(p);
    suite.append(check_identity_named(identity, ctx, opt.jobs));
  } else if (!bimodule.empty()) {
    suite = check_bimodule(p, load_action_file(bimodule), opt.jobs);
  } else if (!op_map.empty()) {
    OOperatorData data;
    data.t = load_map_file(op_map);
    data.rota_baxter = rota_baxter;
    data.convention = convention == "swapped" ? OOperatorData::Convention::Swapped
                                              : OOperatorData::Convention::Standard;
    ActionFamily a;
    if (!ooperator_actions.empty()) a = load_action_file(ooperator_actions);
    suite = check_ooperator(p, a, data);
  } else if (bialgebra) {
    const auto result = check_bialgebra(p);
    suite = result.preconditions;
    suite.append(result.value);
  } else if (!manin_split.empty()) {
    if (!p.form) {
      std::cerr << "check --manin requires a presentation with a form\n";
      return kExitUsage;
    }
    const auto bar = manin_split.find('|');
    if (bar == std::string::npos) {
      std::cerr << "--manin expects \"i,j,...|k,l,...\"\n";
      return kExitUsage;
    }
    const ManinReport rep = manin_check(p, *p.form, parse_index_list(manin_split.substr(0, bar)),
                                        parse_index_list(manin_split.substr(bar + 1)));
    SuiteReport flat = rep.form.identities;
    auto push = [&flat](const std::string& name, bool ok) {
      CheckReport c;
      c.identity = name;
      c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      flat.append(std::move(c));
    };
    push("form_nondegenerate", rep.form.nondegenerate == CheckStatus::Pass);
    push("split_partitions", rep.split_partitions);
    push("subalgebra_1", rep.subalgebra_1);
    push("subalgebra_2", rep.subalgebra_2);
    push("isotropic_1", rep.isotropic_1);
    push("isotropic_2", rep.isotropic_2);
    push("twist_preserves_split", rep.twist_preserves_split);
    for (const auto& c : rep.variety.checks) flat.append(c);
    suite = std::move(flat);
  } else if (variety) {
    suite = check_variety(p, opt.jobs);
  } else {
    std::cerr << "check: choose one of --variety, --identity, --bimodule, --matched, "
                 "--ooperator/--rota-baxter, --bialgebra, --manin\n";
    return kExitUsage;
  }

  if (opt.fuzz > 0) {
    EvalContext ctx = EvalContext::variety(p);
    for (const auto& name : Catalog::variety_identity_names(p.variety)) {
      const Identity* id = Catalog::active().find(name);
      if (id) suite.append(fuzz_multilinearity(*id, ctx, opt.fuzz, opt.seed));
    }
  }
  emit(suite, opt);
  return suite_exit(suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker and constructor for twisted Leibniz-type structure constants"};
  app.require_subcommand(1);

  OutputOptions opt;

  // ---- check -------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Run identity checks on presentation files");
  std::vector<std::string> check_files;
  bool flag_variety = false, flag_matched = false, flag_rb = false, flag_bialgebra = false;
  std::string arg_identity, arg_bimodule, arg_oop_actions, arg_map, arg_convention = "hom";
  std::string arg_manin;
  check->add_option("files", check_files, "input files");
  check->add_flag("--variety", flag_variety, "check the variety's defining identities");
  check->add_option("--identity", arg_identity, "check one named identity");
  check->add_option("--bimodule", arg_bimodule, "action file to check as a bimodule");
  check->add_flag("--matched", flag_matched, "check a matched pair (four files)");
  check->add_option("--ooperator", arg_oop_actions, "action file for an operator check");
  check->add_option("--map", arg_map, "operator matrix file (with --ooperator/--rota-baxter)");
  check->add_flag("--rota-baxter", flag_rb, "operator check against the regular actions");
  check->add_option("--convention", arg_convention, "operator convention: hom|swapped")
      ->check(CLI::IsMember({"hom", "swapped"}));
  check->add_flag("--bialgebra", flag_bialgebra, "check the cobracket conditions");
  check->add_option("--manin", arg_manin, "Manin split \"i,j|k,l\" (requires a form)");
  check->add_option("--format", opt.format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  check->add_option("--jobs", opt.jobs, "parallel evaluation threads");
  check->add_option("--fuzz", opt.fuzz, "extra random multilinearity samples");
  check->add_option("--seed", opt.seed, "seed for randomized checks");

  // ---- construct ----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Run a constructive theorem");
  std::string kind, out_path, arg_mode = "compose", arg_beta = "id", arg_dual_mode = "lr";
  std::vector<std::string> construct_inputs, arg_morphisms;
  int arg_type = 1;
  unsigned arg_n = 1;
  bool flag_force = false, flag_invertible = false;
  construct->add_option("kind", kind,
                        "twist|derive|semidirect|matched-sum|subadjacent|dualize|induce|"
                        "from-form|omni")
      ->required();
  construct->add_option("inputs", construct_inputs, "input files");
  construct->add_option("--out", out_path, "output file")->required();
  construct->add_option("--morphism", arg_morphisms, "twist morphism map file (repeatable)");
  construct->add_option("--mode", arg_mode, "twist mode: yau|compose")
      ->check(CLI::IsMember({"yau", "compose"}));
  construct->add_option("--type", arg_type, "derived type: 1|2");
  construct->add_option("--n", arg_n, "derived index / matrix size");
  construct->add_option("--beta", arg_beta, "omni twist: id, diag:c1,c2,..., or a map file");
  construct->add_option("--dual-mode", arg_dual_mode,
                        "dualize mode: lr|l_minus|l0|0r|sum_sum|succ_minus|succ_prec|"
                        "dendr_sum_sum|dendr_succ_minus|dendr_succ_prec");
  construct->add_option("--map", arg_map, "operator matrix file (induce)");
  construct->add_option("--convention", arg_convention, "operator convention: hom|swapped")
      ->check(CLI::IsMember({"hom", "swapped"}));
  construct->add_flag("--rota-baxter", flag_rb, "operator against the regular actions");
  construct->add_flag("--invertible", flag_invertible,
                      "induce on the carrier through an invertible operator");
  construct->add_flag("--force", flag_force, "construct even if preconditions fail");
  construct->add_option("--format", opt.format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  // ---- corpus -------------------------------------------------------------
  auto* corpus = app.add_subcommand("corpus", "List or run bundled worked examples");
  std::string corpus_action, corpus_id, corpus_dir = "corpus";
  corpus->add_option("action", corpus_action, "list|run")->required();
  corpus->add_option("id", corpus_id, "entry id (for run)");
  corpus->add_option("--dir", corpus_dir, "corpus directory");
  corpus->add_option("--format", opt.format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  corpus->add_option("--jobs", opt.jobs, "parallel evaluation threads");

  // ---- catalog ------------------------------------------------------------
  auto* catalog = app.add_subcommand("catalog", "List the identity catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return run_check(check_files, flag_variety, arg_identity, arg_bimodule, flag_matched,
                       arg_oop_actions, arg_map, flag_rb, arg_convention, flag_bialgebra,
                       arg_manin, opt);
    }

    if (construct->parsed()) {
      const auto need_inputs = [&](std::size_t n) {
        if (construct_inputs.size() != n)
          throw ShapeError("construct " + kind + " expects " + std::to_string(n) +
                           " input file(s)");
      };
      SuiteReport log;
      std::string written;
      if (kind == "twist") {
        need_inputs(1);
        const auto p = load_presentation_file(construct_inputs[0]);
        TwistRecipe recipe;
        recipe.mode = arg_mode == "yau" ? TwistRecipe::Mode::YauFromUntwisted
                                        : TwistRecipe::Mode::ComposeOntoTwisted;
        if (arg_morphisms.empty()) throw ShapeError("twist requires --morphism");
        for (const auto& m : arg_morphisms) recipe.morphisms.push_back(load_map_file(m));
        auto res = yau_twist(p, recipe, flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "derive") {
        need_inputs(1);
        auto res = derived_algebra(load_presentation_file(construct_inputs[0]), arg_type, arg_n,
                                   flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "subadjacent") {
        need_inputs(1);
        auto res = sub_adjacent(load_presentation_file(construct_inputs[0]), flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "semidirect") {
        need_inputs(2);
        auto res = semidirect_sum(load_presentation_file(construct_inputs[0]),
                                  load_action_file(construct_inputs[1]), flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "matched-sum") {
        need_inputs(4);
        auto res = matched_sum(load_presentation_file(construct_inputs[0]),
                               load_presentation_file(construct_inputs[1]),
                               load_action_file(construct_inputs[2]),
                               load_action_file(construct_inputs[3]), flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "dualize") {
        need_inputs(2);
        auto res = dual_actions(load_presentation_file(construct_inputs[0]),
                                load_action_file(construct_inputs[1]),
                                dual_mode_from_name(arg_dual_mode), flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_action(res.value);
      } else if (kind == "induce") {
        need_inputs(flag_rb ? 1 : 2);
        const auto p = load_presentation_file(construct_inputs[0]);
        ActionFamily a;
        if (!flag_rb) a = load_action_file(construct_inputs[1]);
        OOperatorData data;
        if (arg_map.empty()) throw ShapeError("induce requires --map");
        data.t = load_map_file(arg_map);
        data.rota_baxter = flag_rb;
        data.convention = arg_convention == "swapped" ? OOperatorData::Convention::Swapped
                                                      : OOperatorData::Convention::Standard;
        auto res = flag_invertible ? dendriform_from_invertible(p, a, data, flag_force)
                                   : induce_dendriform(p, a, data, flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "from-form") {
        need_inputs(1);
        const auto p = load_presentation_file(construct_inputs[0]);
        if (!p.form) throw ShapeError("from-form requires a presentation with a form");
        auto res = dendriform_from_form(p, *p.form, flag_force);
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else if (kind == "omni") {
        auto res = omni_gl_example(arg_n, parse_beta_spec(arg_beta, arg_n));
        log = res.preconditions;
        log.append(res.verification);
        written = save_presentation(res.value);
      } else {
        throw ShapeError("unknown construct kind '" + kind + "'");
      }
      write_file(out_path, written);
      emit(log, opt);
      return suite_exit(log);
    }

    if (corpus->parsed()) {
      if (corpus_action == "list") {
        for (const auto& e : corpus_list(corpus_dir)) std::cout << e.id << "\n";
        return kExitPass;
      }
      if (corpus_action == "run") {
        if (corpus_id.empty()) throw ShapeError("corpus run requires an entry id");
        const std::string diff = corpus_diff_golden(corpus_dir, corpus_id, opt.jobs);
        const SuiteReport suite = corpus_run(corpus_dir, corpus_id, opt.jobs);
        emit(suite, opt);
        if (!diff.empty()) {
          std::cerr << diff << "\n";
          return kExitCheckFailed;
        }
        return kExitPass;
      }
      throw ShapeError("corpus action must be list or run");
    }

    if (catalog->parsed()) {
      for (const auto& name : Catalog::active().names()) std::cout << name << "\n";
      return kExitPass;
    }
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n" << render_text(e.report());
    return kExitCheckFailed;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
