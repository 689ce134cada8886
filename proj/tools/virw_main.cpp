#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "virw/config.hpp"
#include "virw/cover.hpp"
#include "virw/suites.hpp"

namespace {

using namespace virw;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Algebra and module blocks may be passed inline (text starting with '{')
// or as a path to a file holding the block.
std::string load_block(const std::string& arg) {
  size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && arg[i] == '{') return arg;
  return read_file(arg);
}

RunConfig load_config(const std::string& config_path,
                      const std::optional<unsigned long long>& seed) {
  if (config_path.empty() && !seed) return default_config();
  std::string text = config_path.empty() ? std::string("{}") : read_file(config_path);
  if (seed) {
    // Fold the override into the document before validation so preset
    // resolution and the normalized echo both see the effective seed.
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("$: config is not valid JSON");
    if (!j.is_object()) throw ConfigError("$: config must be a JSON object");
    j["seed"] = *seed;
    text = j.dump();
  }
  return parse_config_text(text);
}

void write_json(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << payload << '\n';
}

Algebra resolve_algebra(const std::string& arg, const RunConfig& cfg) {
  if (!arg.empty()) return parse_algebra_text(load_block(arg));
  if (cfg.algebra) return *cfg.algebra;
  return Algebra::witt();
}

ModuleEntry resolve_module(const std::string& arg, const RunConfig& cfg) {
  if (!arg.empty()) return parse_module_text(load_block(arg), cfg.algebra, cfg.seed);
  if (!cfg.modules.empty()) return cfg.modules.front();
  throw ConfigError("no module given: pass --module or a config with a modules entry");
}

NfMode parse_mode(const std::string& name) {
  if (name == "U" || name == "u") return NfMode::U;
  if (name == "Ubar" || name == "ubar") return NfMode::Ubar;
  if (name == "tensor" || name == "Tensor") return NfMode::Tensor;
  throw ConfigError("unknown normal-form mode \"" + name + "\" (expected U, Ubar, or tensor)");
}

DifferentiatorSpec::Variant parse_variant(const std::string& name) {
  if (name == "omega") return DifferentiatorSpec::Variant::Omega;
  if (name == "omega-bar" || name == "omegabar") return DifferentiatorSpec::Variant::OmegaBar;
  throw ConfigError("unknown variant \"" + name + "\" (expected omega or omega-bar)");
}

std::string syms_to_string(const Algebra& alg, const std::vector<BasisSymbol>& syms) {
  std::string out = "(";
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i) out += ", ";
    out += symbol_to_string(syms[i], &alg.ring());
  }
  return out + ")";
}

int cmd_verify(const RunConfig& cfg_in, const std::string& algebra_arg, int window,
               const std::string& json_path) {
  RunConfig cfg = cfg_in;
  if (window > 0) cfg.window = window;
  if (!algebra_arg.empty()) cfg.algebra = parse_algebra_text(load_block(algebra_arg));

  std::vector<Report> reports;
  if (cfg.algebra) {
    // A single named algebra: check it directly and report the counts.
    const Algebra& alg = *cfg.algebra;
    AxiomReport ar = verify_axioms(alg, cfg.window);
    Report rep;
    rep.suite = "axioms";
    std::string got;
    if (ar.pass) {
      got = "no witness; " + std::to_string(ar.pairs_checked) + " pairs, " +
            std::to_string(ar.triples_checked) + " triples";
    } else if (ar.witness) {
      got = ar.witness->law + " fails at " + syms_to_string(alg, ar.witness->syms) +
            "; residual " + ar.witness->residual.to_string(&alg.ring());
    } else {
      got = "failed without witness";
    }
    rep.check("axioms/" + alg.label(), "super-antisymmetry and super Jacobi",
              alg.describe() + ", window " + std::to_string(cfg.window), "no witness", got,
              ar.pass);
    reports.push_back(std::move(rep));
  } else {
    reports.push_back(run_suite("axioms", cfg));
  }
  std::cout << run_to_table(reports);
  if (!json_path.empty()) write_json(json_path, run_to_json(reports, cfg.echo, cfg.seed));
  return reports.front().all_pass() ? 0 : 1;
}

int cmd_suite(const RunConfig& cfg, const std::vector<std::string>& names,
              const std::string& json_path) {
  std::vector<std::string> run = names.empty() ? cfg.suites : names;
  std::vector<Report> reports = run_suites(run, cfg);
  std::cout << run_to_table(reports);
  if (!json_path.empty()) write_json(json_path, run_to_json(reports, cfg.echo, cfg.seed));
  for (const Report& r : reports)
    if (!r.all_pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation for Witt-type Lie (super)algebras, their enveloping "
               "algebras, and weight modules"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  std::string config_path;
  std::optional<unsigned long long> seed;
  app.add_option("--config", config_path, "Run configuration (JSON file)");
  app.add_option("--seed", seed, "Override the run seed (drives every random draw)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check super-antisymmetry and the super Jacobi identity on the basis window");
  std::string verify_algebra, verify_json;
  int verify_window = 0;
  verify->add_option("--algebra", verify_algebra,
                     "Algebra block, inline JSON or a file (default: the config algebra, "
                     "else the whole catalog)");
  verify->add_option("--window", verify_window, "Index window for the sweep")
      ->check(CLI::Range(1, 8));
  verify->add_option("--json", verify_json, "Write the machine-readable report here (- for stdout)");

  // bracket
  auto* bracket = app.add_subcommand("bracket", "Bracket two algebra elements");
  std::string bracket_algebra, bracket_lhs, bracket_rhs;
  bracket->add_option("lhs", bracket_lhs, "Left element, e.g. \"D(2)\" or \"3*D(1) + X(0,1)\"")
      ->required();
  bracket->add_option("rhs", bracket_rhs, "Right element")->required();
  bracket->add_option("--algebra", bracket_algebra,
                      "Algebra block, inline JSON or a file (default: the config algebra, "
                      "else the Witt algebra)");

  // nf
  auto* nf = app.add_subcommand("nf", "Normal form of an enveloping-algebra expression");
  std::string nf_algebra, nf_expr, nf_mode = "U";
  int nf_guard = 8;
  nf->add_option("expr", nf_expr, "Expression, e.g. \"D(2)*D(-1) + 3*X(0,1)\"")->required();
  nf->add_option("--mode", nf_mode,
                 "U (plain), Ubar (associative Laurent part), or tensor (Laurent prefix "
                 "times the weight-zero subalgebra)");
  nf->add_option("--algebra", nf_algebra, "Algebra block, inline JSON or a file");
  nf->add_option("--guard", nf_guard, "Cap on non-Laurent factors per word")
      ->check(CLI::Range(1, 64));

  // act
  auto* act_cmd = app.add_subcommand("act", "Act on a weight-module vector");
  std::string act_module, act_expr, act_vec;
  act_cmd->add_option("expr", act_expr, "Enveloping expression to apply")->required();
  act_cmd->add_option("vector", act_vec, "Module vector, e.g. \"v(0)\" or \"v(1,0) + 2*v(-1,1)\"")
      ->required();
  act_cmd->add_option("--module", act_module,
                      "Module block, inline JSON or a file (default: the config's first module)");

  // min-order
  auto* min_order = app.add_subcommand(
      "min-order", "Smallest alternating-binomial order annihilating a module");
  std::string mo_module, mo_variant = "omega";
  int mo_max = 6, mo_window = 3;
  min_order->add_option("--module", mo_module, "Module block, inline JSON or a file");
  min_order->add_option("--variant", mo_variant, "omega (d*d) or omega-bar (x*d)");
  min_order->add_option("--max", mo_max, "Largest order to try")->check(CLI::Range(1, 16));
  min_order->add_option("--window", mo_window, "Index window for the instances")
      ->check(CLI::Range(1, 8));

  // span-rank
  auto* span_rank = app.add_subcommand("span-rank", "Per-degree ranks of a cyclic span");
  std::string sr_module, sr_vector = "v(0)";
  int sr_window = 3;
  span_rank->add_option("--module", sr_module, "Module block, inline JSON or a file");
  span_rank->add_option("--vector", sr_vector, "Starting vector");
  span_rank->add_option("--window", sr_window, "Degree and index window")
      ->check(CLI::Range(1, 8));

  // cover-rank
  auto* cover_rank = app.add_subcommand(
      "cover-rank", "Weight-space rank of the functional cover of a module");
  std::string cr_module;
  long long cr_weight = 0;
  int cr_order = 0, cr_window = 0;
  cover_rank->add_option("--module", cr_module, "Module block, inline JSON or a file");
  cover_rank->add_option("--weight", cr_weight, "Weight-space degree p")->required();
  cover_rank->add_option("--order", cr_order,
                         "Annihilating order m (default: smallest annihilating order)");
  cover_rank->add_option("--window", cr_window, "Evaluation window (default 2m)");

  // suite
  auto* suite = app.add_subcommand("suite", "Run verification suites and print the report");
  std::vector<std::string> suite_args;
  std::string suite_json;
  bool suite_list = false;
  suite->add_option("names", suite_args, "Suites to run (default: the config list, else all)");
  suite->add_flag("--list", suite_list, "List the available suites and exit");
  suite->add_option("--json", suite_json, "Write the machine-readable report here (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*suite && suite_list) {
      for (const std::string& name : suite_names()) std::cout << name << '\n';
      return 0;
    }
    RunConfig cfg = load_config(config_path, seed);

    if (*verify) return cmd_verify(cfg, verify_algebra, verify_window, verify_json);

    if (*bracket) {
      Algebra alg = resolve_algebra(bracket_algebra, cfg);
      Element a = Element::parse(bracket_lhs, &alg.ring());
      Element b = Element::parse(bracket_rhs, &alg.ring());
      Element c = alg.bracket(a, b);
      std::cout << '[' << a.to_string(&alg.ring()) << ", " << b.to_string(&alg.ring())
                << "] = " << c.to_string(&alg.ring()) << '\n';
      return 0;
    }

    if (*nf) {
      EnvelopingEngine eng(resolve_algebra(nf_algebra, cfg), parse_mode(nf_mode), nf_guard);
      std::cout << eng.to_string(eng.parse(nf_expr)) << '\n';
      return 0;
    }

    if (*act_cmd) {
      ModuleEntry entry = resolve_module(act_module, cfg);
      EnvelopingEngine eng(entry.module->algebra(), NfMode::U);
      ModuleVector out = act_U(*entry.module, eng.parse(act_expr), ModuleVector::parse(act_vec));
      std::cout << out.to_string() << '\n';
      return 0;
    }

    if (*min_order) {
      ModuleEntry entry = resolve_module(mo_module, cfg);
      std::optional<int> got =
          min_annihilating_order(*entry.module, parse_variant(mo_variant), mo_max, mo_window);
      if (got)
        std::cout << *got << '\n';
      else
        std::cout << "none up to order " << mo_max << '\n';
      return 0;
    }

    if (*span_rank) {
      ModuleEntry entry = resolve_module(sr_module, cfg);
      std::map<int64_t, int> ranks =
          cyclic_span_rank(*entry.module, ModuleVector::parse(sr_vector), sr_window);
      for (const auto& [degree, rank] : ranks)
        std::cout << "degree " << degree << ": rank " << rank << '\n';
      return 0;
    }

    if (*cover_rank) {
      ModuleEntry entry = resolve_module(cr_module, cfg);
      Cover cover{entry.module};
      int m = cr_order;
      if (m <= 0) {
        DifferentiatorSpec::Variant variant = cover.uses_witt_symbols()
                                                  ? DifferentiatorSpec::Variant::Omega
                                                  : DifferentiatorSpec::Variant::OmegaBar;
        std::optional<int> found = min_annihilating_order(*entry.module, variant, 6, 3);
        if (!found)
          throw ConfigError("no annihilating order up to 6; pass --order explicitly");
        m = *found;
      }
      int window = cr_window > 0 ? cr_window : 2 * m;
      CoverRankReport rep = cover_weight_rank(cover, cr_weight, m, window);
      std::cout << "module: " << entry.label << '\n'
                << "weight: " << cr_weight << '\n'
                << "order: " << m << '\n'
                << "window: " << window << '\n'
                << "rank: " << rep.rank << '\n'
                << "stabilized: " << (rep.stabilized ? "yes" : "no") << '\n'
                << "generators:" << '\n';
      for (const std::string& g : rep.generators) std::cout << "  " << g << '\n';
      return 0;
    }

    if (*suite) return cmd_suite(cfg, suite_args, suite_json);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
