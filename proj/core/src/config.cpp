#include "virw/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace virw {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {
      "axioms",       "lemma-rel-subalg",  "filtration", "t-subalgebra",
      "iota",         "omega-collapse",    "annihilators", "jet-modules",
      "beta1-exceptional", "cover",        "map-evaluation", "paper-examples"};
  return kNames;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required key");
  return *it;
}

void check_keys(const Json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) fail(path + "." + it.key(), "unknown key");
  }
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long long int_at(const Json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
  return v;
}

bool bool_at(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

Scalar scalar_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_float()) fail(path, "floats are not exact; write the value as \"p/q\"");
  if (j.is_string()) {
    try {
      return GaussianRational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string like \"3/4\" or \"1/2*i\"");
}

std::vector<Scalar> scalar_list_at(const Json& j, const std::string& path, size_t n) {
  if (!j.is_array()) fail(path, "expected an array of " + std::to_string(n) + " scalars");
  if (j.size() != n)
    fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  std::vector<Scalar> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(scalar_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> parity_list_at(const Json& j, const std::string& path, size_t n) {
  if (!j.is_array()) fail(path, "expected an array of " + std::to_string(n) + " parities (0/1)");
  if (j.size() != n)
    fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i)
    out.push_back(static_cast<int>(int_at(j[i], path + "[" + std::to_string(i) + "]", 0, 1)));
  return out;
}

Json scalar_norm(const Scalar& c) { return Json(c.to_string()); }

Json scalar_list_norm(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_norm(c));
  return out;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- gspec

struct GParse {
  GSpec g;
  Json norm;
};

GParse gspec_from(const Json& j, const std::string& path) {
  require_object(j, path);
  if (j.contains("preset")) {
    check_keys(j, path, {"preset", "beta", "t"});
    std::string preset = string_at(j["preset"], path + ".preset");
    if (preset == "one_dim" || preset == "heisenberg") {
      Scalar beta = j.contains("beta") ? scalar_at(j["beta"], path + ".beta") : Scalar(0);
      if (j.contains("t")) fail(path + ".t", "only the sl2 preset takes t");
      GSpec g = preset == "one_dim" ? gspec_one_dim(beta) : gspec_heisenberg(beta);
      return {std::move(g), Json{{"preset", preset}, {"beta", scalar_norm(beta)}}};
    }
    if (preset == "sl2") {
      Scalar t = j.contains("t") ? scalar_at(j["t"], path + ".t") : Scalar(0);
      if (j.contains("beta")) fail(path + ".beta", "the sl2 preset takes t, not beta");
      return {gspec_sl2(t), Json{{"preset", preset}, {"t", scalar_norm(t)}}};
    }
    if (preset == "super_hv") {
      if (j.contains("beta") || j.contains("t"))
        fail(path, "the super_hv preset takes no parameters");
      return {gspec_super_hv(), Json{{"preset", preset}}};
    }
    fail(path + ".preset", "unknown preset '" + preset +
                               "' (one_dim, heisenberg, sl2, super_hv)");
  }
  check_keys(j, path, {"dim", "parity", "beta", "c", "form", "names", "label"});
  GSpec g;
  g.dim = static_cast<int>(int_at(member(j, path, "dim"), path + ".dim", 1, 8));
  const size_t n = static_cast<size_t>(g.dim);
  g.parity = j.contains("parity") ? parity_list_at(j["parity"], path + ".parity", n)
                                  : std::vector<int>(n, 0);
  g.beta = scalar_list_at(member(j, path, "beta"), path + ".beta", n);
  g.c = scalar_list_at(member(j, path, "c"), path + ".c", n * n * n);
  if (j.contains("form")) g.form = scalar_list_at(j["form"], path + ".form", n * n);
  if (j.contains("names")) {
    const Json& names = j["names"];
    if (!names.is_array() || names.size() != n) fail(path + ".names", "expected dim names");
    for (size_t i = 0; i < n; ++i)
      g.names.push_back(string_at(names[i], path + ".names[" + std::to_string(i) + "]"));
  }
  if (j.contains("label")) g.label = string_at(j["label"], path + ".label");
  try {
    g.validate();
  } catch (const CatalogError& e) {
    fail(path, e.what());
  }
  Json norm{{"dim", g.dim}};
  norm["parity"] = g.parity;
  norm["beta"] = scalar_list_norm(g.beta);
  norm["c"] = scalar_list_norm(g.c);
  if (g.form) norm["form"] = scalar_list_norm(*g.form);
  if (!g.names.empty()) norm["names"] = g.names;
  if (!g.label.empty()) norm["label"] = g.label;
  return {std::move(g), std::move(norm)};
}

// ---------------------------------------------------------------- ring

struct RingParse {
  RingSpec ring;
  Json norm;
};

RingParse ring_from(const Json& j, const std::string& path) {
  require_object(j, path);
  std::string kind = string_at(member(j, path, "kind"), path + ".kind");
  try {
    if (kind == "trivial") {
      check_keys(j, path, {"kind"});
      return {RingSpec::trivial(), Json{{"kind", kind}}};
    }
    if (kind == "grassmann") {
      check_keys(j, path, {"kind", "n"});
      int n = static_cast<int>(int_at(member(j, path, "n"), path + ".n", 1, 6));
      return {RingSpec::grassmann(n), Json{{"kind", kind}, {"n", n}}};
    }
    if (kind == "trunc_poly") {
      check_keys(j, path, {"kind", "k"});
      int k = static_cast<int>(int_at(member(j, path, "k"), path + ".k", 1, 8));
      return {RingSpec::trunc_poly(k), Json{{"kind", kind}, {"k", k}}};
    }
    if (kind == "product") {
      check_keys(j, path, {"kind", "factors"});
      const Json& factors = member(j, path, "factors");
      if (!factors.is_array() || factors.empty())
        fail(path + ".factors", "expected a non-empty array of ring blocks");
      std::vector<RingSpec> rs;
      Json norms = Json::array();
      for (size_t i = 0; i < factors.size(); ++i) {
        RingParse rp = ring_from(factors[i], path + ".factors[" + std::to_string(i) + "]");
        rs.push_back(std::move(rp.ring));
        norms.push_back(std::move(rp.norm));
      }
      return {RingSpec::product(rs), Json{{"kind", kind}, {"factors", std::move(norms)}}};
    }
  } catch (const CatalogError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown ring kind '" + kind +
                           "' (trivial, grassmann, trunc_poly, product)");
}

// ---------------------------------------------------------------- algebra

struct AlgebraParse {
  Algebra alg;
  Json norm;
};

AlgebraParse algebra_from(const Json& j, const std::string& path) {
  require_object(j, path);
  std::string fam = string_at(member(j, path, "family"), path + ".family");
  try {
    if (fam == "witt") {
      check_keys(j, path, {"family"});
      return {Algebra::witt(), Json{{"family", fam}}};
    }
    if (fam == "extended_witt") {
      check_keys(j, path, {"family"});
      return {Algebra::extended_witt(), Json{{"family", fam}}};
    }
    if (fam == "witt_current" || fam == "extended_witt_current") {
      check_keys(j, path, {"family", "g"});
      GParse gp = gspec_from(member(j, path, "g"), path + ".g");
      return {Algebra::witt_current(gp.g, fam == "extended_witt_current"),
              Json{{"family", fam}, {"g", std::move(gp.norm)}}};
    }
    if (fam == "hv_beta") {
      check_keys(j, path, {"family", "beta"});
      Scalar beta = scalar_at(member(j, path, "beta"), path + ".beta");
      return {Algebra::hv_beta(beta), Json{{"family", fam}, {"beta", scalar_norm(beta)}}};
    }
    if (fam == "affine_virasoro") {
      check_keys(j, path, {"family", "g"});
      GParse gp = gspec_from(member(j, path, "g"), path + ".g");
      return {Algebra::affine_virasoro(gp.g), Json{{"family", fam}, {"g", std::move(gp.norm)}}};
    }
    if (fam == "super_hv") {
      check_keys(j, path, {"family"});
      return {Algebra::super_hv(), Json{{"family", fam}}};
    }
    if (fam == "der_ext") {
      check_keys(j, path, {"family", "g"});
      GParse gp = gspec_from(member(j, path, "g"), path + ".g");
      return {Algebra::der_ext(gp.g), Json{{"family", fam}, {"g", std::move(gp.norm)}}};
    }
    if (fam == "tau") {
      check_keys(j, path, {"family", "g"});
      if (!j.contains("g")) return {Algebra::tau(std::nullopt), Json{{"family", fam}}};
      GParse gp = gspec_from(j["g"], path + ".g");
      return {Algebra::tau(gp.g), Json{{"family", fam}, {"g", std::move(gp.norm)}}};
    }
    if (fam == "map") {
      check_keys(j, path, {"family", "base", "ring"});
      AlgebraParse base = algebra_from(member(j, path, "base"), path + ".base");
      RingParse ring = ring_from(member(j, path, "ring"), path + ".ring");
      return {Algebra::map(base.alg, ring.ring),
              Json{{"family", fam}, {"base", std::move(base.norm)}, {"ring", std::move(ring.norm)}}};
    }
  } catch (const CatalogError& e) {
    fail(path, e.what());
  }
  fail(path + ".family", "unknown family '" + fam + "'");
}

// ---------------------------------------------------------------- modules

struct ModuleParse {
  ModuleEntry entry;
  Json norm;
};

Json findim_norm(const FinDimModuleSpec& spec) {
  Json x = Json::array();
  for (const auto& mat : spec.x_matrices) x.push_back(scalar_list_norm(mat));
  Json norm{{"dim", spec.dim}};
  norm["parity"] = spec.parity.empty() ? std::vector<int>(spec.dim, 0) : spec.parity;
  norm["d"] = scalar_list_norm(spec.d_matrix);
  norm["x"] = std::move(x);
  if (!spec.label.empty()) norm["label"] = spec.label;
  return norm;
}

FinDimModuleSpec vbar_from(const Json& j, const std::string& path, const Algebra& alg,
                           unsigned long long seed) {
  require_object(j, path);
  SliceInfo info;
  try {
    info = slice_info(alg);
  } catch (const ModuleError& e) {
    fail(path, e.what());
  }
  if (j.contains("preset")) {
    check_keys(j, path, {"preset", "max_dim"});
    std::string preset = string_at(j["preset"], path + ".preset");
    if (preset != "random") fail(path + ".preset", "unknown preset '" + preset + "' (random)");
    int max_dim =
        j.contains("max_dim") ? static_cast<int>(int_at(j["max_dim"], path + ".max_dim", 1, 4)) : 3;
    Rng rng(seed ^ fnv1a(path));
    return random_findim(alg, rng, max_dim);
  }
  check_keys(j, path, {"dim", "parity", "d", "x", "label"});
  FinDimModuleSpec spec;
  spec.dim = static_cast<int>(int_at(member(j, path, "dim"), path + ".dim", 1, 6));
  const size_t n = static_cast<size_t>(spec.dim);
  if (j.contains("parity")) spec.parity = parity_list_at(j["parity"], path + ".parity", n);
  spec.d_matrix = scalar_list_at(member(j, path, "d"), path + ".d", n * n);
  const Json& x = member(j, path, "x");
  if (!x.is_array() || x.size() != static_cast<size_t>(info.gens))
    fail(path + ".x", "expected " + std::to_string(info.gens) +
                          " generator matrices for this algebra");
  for (size_t s = 0; s < x.size(); ++s)
    spec.x_matrices.push_back(scalar_list_at(x[s], path + ".x[" + std::to_string(s) + "]", n * n));
  if (j.contains("label")) spec.label = string_at(j["label"], path + ".label");
  try {
    validate_findim(spec, info);
  } catch (const ModuleError& e) {
    fail(path, e.what());
  }
  return spec;
}

ModuleParse module_from(const Json& j, const std::string& path,
                        const std::optional<Algebra>& fallback, unsigned long long seed) {
  require_object(j, path);
  std::string kind = string_at(member(j, path, "kind"), path + ".kind");
  auto algebra_of = [&](Json& norm) -> Algebra {
    if (j.contains("algebra")) {
      AlgebraParse ap = algebra_from(j["algebra"], path + ".algebra");
      norm["algebra"] = std::move(ap.norm);
      return ap.alg;
    }
    if (fallback) return *fallback;
    fail(path + ".algebra", "missing algebra block (and no top-level algebra to fall back to)");
  };
  try {
    if (kind == "density") {
      check_keys(j, path, {"kind", "alpha", "beta", "extended"});
      Scalar alpha = scalar_at(member(j, path, "alpha"), path + ".alpha");
      Scalar beta = scalar_at(member(j, path, "beta"), path + ".beta");
      bool extended = j.contains("extended") && bool_at(j["extended"], path + ".extended");
      ModulePtr m = make_density_module(alpha, beta, extended);
      Json norm{{"kind", kind},
                {"alpha", scalar_norm(alpha)},
                {"beta", scalar_norm(beta)},
                {"extended", extended}};
      return {{m, m->describe()}, std::move(norm)};
    }
    if (kind == "jet") {
      check_keys(j, path, {"kind", "lambda", "algebra", "vbar"});
      Json norm{{"kind", kind}};
      Algebra alg = algebra_of(norm);
      Scalar lambda = scalar_at(member(j, path, "lambda"), path + ".lambda");
      FinDimModuleSpec vbar = vbar_from(member(j, path, "vbar"), path + ".vbar", alg, seed);
      ModulePtr m = make_jet_module(alg, lambda, vbar);
      norm["lambda"] = scalar_norm(lambda);
      norm["vbar"] = findim_norm(vbar);
      return {{m, m->describe()}, std::move(norm)};
    }
    if (kind == "beta1-exceptional") {
      check_keys(j, path, {"kind", "lambda", "b", "F"});
      Scalar lambda = scalar_at(member(j, path, "lambda"), path + ".lambda");
      Scalar b = scalar_at(member(j, path, "b"), path + ".b");
      Scalar F = scalar_at(member(j, path, "F"), path + ".F");
      ModulePtr m = make_beta1_exceptional(lambda, b, F);
      Json norm{{"kind", kind},
                {"lambda", scalar_norm(lambda)},
                {"b", scalar_norm(b)},
                {"F", scalar_norm(F)}};
      return {{m, m->describe()}, std::move(norm)};
    }
    if (kind == "evaluation") {
      check_keys(j, path, {"kind", "algebra", "base", "psi"});
      Json norm{{"kind", kind}};
      Algebra alg = algebra_of(norm);
      if (alg.family() != Family::Map)
        fail(path + ".algebra", "evaluation modules require a map-family algebra");
      ModuleParse base = module_from(member(j, path, "base"), path + ".base",
                                     std::optional<Algebra>(*alg.base()), seed);
      std::map<std::string, Scalar> values;
      if (j.contains("psi")) {
        const Json& psi = j["psi"];
        require_object(psi, path + ".psi");
        for (auto it = psi.begin(); it != psi.end(); ++it)
          values[it.key()] = scalar_at(it.value(), path + ".psi." + it.key());
      }
      PsiSpec psi = PsiSpec::make(alg.ring(), values);
      ModulePtr m = make_evaluation_module(alg, base.entry.module, psi);
      norm["base"] = std::move(base.norm);
      Json psi_norm = Json::object();
      for (const auto& [name, value] : values) psi_norm[name] = scalar_norm(value);
      norm["psi"] = std::move(psi_norm);
      return {{m, m->describe()}, std::move(norm)};
    }
  } catch (const ModuleError& e) {
    fail(path, e.what());
  } catch (const CatalogError& e) {
    fail(path, e.what());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown module kind '" + kind +
                           "' (density, jet, beta1-exceptional, evaluation)");
}

Json parse_json_or_fail(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  Json j = parse_json_or_fail(text);
  require_object(j, "$");
  check_keys(j, "$", {"seed", "window", "order", "suites", "algebra", "modules"});
  RunConfig cfg;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      fail("$.seed", "expected a non-negative integer");
    cfg.seed = j["seed"].get<unsigned long long>();
  }
  if (j.contains("window"))
    cfg.window = static_cast<int>(int_at(j["window"], "$.window", 1, 8));
  if (j.contains("order")) cfg.order = static_cast<int>(int_at(j["order"], "$.order", 1, 6));
  if (j.contains("suites")) {
    const Json& suites = j["suites"];
    if (!suites.is_array()) fail("$.suites", "expected an array of suite names");
    for (size_t i = 0; i < suites.size(); ++i) {
      std::string name = string_at(suites[i], "$.suites[" + std::to_string(i) + "]");
      if (!is_suite(name))
        fail("$.suites[" + std::to_string(i) + "]", "unknown suite name '" + name + "'");
      cfg.suites.push_back(std::move(name));
    }
  }
  if (cfg.suites.empty()) cfg.suites = suite_names();

  Json echo{{"seed", cfg.seed}, {"window", cfg.window}, {"order", cfg.order}};
  echo["suites"] = cfg.suites;
  if (j.contains("algebra")) {
    AlgebraParse ap = algebra_from(j["algebra"], "$.algebra");
    cfg.algebra = ap.alg;
    echo["algebra"] = std::move(ap.norm);
  } else {
    echo["algebra"] = nullptr;
  }
  echo["modules"] = Json::array();
  if (j.contains("modules")) {
    const Json& modules = j["modules"];
    if (!modules.is_array()) fail("$.modules", "expected an array of module blocks");
    for (size_t i = 0; i < modules.size(); ++i) {
      ModuleParse mp =
          module_from(modules[i], "$.modules[" + std::to_string(i) + "]", cfg.algebra, cfg.seed);
      cfg.modules.push_back(std::move(mp.entry));
      echo["modules"].push_back(std::move(mp.norm));
    }
  }
  cfg.echo = echo.dump(2);
  return cfg;
}

RunConfig default_config() { return parse_config_text("{}"); }

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$: cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Algebra parse_algebra_text(const std::string& text) {
  return algebra_from(parse_json_or_fail(text), "$").alg;
}

ModuleEntry parse_module_text(const std::string& text, const std::optional<Algebra>& fallback,
                              unsigned long long seed) {
  return module_from(parse_json_or_fail(text), "$", fallback, seed).entry;
}

}  // namespace virw
