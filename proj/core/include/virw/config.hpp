#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "virw/algebra.hpp"
#include "virw/modules.hpp"

namespace virw {

/// Invalid configuration.  The message names the offending key as a path
/// ($.algebra.g.beta, $.modules[1].vbar.d, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A module built from a config block, with a stable display label.
struct ModuleEntry {
  ModulePtr module;
  std::string label;
};

/// Validated run configuration.  Parsing resolves every random preset (with
/// the config seed), so the normalized echo is deterministic and complete.
struct RunConfig {
  unsigned long long seed = 2026;
  int window = 4;
  int order = 3;
  std::vector<std::string> suites;   // canonical names; defaults to all
  std::optional<Algebra> algebra;    // folded into suite sweeps when present
  std::vector<ModuleEntry> modules;  // targets for act/min-order/span-rank/cover-rank
  std::string echo;                  // normalized JSON echo of the whole config
};

/// Canonical suite names, in execution order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

RunConfig default_config();
/// Parses and validates a JSON config; every diagnostic names the key path.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// A standalone algebra block (the value of a config's "algebra" key).
Algebra parse_algebra_text(const std::string& text);
/// A standalone module block.  The fallback supplies the algebra when the
/// block carries no "algebra" key of its own.
ModuleEntry parse_module_text(const std::string& text, const std::optional<Algebra>& fallback,
                              unsigned long long seed = 2026);

}  // namespace virw
