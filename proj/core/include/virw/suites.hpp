#pragma once
#include "virw/config.hpp"
#include "virw/report.hpp"

namespace virw {

/// Runs one suite.  Deterministic for a fixed config: every random draw comes
/// from an Rng seeded by cfg.seed combined with the suite name, so reports
/// are byte-identical across runs and independent of scheduling.
Report run_suite(const std::string& name, const RunConfig& cfg);

/// Validates all names up front, then runs the suites concurrently (each
/// check is a pure computation; assembly joins in the given order).
std::vector<Report> run_suites(const std::vector<std::string>& names, const RunConfig& cfg);

}  // namespace virw
