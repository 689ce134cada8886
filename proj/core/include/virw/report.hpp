#pragma once
#include <string>
#include <vector>

namespace virw {

inline constexpr const char* kToolName = "virw";
inline constexpr const char* kToolVersion = "1.0.0";

/// One verified instance of a law: the identity that was checked, the inputs
/// it was instantiated with, and both sides of the comparison.  Informational
/// records document an outcome without contributing to pass/fail.
struct CheckRecord {
  std::string name;
  std::string identity;
  std::string inputs;
  std::string expected;
  std::string got;
  bool pass = false;
  bool informational = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  void check(std::string name, std::string identity, std::string inputs, std::string expected,
             std::string got, bool pass);
  /// Recorded outcome: counted separately, never fails the report.
  void note(std::string name, std::string identity, std::string inputs, std::string outcome);

  int passed() const;
  int failed() const;
  int recorded() const;
  bool all_pass() const { return failed() == 0; }
};

/// Machine-readable form.  The same report always serializes to the same
/// bytes; there are no timestamps or addresses in the output.
std::string report_to_json(const Report& r);
/// Human-readable table carrying exactly the fields of the machine form.
std::string report_to_table(const Report& r);

/// Full run artifact: version stamp, seed, normalized config echo (a JSON
/// object in textual form), and every suite report.
std::string run_to_json(const std::vector<Report>& reports, const std::string& config_echo,
                        unsigned long long seed);
std::string run_to_table(const std::vector<Report>& reports);

}  // namespace virw
