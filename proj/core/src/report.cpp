#include "virw/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"

namespace virw {

using Json = nlohmann::ordered_json;

void Report::check(std::string name, std::string identity, std::string inputs,
                   std::string expected, std::string got, bool pass) {
  records.push_back({std::move(name), std::move(identity), std::move(inputs), std::move(expected),
                     std::move(got), pass, false});
}

void Report::note(std::string name, std::string identity, std::string inputs,
                  std::string outcome) {
  records.push_back({std::move(name), std::move(identity), std::move(inputs), "(recorded)",
                     std::move(outcome), true, true});
}

int Report::passed() const {
  int n = 0;
  for (const auto& r : records) n += (!r.informational && r.pass) ? 1 : 0;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (const auto& r : records) n += (!r.informational && !r.pass) ? 1 : 0;
  return n;
}

int Report::recorded() const {
  int n = 0;
  for (const auto& r : records) n += r.informational ? 1 : 0;
  return n;
}

namespace {

const char* status_of(const CheckRecord& r) {
  if (r.informational) return "recorded";
  return r.pass ? "pass" : "fail";
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.records) {
    checks.push_back(Json{{"name", c.name},
                          {"identity", c.identity},
                          {"inputs", c.inputs},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"status", status_of(c)}});
  }
  return Json{{"suite", r.suite},
              {"checks", std::move(checks)},
              {"summary",
               Json{{"passed", r.passed()}, {"failed", r.failed()}, {"recorded", r.recorded()}}}};
}

}  // namespace

std::string report_to_json(const Report& r) { return report_json(r).dump(2); }

std::string report_to_table(const Report& r) {
  // One aligned row per record; long cells stay on their row (terminals wrap).
  static const char* kHead[6] = {"STATUS", "NAME", "IDENTITY", "INPUTS", "EXPECTED", "GOT"};
  std::vector<std::array<std::string, 6>> rows;
  for (const auto& c : r.records)
    rows.push_back({status_of(c), c.name, c.identity, c.inputs, c.expected, c.got});
  size_t width[6];
  for (int i = 0; i < 6; ++i) {
    width[i] = std::string(kHead[i]).size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (int i = 0; i < 6; ++i) {
      out << row[i];
      if (i < 5) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  };
  emit({kHead[0], kHead[1], kHead[2], kHead[3], kHead[4], kHead[5]});
  for (const auto& row : rows) emit(row);
  out << "summary: " << r.passed() << " passed, " << r.failed() << " failed, " << r.recorded()
      << " recorded\n";
  return out.str();
}

std::string run_to_json(const std::vector<Report>& reports, const std::string& config_echo,
                        unsigned long long seed) {
  Json suites = Json::array();
  int passed = 0, failed = 0, recorded = 0;
  for (const auto& r : reports) {
    suites.push_back(report_json(r));
    passed += r.passed();
    failed += r.failed();
    recorded += r.recorded();
  }
  Json config = config_echo.empty() ? Json::object() : Json::parse(config_echo);
  Json doc{{"tool", kToolName},
           {"version", kToolVersion},
           {"seed", seed},
           {"config", std::move(config)},
           {"suites", std::move(suites)},
           {"summary", Json{{"passed", passed},
                            {"failed", failed},
                            {"recorded", recorded},
                            {"all_pass", failed == 0}}}};
  return doc.dump(2);
}

std::string run_to_table(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << "\n";
  int passed = 0, failed = 0, recorded = 0;
  for (const auto& r : reports) {
    out << "\n" << report_to_table(r);
    passed += r.passed();
    failed += r.failed();
    recorded += r.recorded();
  }
  out << "\ntotal: " << passed << " passed, " << failed << " failed, " << recorded
      << " recorded\n";
  return out.str();
}

}  // namespace virw
