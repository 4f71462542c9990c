#include "seshadri/app/reproduce.hpp"

#include <chrono>

namespace seshadri::app {

namespace {

/// Every field of `expected` must be present in `actual` with an equal value;
/// nested objects are compared the same way.
void compare_subset(const std::string& id, const std::string& path, const Json& expected, const Json& actual,
                    std::vector<CaseFailure>& failures) {
  if (expected.is_object() && actual.is_object()) {
    for (const auto& item : expected.items()) {
      const std::string child = path + "/" + item.key();
      auto it = actual.find(item.key());
      if (it == actual.end()) {
        failures.push_back({id, child, item.value(), nullptr});
        continue;
      }
      compare_subset(id, child, item.value(), *it, failures);
    }
    return;
  }
  if (expected != actual) failures.push_back({id, path, expected, actual});
}

}  // namespace

Report run_reproduction(const std::optional<std::string>& prefix, const RunConfig& config,
                        const std::vector<ReproductionCase>& cases) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  for (const auto& c : cases) {
    if (prefix && c.id.rfind(*prefix, 0) != 0) continue;
    ++report.cases_run;
    report.ids.push_back(c.id);
    const std::size_t before = report.failures.size();
    const bool expects_error = c.expected.contains("error");
    try {
      const Json actual = run_command(c.command, c.input, config);
      if (expects_error) {
        report.failures.push_back({c.id, "/error", c.expected.at("error"), actual});
      } else {
        compare_subset(c.id, "", c.expected, actual, report.failures);
      }
    } catch (const std::exception& e) {
      const std::string message = e.what();
      const bool matched = expects_error && c.expected.at("error").is_string() &&
                           message.find(c.expected.at("error").get<std::string>()) != std::string::npos;
      if (!matched) report.failures.push_back({c.id, "/error", expects_error ? c.expected.at("error") : Json(nullptr), message});
    }
    if (report.failures.size() == before) ++report.passes;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const Report& report, bool include_timing) {
  Json out;
  out["cases_run"] = report.cases_run;
  out["passes"] = report.passes;
  out["failed"] = report.cases_run - report.passes;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"id", f.id}, {"field", f.field}, {"expected", f.expected}, {"actual", f.actual}});
  }
  out["failures"] = failures;
  out["ids"] = report.ids;
  if (include_timing) out["wall_seconds"] = report.wall_seconds;
  return out;
}

}  // namespace seshadri::app
