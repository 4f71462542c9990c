#include "published_manifest.hpp"

#include "seshadri/app/cases.hpp"
#include "seshadri/app/commands.hpp"
#include "seshadri/app/emit.hpp"
#include "seshadri/app/reproduce.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace seshadri;
using namespace seshadri::app;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SESHADRI_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

const char* kOneCase = R"([{"id": "x-1", "command": "wps", "input": {"weights": [1, 1, 2]},
  "expected": {"seshadri": "%s"}, "provenance": "DERIVED", "citation": "test"}])";

std::string one_case(const std::string& value) {
  std::string s = kOneCase;
  s.replace(s.find("%s"), 2, value);
  return s;
}

}  // namespace

TEST_CASE("emit json and csv") {
  CHECK(emit(Json{{"seshadri", "4/5"}}, Format::Json) == "{\"seshadri\":\"4/5\"}\n");
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), InputError);

  const std::string csv = emit(Json::array({Json{{"a", 1}, {"b", "1/2"}}, Json{{"a", 2}, {"b", "3"}}}), Format::Csv);
  CHECK(csv == "a,b\n1,1/2\n2,3\n");
}

TEST_CASE("csv ruled sweep has one row per feasible pair") {
  const RunConfig config;
  const Json sweep = run_command("ruled", Json{{"g_max", 2}, {"d_max", 12}}, config);
  std::size_t feasible = 0;
  for (int g = 0; g <= 2; ++g) {
    for (int d = 1; d <= 12; ++d) feasible += (d > 2 * g - 2) ? 1 : 0;
  }
  const std::string csv = emit(sweep, Format::Csv);
  std::size_t lines = 0;
  for (char c : csv) lines += (c == '\n') ? 1 : 0;
  CHECK(lines == feasible + 1);
  CHECK(csv.rfind("g,d,", 0) == 0);
}

TEST_CASE("emit then parse round-trips the hypersurface record") {
  const RunConfig config;
  const Json record = run_command("whs", Json{{"n", 3}, {"k", 2}, {"l", 3}, {"d", 5}}, config);
  CHECK(record.at("bound") == "5/2");
  CHECK(record.at("volume") == "45/2");
  CHECK(record.at("equality") == true);
  const Json back = parse_json(emit(record, Format::Json), "round trip");
  CHECK(back == record);
  CHECK(back.dump() == record.dump());
}

TEST_CASE("command input errors") {
  const RunConfig config;
  CHECK_THROWS_AS(run_command("nope", Json::object(), config), std::invalid_argument);
  CHECK_THROWS_AS(run_command("wps", Json{{"weights", {1, 3, 2}}}, config), std::invalid_argument);
  CHECK_THROWS_AS(run_command("whs", Json{{"n", 3}}, config), std::invalid_argument);
  CHECK_THROWS_AS(run_command("bounds", Json{{"n", 2}, {"eps", "0"}}, config), std::invalid_argument);
  CHECK_THROWS_AS(run_command("valuation", Json{{"op", "eval"}, {"weights", {1, 2}}, {"f", "s +"}}, config),
                  std::invalid_argument);
}

TEST_CASE("case table validation") {
  CHECK(parse_case_table(one_case("2")).size() == 1);
  const std::string dup = R"([
    {"id": "a", "command": "wps", "input": {}, "expected": {}, "provenance": "TRIVIAL", "citation": "x"},
    {"id": "a", "command": "wps", "input": {}, "expected": {}, "provenance": "TRIVIAL", "citation": "x"}])";
  CHECK_THROWS_AS(parse_case_table(dup), CaseTableError);
  const std::string bad_tag = R"([
    {"id": "a", "command": "wps", "input": {}, "expected": {}, "provenance": "GUESS", "citation": "x"}])";
  CHECK_THROWS_AS(parse_case_table(bad_tag), CaseTableError);
  const std::string bad_cmd = R"([
    {"id": "a", "command": "plot", "input": {}, "expected": {}, "provenance": "TRIVIAL", "citation": "x"}])";
  CHECK_THROWS_AS(parse_case_table(bad_cmd), CaseTableError);
  const std::string no_cite = R"([
    {"id": "a", "command": "wps", "input": {}, "expected": {}, "provenance": "TRIVIAL", "citation": ""}])";
  CHECK_THROWS_AS(parse_case_table(no_cite), CaseTableError);
  CHECK_THROWS_AS(parse_case_table("{not json"), CaseTableError);
  CHECK_NOTHROW(builtin_cases());
}

TEST_CASE("reproduction table covers the frozen published manifest") {
  const auto& cases = builtin_cases();
  std::set<std::string> manifest_ids;
  for (const auto& e : manifest::published_entries()) {
    CAPTURE(e.id);
    manifest_ids.insert(e.id);
    const auto it = std::find_if(cases.begin(), cases.end(), [&](const ReproductionCase& c) { return c.id == e.id; });
    REQUIRE(it != cases.end());
    CHECK(it->provenance == "PAPER");
    CHECK(it->command == e.command);
    const Json want = Json::parse(e.expected);
    CHECK(manifest::contains(it->expected, want));
    CHECK(manifest::contains(run_command(it->command, it->input, RunConfig{}), want));
  }
  for (const auto& c : cases) {
    if (c.provenance == "PAPER") CHECK(manifest_ids.count(c.id) == 1);
  }
}

TEST_CASE("reproduction runs") {
  const RunConfig config;
  const auto full = run_reproduction(std::nullopt, config);
  CHECK(full.ok());
  CHECK(full.cases_run == builtin_cases().size());
  CHECK(full.passes == builtin_cases().size());

  const auto ex13 = run_reproduction(std::string("ex1.3"), config);
  CHECK(ex13.ok());
  CHECK(ex13.cases_run >= 3);
  for (const auto& id : ex13.ids) CHECK(id.rfind("ex1.3", 0) == 0);

  const auto none = run_reproduction(std::string("none-matching"), config);
  CHECK(none.ok());
  CHECK(none.cases_run == 0);

  const auto wrong = run_reproduction(std::nullopt, config, parse_case_table(one_case("3")));
  CHECK_FALSE(wrong.ok());
  REQUIRE(wrong.failures.size() == 1);
  CHECK(wrong.failures[0].expected == "3");
  CHECK(wrong.failures[0].actual == "2");
}

TEST_CASE("reports are byte-identical across runs") {
  const RunConfig config;
  const auto a = emit(report_to_json(run_reproduction(std::nullopt, config), false), Format::Json);
  const auto b = emit(report_to_json(run_reproduction(std::nullopt, config), false), Format::Json);
  CHECK(a == b);
  const auto r1 = run_cli("reproduce");
  const auto r2 = run_cli("reproduce");
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == a);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("wps --weights 1,1,2").status == 0);
  CHECK(run_cli("wps --weights 1,1,2").out == "{\"weights\":[1,1,2],\"seshadri\":\"2\",\"volume\":\"8\"}\n");
  CHECK(run_cli("reproduce --filter none-matching").status == 0);
  CHECK(run_cli("wps --weights 1,3,2").status == 2);
  CHECK(run_cli("--format xml wps --weights 1,1").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("bounds --n 2 --eps 2").status == 2);
  CHECK(run_cli("zariski --json '{\"generators\":[\"E\",\"F\"],\"gram\":[[-10,1],[1,0]],"
                "\"curves\":[{\"name\":\"E\",\"coords\":[1,0],\"through\":false},"
                "{\"name\":\"F\",\"coords\":[0,1],\"through\":true,\"mult\":1}],\"D\":{\"coords\":[-1,0]}}'")
            .status == 2);

  const auto good = write_temp("seshadri_cases_good.json", one_case("2"));
  const auto bad = write_temp("seshadri_cases_bad.json", one_case("3"));
  const auto broken = write_temp("seshadri_cases_broken.json", "[{\"id\": \"x\"}]");
  CHECK(run_cli("reproduce --cases " + good.string()).status == 0);
  const auto failed = run_cli("reproduce --cases " + bad.string());
  CHECK(failed.status == 1);
  CHECK(failed.out.find("\"failed\":1") != std::string::npos);
  CHECK(run_cli("reproduce --cases " + broken.string()).status == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  std::filesystem::remove(broken);
}

TEST_CASE("generic values do not depend on the seed") {
  const Json jets_input = Json::parse(R"({"n": 2, "d": 3, "constraints": [{"type": "mult", "point": ["0", "0"], "order": 1}],
                                          "point": "random", "m_max": 3, "curves": [{"pairing": "2", "mult": 1}]})");
  RunConfig a;
  RunConfig b;
  b.seed = 12345;
  const Json ra = run_command("jets", jets_input, a);
  const Json rb = run_command("jets", jets_input, b);
  CHECK(ra.at("lower") == "2");
  CHECK(rb.at("lower") == "2");
  CHECK(ra.at("certified") == true);
  CHECK(ra.at("points") == 3);
  CHECK(ra == rb);
  CHECK(ra == run_command("jets", jets_input, a));
}
