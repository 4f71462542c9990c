// Command-line front end: one subcommand per module plus `reproduce`.
#include "seshadri/app/commands.hpp"
#include "seshadri/app/emit.hpp"
#include "seshadri/app/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

using seshadri::app::Json;

constexpr int kExitOk = 0;
constexpr int kExitReproductionFailure = 1;
constexpr int kExitInputError = 2;

struct Sources {
  std::string json;
  std::string file;
};

std::string read_input(const Sources& src) {
  if (!src.json.empty() && !src.file.empty()) throw seshadri::app::InputError("give either --json or --input, not both");
  if (!src.json.empty()) return src.json;
  if (src.file.empty()) return "{}";
  if (src.file == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(src.file);
  if (!in) throw seshadri::app::InputError("cannot read input file " + src.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Seshadri constants, jet separation, valuations and Zariski decompositions"};
  app.require_subcommand(1);

  std::string format = "json";
  seshadri::app::RunConfig config;
  unsigned degree_cap = 0;
  app.add_option("--format", format, "Output format: json or csv")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for the random points used by jets")->capture_default_str();
  app.add_option("--m-max", config.m_max, "Largest m in moving Seshadri estimates")->capture_default_str();
  auto* cap_opt = app.add_option("--degree-cap", degree_cap,
                                 "Initial weighted degree cap for galois (default 4mk, doubled up to 16mk)");
  app.add_option("--samples", config.samples, "Number of random points per jets computation")->capture_default_str();

  std::map<std::string, Sources> sources;
  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> descriptions{
      {"wps", "Weighted projective space invariants, or --json '{\"catalog\":\"X6\",\"params\":[3]}'"},
      {"whs", "Weighted hypersurface bound and volume"},
      {"jets", "Jet separation and moving Seshadri lower bounds"},
      {"valuation", "Monomial and twisted valuations: eval, discrepancy, izumi, minmult, galois"},
      {"zariski", "Zariski decomposition and Seshadri constant on a divisor-class lattice"},
      {"ruled", "Ruled-surface model: {g, d} or a sweep {g_max, d_max}"},
      {"bounds", "Volume-bound constant: best, params or predicate"},
  };
  for (const auto& name : seshadri::app::command_names()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->fallthrough();
    sub->add_option("--json", sources[name].json, "Input record as inline JSON");
    sub->add_option("--input", sources[name].file, "Read the input record from a file, or - for stdin");
    subs[name] = sub;
  }

  std::vector<unsigned> weights;
  subs["wps"]->add_option("--weights", weights, "Weights 1,a_1,...,a_n")->delimiter(',');
  std::map<std::string, long long> numbers;
  for (const char* key : {"n", "k", "l", "d"}) subs["whs"]->add_option(std::string("--") + key, numbers[std::string("whs.") + key]);
  for (const char* key : {"g", "d"}) subs["ruled"]->add_option(std::string("--") + key, numbers[std::string("ruled.") + key]);
  subs["bounds"]->add_option("--n", numbers["bounds.n"]);
  std::string eps;
  subs["bounds"]->add_option("--eps", eps, "eps as p/q");

  auto* reproduce = app.add_subcommand("reproduce", "Re-derive every stored example and report pass/fail");
  reproduce->fallthrough();
  std::string filter;
  bool timing = false;
  bool list = false;
  reproduce->add_option("--filter", filter, "Only run cases whose id starts with this prefix");
  reproduce->add_flag("--timing", timing, "Include wall time in the report");
  reproduce->add_flag("--list", list, "List case ids with provenance and citation, without running");
  std::string cases_file;
  reproduce->add_option("--cases", cases_file, "Run a case table from this JSON file instead of the built-in one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const auto fmt = seshadri::app::parse_format(format);
    if (cap_opt->count() > 0) config.degree_cap = degree_cap;

    if (reproduce->parsed()) {
      std::vector<seshadri::app::ReproductionCase> custom;
      if (!cases_file.empty()) custom = seshadri::app::parse_case_table(read_input({"", cases_file}));
      const auto& cases = cases_file.empty() ? seshadri::app::builtin_cases() : custom;
      if (list) {
        Json rows = Json::array();
        for (const auto& c : cases) {
          rows.push_back({{"id", c.id}, {"command", c.command}, {"provenance", c.provenance}, {"citation", c.citation}});
        }
        std::cout << seshadri::app::emit(rows, fmt);
        return kExitOk;
      }
      const auto report = seshadri::app::run_reproduction(
          filter.empty() ? std::nullopt : std::optional<std::string>(filter), config, cases);
      std::cout << seshadri::app::emit(seshadri::app::report_to_json(report, timing), fmt);
      return report.ok() ? kExitOk : kExitReproductionFailure;
    }

    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      Json input = seshadri::app::parse_json(read_input(sources[name]), name + " input");
      if (!input.is_object()) throw seshadri::app::InputError(name + ": input must be a JSON object");
      if (name == "wps" && !weights.empty()) input["weights"] = weights;
      for (const auto& [key, value] : numbers) {
        const auto dot = key.find('.');
        if (key.substr(0, dot) != name) continue;
        auto* opt = sub->get_option("--" + key.substr(dot + 1));
        if (opt->count() > 0) input[key.substr(dot + 1)] = value;
      }
      if (name == "bounds" && !eps.empty()) input["eps"] = eps;
      std::cout << seshadri::app::emit(seshadri::app::run_command(name, input, config), fmt);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const seshadri::app::CaseTableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const seshadri::ZariskiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReproductionFailure;
  }
  return kExitInputError;
}
