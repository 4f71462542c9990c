#include "seshadri/app/cases.hpp"

#include "seshadri/app/commands.hpp"

#include <algorithm>
#include <set>

namespace seshadri::app {

namespace {

constexpr std::string_view kCaseTable = R"JSON([
  {"id": "ex1.3-wps-seshadri-p3", "command": "wps", "input": {"weights": [1, 1, 1, 1]},
   "expected": {"seshadri": "4"}, "provenance": "PAPER",
   "citation": "weighted projective space formula with all weights 1 recovers eps(-K) = n + 1 on P^3"},
  {"id": "ex1.3-wps-seshadri-p112", "command": "wps", "input": {"weights": [1, 1, 2]},
   "expected": {"seshadri": "2"}, "provenance": "PAPER",
   "citation": "family P(1,1,d,...,d): eps(-K) = n - 1 + 2/d at n = 2, d = 2"},
  {"id": "ex1.3-wps-volume-p112", "command": "wps", "input": {"weights": [1, 1, 2]},
   "expected": {"volume": "8"}, "provenance": "PAPER",
   "citation": "family P(1,1,d,...,d): vol(-K) = (2 + (n-1)d)^n / d^(n-1) at n = 2, d = 2"},
  {"id": "ex1.3-wps-seshadri-p123", "command": "wps", "input": {"weights": [1, 2, 3]},
   "expected": {"seshadri": "2"}, "provenance": "DERIVED",
   "citation": "direct evaluation of (1 + a_1 + ... + a_n)/a_n"},
  {"id": "ex1.3-wps-volume-p123", "command": "wps", "input": {"weights": [1, 2, 3]},
   "expected": {"volume": "6"}, "provenance": "DERIVED",
   "citation": "direct evaluation of (1 + sum a_i)^n / prod a_i = 36/6"},
  {"id": "ex1.3-wps-volume-p2", "command": "wps", "input": {"weights": [1, 1, 1]},
   "expected": {"volume": "9"}, "provenance": "TRIVIAL",
   "citation": "vol(-K) of the projective plane is 3^2"},
  {"id": "ex1.3-wps-reject-unsorted", "command": "wps", "input": {"weights": [1, 3, 2]},
   "expected": {"error": "sorted"}, "provenance": "TRIVIAL",
   "citation": "the formula is stated for a_1 <= ... <= a_n"},

  {"id": "ex7.1-whs-bound-3235", "command": "whs", "input": {"n": 3, "k": 2, "l": 3, "d": 5},
   "expected": {"r": 0, "m": 5, "bound": "5/2", "equality": true}, "provenance": "PAPER",
   "citation": "weighted hypersurface bound (n - r)m/(kl) with equality since d <= kl"},
  {"id": "ex7.1-whs-volume-3235", "command": "whs", "input": {"n": 3, "k": 2, "l": 3, "d": 5},
   "expected": {"volume": "45/2"}, "provenance": "PAPER",
   "citation": "weighted hypersurface volume (n - r)^n d/(kl) = 27*5/6"},
  {"id": "ex7.1-whs-bound-3124", "command": "whs", "input": {"n": 3, "k": 1, "l": 2, "d": 4},
   "expected": {"m": 4, "bound": "4", "equality": false}, "provenance": "DERIVED",
   "citation": "formula evaluation, m = 4 = 2*1 + 1*2, d > kl so bound only"},
  {"id": "ex7.1-whs-bound-2124", "command": "whs", "input": {"n": 2, "k": 1, "l": 2, "d": 4},
   "expected": {"r": 1, "m": 4, "bound": "2", "equality": false}, "provenance": "DERIVED",
   "citation": "formula evaluation, r = 1, 1*4/2"},
  {"id": "ex7.1-whs-volume-3124", "command": "whs", "input": {"n": 3, "k": 1, "l": 2, "d": 4},
   "expected": {"volume": "16"}, "provenance": "DERIVED", "citation": "2^3 * 4/2"},
  {"id": "ex7.1-whs-volume-2124", "command": "whs", "input": {"n": 2, "k": 1, "l": 2, "d": 4},
   "expected": {"volume": "2"}, "provenance": "DERIVED", "citation": "1^2 * 4/2"},

  {"id": "ex7.2-catalog-x6-n3", "command": "wps", "input": {"catalog": "X6", "params": [3]},
   "expected": {"value": "2"}, "provenance": "PAPER",
   "citation": "catalog value eps(-K) = 2n/3 for the degree-6 hypersurface in P(1^(n-1),2,2,3)"},
  {"id": "ex7.4-catalog-ruled-g2d10", "command": "wps", "input": {"catalog": "ruled", "params": [2, 10]},
   "expected": {"value": "4/5"}, "provenance": "PAPER",
   "citation": "catalog value eps_m(-K) = 1 - (2g-2)/d for the ruled surface"},
  {"id": "ex7.4-catalog-ruled-g1d5", "command": "wps", "input": {"catalog": "ruled", "params": [1, 5]},
   "expected": {"value": "1"}, "provenance": "TRIVIAL", "citation": "2g - 2 = 0"},

  {"id": "lem3.7-curve-bound-line", "command": "jets",
   "input": {"op": "curve_bound", "pairing": "3", "mult": 1, "meets_base_locus": true},
   "expected": {"bound": "3", "strict": true}, "provenance": "PAPER",
   "citation": "curve bound s(W,x) <= (L.C)/mult_x C, strict for a line through the base point of plane cubics"},
  {"id": "lem3.7-curve-bound-conic", "command": "jets",
   "input": {"op": "curve_bound", "pairing": "4", "mult": 2, "meets_base_locus": false},
   "expected": {"bound": "2", "strict": false}, "provenance": "TRIVIAL", "citation": "4/2"},
  {"id": "lem3.7-curve-bound-zero", "command": "jets",
   "input": {"op": "curve_bound", "pairing": "0", "mult": 1, "meets_base_locus": false},
   "expected": {"bound": "0", "strict": false}, "provenance": "TRIVIAL", "citation": "L.C = 0 forces s <= 0"},
  {"id": "lem3.7-curve-bound-reject-mult0", "command": "jets",
   "input": {"op": "curve_bound", "pairing": "1", "mult": 0},
   "expected": {"error": "mult"}, "provenance": "TRIVIAL", "citation": "the curve must pass through x"},

  {"id": "eq1.1-jets-cubics", "command": "jets", "input": {"op": "separation", "n": 2, "d": 3, "point": "random"},
   "expected": {"dimension": 10, "s": 3}, "provenance": "TRIVIAL",
   "citation": "the complete degree-d system separates d-jets"},
  {"id": "eq1.1-jets-cubics-mult1", "command": "jets",
   "input": {"op": "separation", "n": 2, "d": 3, "point": "random",
             "constraints": [{"type": "mult", "point": [0, 0], "order": 1}]},
   "expected": {"dimension": 9, "s": 2}, "provenance": "DERIVED",
   "citation": "rank check: 9-dimensional system against 6 jet conditions"},
  {"id": "eq1.1-jets-cubics-mult4", "command": "jets",
   "input": {"op": "separation", "n": 2, "d": 3, "point": "random",
             "constraints": [{"type": "mult", "point": [0, 0], "order": 4}]},
   "expected": {"dimension": 0, "s": -1}, "provenance": "TRIVIAL", "citation": "empty system"},
  {"id": "eq1.1-moving-complete", "command": "jets", "input": {"n": 2, "d": 3, "m_max": 2},
   "expected": {"s_values": [3, 6], "lower": "3"}, "provenance": "TRIVIAL", "citation": "eps(O(3)) = 3 on the plane"},
  {"id": "eq1.1-moving-empty", "command": "jets",
   "input": {"n": 2, "d": 3, "m_max": 1, "constraints": [{"type": "mult", "point": [0, 0], "order": 4}]},
   "expected": {"s_values": [-1], "lower": "-1"}, "provenance": "TRIVIAL", "citation": "no sections"},
  {"id": "thm1.6-moving-blowup-n2", "command": "jets",
   "input": {"n": 2, "d": 3, "m_max": 3, "point": "random",
             "constraints": [{"type": "mult", "point": [0, 0], "order": 1}],
             "curves": [{"pairing": "2", "mult": 1, "meets_base_locus": false}]},
   "expected": {"s_values": [2, 4, 6], "lower": "2", "upper": "2", "certified": true}, "provenance": "DERIVED",
   "citation": "eps(L) = eps_m(L) = n for L = pullback of -K minus the exceptional divisor, n = 2, certified by the line through p"},

  {"id": "lem6.3-eval-13", "command": "valuation", "input": {"op": "eval", "weights": [1, 3], "f": "t^2+s^7"},
   "expected": {"value": 6}, "provenance": "DERIVED", "citation": "min(2*3, 7)"},
  {"id": "lem6.3-eval-11", "command": "valuation", "input": {"op": "eval", "weights": [1, 1], "f": "s*t"},
   "expected": {"value": 2}, "provenance": "TRIVIAL", "citation": "multiplicity valuation"},
  {"id": "lem6.4-eval-twisted", "command": "valuation",
   "input": {"op": "eval", "weights": [1, 2], "twist": {"e": 1, "D": 2}, "f": "t^2-2*s^2"},
   "expected": {"value": 3}, "provenance": "DERIVED", "citation": "substitution gives y^2 + 2 sqrt(2) s y, min(4, 3)"},
  {"id": "lem6.3-eval-zero", "command": "valuation", "input": {"op": "eval", "weights": [1, 3], "f": "0"},
   "expected": {"value": "inf"}, "provenance": "TRIVIAL", "citation": "zero polynomial convention"},
  {"id": "lem6.3-discrepancy-m2", "command": "valuation", "input": {"op": "discrepancy", "weights": [1, 2]},
   "expected": {"a": 2}, "provenance": "PAPER", "citation": "a = N beta + N - 1 = m for N = 1, beta = m"},
  {"id": "lem6.3-discrepancy-m3", "command": "valuation", "input": {"op": "discrepancy", "weights": [1, 3]},
   "expected": {"a": 3}, "provenance": "PAPER", "citation": "a = N beta + N - 1 = m for N = 1, beta = m"},
  {"id": "lem6.3-discrepancy-m5", "command": "valuation", "input": {"op": "discrepancy", "weights": [1, 5]},
   "expected": {"a": 5}, "provenance": "PAPER", "citation": "a = N beta + N - 1 = m for N = 1, beta = m"},
  {"id": "lem6.3-discrepancy-111", "command": "valuation", "input": {"op": "discrepancy", "weights": [1, 1, 1]},
   "expected": {"a": 2}, "provenance": "TRIVIAL", "citation": "ordinary point blowup in dimension 3"},
  {"id": "lem6.3-discrepancy-23", "command": "valuation", "input": {"op": "discrepancy", "weights": [2, 3]},
   "expected": {"a": 4}, "provenance": "DERIVED", "citation": "sum(w) - 1"},
  {"id": "lem6.1-izumi-13", "command": "valuation", "input": {"op": "izumi", "weights": [1, 3], "f": "t^2+s^7"},
   "expected": {"lower": 2, "value": 6, "upper": 6, "holds": true}, "provenance": "DERIVED",
   "citation": "nu(m_x) = 1, mult = 2, a = 3; upper bound attained"},
  {"id": "lem6.1-izumi-11", "command": "valuation", "input": {"op": "izumi", "weights": [1, 1], "f": "s"},
   "expected": {"lower": 1, "value": 1, "upper": 1, "holds": true}, "provenance": "TRIVIAL",
   "citation": "equality throughout"},
  {"id": "lem6.1-izumi-25", "command": "valuation", "input": {"op": "izumi", "weights": [2, 5], "f": "s+t"},
   "expected": {"lower": 2, "value": 2, "upper": 6, "holds": true}, "provenance": "DERIVED",
   "citation": "nu(m_x) = 2, mult = 1, a = 6"},
  {"id": "lem6.3-minmult-12-k3", "command": "valuation", "input": {"op": "minmult", "weights": [1, 2], "k": 3},
   "expected": {"min_mult": 3, "lambda": "1"}, "provenance": "DERIVED",
   "citation": "a = 2, t^3 has valuation 6; mu = 1 + (1 - 1/N)/beta with N = 1"},
  {"id": "lem6.3-minmult-23-k3", "command": "valuation", "input": {"op": "minmult", "weights": [2, 3], "k": 3},
   "expected": {"min_mult": 4, "lambda": "4/3"}, "provenance": "DERIVED",
   "citation": "a = 4, t^4 has valuation 12; mu = 1 + (1 - 1/N)/beta with N = 2, beta = 3/2"},
  {"id": "lem6.2-minmult-112-k2", "command": "valuation", "input": {"op": "minmult", "weights": [1, 1, 2], "k": 2},
   "expected": {"min_mult": 3, "lambda": "3/2"}, "provenance": "DERIVED",
   "citation": "a = 3, z^3; lambda = 1 + 1/m for a codimension-3 center of length m = 2"},
  {"id": "lem6.4-galois-m2k1", "command": "valuation", "input": {"op": "galois", "m": 2, "k": 1},
   "expected": {"min_mult": 2, "bound": "4/3", "witness": "t^2-2*s^2"}, "provenance": "DERIVED",
   "citation": "no rational linear form lies in (s^2, t - sqrt(2) s)"},
  {"id": "lem6.4-galois-m2k3", "command": "valuation", "input": {"op": "galois", "m": 2, "k": 3},
   "expected": {"min_mult": 4, "bound": "4", "witness": "t^4-4*s^2*t^2+4*s^4"}, "provenance": "DERIVED",
   "citation": "(t^2 - 2 s^2)^2 lies in J_3 and attains the bound 2mk/(2m-1)"},
  {"id": "lem6.4-galois-m3k2", "command": "valuation", "input": {"op": "galois", "m": 3, "k": 2},
   "expected": {"min_mult": 3, "bound": "12/5"}, "provenance": "DERIVED",
   "citation": "graded brute force; only min_mult >= ceil(12/5) is known a priori"},

  {"id": "ex7.4-zariski-g2d10", "command": "zariski",
   "input": {"generators": ["E", "F"], "gram": [[-10, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "D": {"coords": [2, 8]}},
   "expected": {"P": ["4/5", "8"], "N": ["6/5", "0"], "support": ["E"],
                "checks": {"nef": true, "orthogonal": true, "negdef": true}},
   "provenance": "PAPER",
   "citation": "Zariski decomposition -K = (1 + (2g-2)/d)E + (1 - (2g-2)/d)(E + dF) at g = 2, d = 10"},
  {"id": "ex7.4-zariski-nef", "command": "zariski",
   "input": {"generators": ["E", "F"], "gram": [[-10, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "D": {"coords": [1, 10]}},
   "expected": {"P": ["1", "10"], "N": ["0", "0"], "support": []}, "provenance": "TRIVIAL",
   "citation": "a nef divisor is its own positive part"},
  {"id": "ex7.4-zariski-negative-section", "command": "zariski",
   "input": {"generators": ["E", "F"], "gram": [[-10, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "D": {"coords": [1, 0]}},
   "expected": {"P": ["0", "0"], "N": ["1", "0"], "support": ["E"]}, "provenance": "DERIVED",
   "citation": "single-step solve, P.E = 0 forces P = 0"},
  {"id": "ex7.4-seshadri-g2d10", "command": "zariski",
   "input": {"op": "seshadri", "generators": ["E", "F"], "gram": [[-10, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "L": {"coords": ["4/5", "8"]}},
   "expected": {"value": "4/5", "certified": true, "value_squared": "16/25", "L_squared": "32/5"},
   "provenance": "PAPER", "citation": "eps_m(-K) = 1 - (2g-2)/d on the positive part, g = 2, d = 10"},
  {"id": "ex7.4-seshadri-zero", "command": "zariski",
   "input": {"op": "seshadri", "generators": ["E", "F"], "gram": [[-10, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "L": {"coords": [0, 1]}},
   "expected": {"value": "0", "certified": true}, "provenance": "TRIVIAL",
   "citation": "L.F = 0 for the through-curve F"},
  {"id": "ex7.4-seshadri-g1d5", "command": "zariski",
   "input": {"op": "seshadri", "generators": ["E", "F"], "gram": [[-5, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "L": {"coords": [1, 5]}},
   "expected": {"value": "1", "certified": true, "value_squared": "1", "L_squared": "5"}, "provenance": "DERIVED",
   "citation": "positive part E + 5F of -K at g = 1, d = 5; exact Gram evaluation"},
  {"id": "ex7.4-seshadri-g1d5-reject-minus-k", "command": "zariski",
   "input": {"op": "seshadri", "generators": ["E", "F"], "gram": [[-5, 1], [1, 0]],
             "curves": [{"name": "E", "coords": [1, 0], "through": false},
                        {"name": "F", "coords": [0, 1], "through": true, "mult": 1}],
             "L": {"coords": [2, 5]}},
   "expected": {"error": "not nef"}, "provenance": "DERIVED",
   "citation": "-K = 2E + 5F has -K.E = -5 < 0"},
  {"id": "ex7.4-ruled-g2d10", "command": "ruled", "input": {"g": 2, "d": 10},
   "expected": {"epsilon_m": "4/5", "P": ["4/5", "8"], "N": ["6/5", "0"]}, "provenance": "PAPER",
   "citation": "eps_m(-K) = 1 - (2g-2)/d through decomposition and Seshadri constant of the positive part"},
  {"id": "ex7.4-ruled-g1d5", "command": "ruled", "input": {"g": 1, "d": 5},
   "expected": {"epsilon_m": "1"}, "provenance": "TRIVIAL", "citation": "2g - 2 = 0"},
  {"id": "ex7.4-ruled-g3d8", "command": "ruled", "input": {"g": 3, "d": 8},
   "expected": {"epsilon_m": "1/2"}, "provenance": "DERIVED", "citation": "1 - 4/8, pipeline recomputation"},
  {"id": "ex7.4-ruled-reject", "command": "ruled", "input": {"g": 3, "d": 4},
   "expected": {"error": "d > 2g - 2"}, "provenance": "TRIVIAL", "citation": "positive part must be big"},

  {"id": "thm1.4-volume-bound-n2", "command": "bounds",
   "input": {"op": "params", "n": 2, "eps": "1", "a": "3/4", "b": "1/8", "c": "1/16"},
   "expected": {"value": "1024"}, "provenance": "DERIVED", "citation": "max{64 * (1/2)^2, 256 * 4}"},
  {"id": "thm1.4-volume-bound-n1", "command": "bounds",
   "input": {"op": "params", "n": 1, "eps": "1", "a": "1/2", "b": "1/4", "c": "1/8"},
   "expected": {"value": "8"}, "provenance": "DERIVED", "citation": "max{4 * 1/2, 8 * 1}"},
  {"id": "thm1.4-volume-bound-infeasible-a", "command": "bounds",
   "input": {"op": "params", "n": 2, "eps": "1", "a": "1/2", "b": "1/8", "c": "1/16"},
   "expected": {"error": "a-constraint"}, "provenance": "TRIVIAL", "citation": "a < (n-1+eps/2)/(n-1+eps)"},
  {"id": "thm1.4-best-n2-eps1", "command": "bounds", "input": {"n": 2, "eps": "1"},
   "expected": {"M": "100", "a": "3/4", "attained": false, "oracle_checked": true}, "provenance": "DERIVED",
   "citation": "closed form ((n + 1 - eps/2)/s)^n with s = 1/4, grid oracle at resolution 1/256"},
  {"id": "thm1.4-best-n1-eps1", "command": "bounds", "input": {"n": 1, "eps": "1"},
   "expected": {"M": "3", "oracle_checked": true}, "provenance": "DERIVED", "citation": "(3/2)/(1/2)"},
  {"id": "thm1.4-best-reject-eps2", "command": "bounds", "input": {"n": 2, "eps": "2"},
   "expected": {"error": "eps must be < 2"}, "provenance": "TRIVIAL", "citation": "1 - eps/2 must stay positive"},
  {"id": "thm1.4-predicate-p112", "command": "bounds", "input": {"op": "predicate", "vol": "8", "n": 2, "eps": "1"},
   "expected": {"holds": true}, "provenance": "DERIVED", "citation": "8 <= 100"},
  {"id": "thm1.4-predicate-p2", "command": "bounds", "input": {"op": "predicate", "vol": "9", "n": 2, "eps": "1"},
   "expected": {"holds": true}, "provenance": "TRIVIAL", "citation": "the plane satisfies every bound"},
  {"id": "thm1.4-predicate-family-d40", "command": "bounds",
   "input": {"op": "predicate", "vol": "441/10", "n": 2, "eps": "1/20"},
   "expected": {"holds": true}, "provenance": "DERIVED",
   "citation": "P(1,1,40) with vol 42^2/40 sits inside the bound for eps = 1/20"}
])JSON";

const std::set<std::string>& provenance_tags() {
  static const std::set<std::string> tags{"PAPER", "DERIVED", "TRIVIAL"};
  return tags;
}

}  // namespace

std::string_view builtin_case_table_text() { return kCaseTable; }

std::vector<ReproductionCase> parse_case_table(std::string_view text) {
  Json table;
  try {
    table = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CaseTableError(std::string("case table: ") + e.what());
  }
  if (!table.is_array()) throw CaseTableError("case table: expected an array of cases");
  const auto& commands = command_names();
  std::set<std::string> seen;
  std::vector<ReproductionCase> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Json& c = table[i];
    const std::string where = "case table entry " + std::to_string(i);
    auto text_field = [&](const char* key) {
      if (!c.is_object() || !c.contains(key) || !c.at(key).is_string() || c.at(key).get<std::string>().empty()) {
        throw CaseTableError(where + ": missing or empty \"" + key + "\"");
      }
      return c.at(key).get<std::string>();
    };
    ReproductionCase rc;
    rc.id = text_field("id");
    rc.command = text_field("command");
    rc.provenance = text_field("provenance");
    rc.citation = text_field("citation");
    if (!seen.insert(rc.id).second) throw CaseTableError(where + ": duplicate id \"" + rc.id + "\"");
    if (std::find(commands.begin(), commands.end(), rc.command) == commands.end()) {
      throw CaseTableError(where + " (" + rc.id + "): unknown command \"" + rc.command + "\"");
    }
    if (!provenance_tags().count(rc.provenance)) {
      throw CaseTableError(where + " (" + rc.id + "): provenance must be PAPER, DERIVED or TRIVIAL");
    }
    if (!c.contains("input") || !c.at("input").is_object()) throw CaseTableError(where + ": input must be an object");
    if (!c.contains("expected") || !c.at("expected").is_object() || c.at("expected").empty()) {
      throw CaseTableError(where + ": expected must be a nonempty object");
    }
    rc.input = c.at("input");
    rc.expected = c.at("expected");
    out.push_back(std::move(rc));
  }
  return out;
}

const std::vector<ReproductionCase>& builtin_cases() {
  static const std::vector<ReproductionCase> cases = parse_case_table(kCaseTable);
  return cases;
}

}  // namespace seshadri::app
