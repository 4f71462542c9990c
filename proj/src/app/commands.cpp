#include "seshadri/app/commands.hpp"

#include "seshadri/bounds.hpp"
#include "seshadri/polynomial.hpp"
#include "seshadri/valuations.hpp"
#include "seshadri/wps.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace seshadri::app {

namespace {

unsigned as_unsigned(std::uint64_t v, const std::string& key) {
  if (v > 1'000'000) throw InputError("field \"" + key + "\" is too large");
  return static_cast<unsigned>(v);
}

std::string op_of(const Json& input, const std::string& fallback) {
  return input.contains("op") ? get_string(input, "op") : fallback;
}

// wps: {weights} or {catalog, params}

Json cmd_wps(const Json& input, const RunConfig&) {
  if (input.contains("catalog")) {
    const std::string name = get_string(input, "catalog");
    std::vector<long> params;
    for (const auto& p : require(input, "params")) {
      if (!p.is_number_integer()) throw InputError("catalog params must be integers");
      params.push_back(p.get<long>());
    }
    const CatalogEntry entry = catalog_seshadri(name, params);
    Json out;
    out["catalog"] = name;
    out["params"] = params;
    out["value"] = to_json(entry.value);
    out["citation"] = entry.citation;
    return out;
  }
  WeightVector w{get_uint_list(input, "weights")};
  Json out;
  out["weights"] = w.weights;
  out["seshadri"] = to_json(wps_seshadri(w));
  out["volume"] = to_json(wps_anticanonical_volume(w));
  return out;
}

Json cmd_whs(const Json& input, const RunConfig&) {
  WeightedHypersurfaceSpec spec{as_unsigned(get_uint(input, "n"), "n"), as_unsigned(get_uint(input, "k"), "k"),
                                as_unsigned(get_uint(input, "l"), "l"), as_unsigned(get_uint(input, "d"), "d")};
  const HypersurfaceBound b = whs_seshadri_bound(spec);
  Json out;
  out["n"] = spec.n;
  out["k"] = spec.k;
  out["l"] = spec.l;
  out["d"] = spec.d;
  out["r"] = b.r;
  out["m"] = b.m;
  out["bound"] = to_json(b.bound);
  out["equality"] = b.equality;
  out["volume"] = to_json(whs_volume(spec));
  return out;
}

// jets: series m -> degree d*m, every multiplicity order scaled by m.

struct JetsInput {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<MultiplicityCondition> mults;
  std::vector<SpanCondition> spans;
};

JetsInput parse_jets_input(const Json& input) {
  JetsInput in;
  in.n = as_unsigned(get_uint(input, "n"), "n");
  in.d = as_unsigned(get_uint(input, "d"), "d");
  if (in.n == 0) throw InputError("jets: n must be >= 1");
  if (input.contains("constraints")) {
    for (const auto& c : require(input, "constraints")) {
      const std::string type = get_string(c, "type");
      if (type == "mult") {
        Point p = point_from_json(require(c, "point"), "constraint point");
        if (p.size() != in.n) throw InputError("jets: constraint point must have n coordinates");
        in.mults.push_back({std::move(p), as_unsigned(get_uint(c, "order"), "order")});
      } else if (type == "span") {
        SpanCondition span;
        for (const auto& f : require(c, "basis")) {
          if (!f.is_string()) throw InputError("jets: span basis entries must be polynomial strings");
          span.basis.push_back(parse_rational_polynomial(f.get<std::string>(), in.n));
        }
        in.spans.push_back(std::move(span));
      } else {
        throw InputError("jets: unknown constraint type \"" + type + "\" (expected mult or span)");
      }
    }
  }
  return in;
}

LinearSystem jets_member(const JetsInput& in, unsigned m) {
  std::vector<Constraint> constraints;
  for (const auto& c : in.mults) constraints.emplace_back(MultiplicityCondition{c.point, c.order * m});
  for (const auto& s : in.spans) constraints.emplace_back(s);
  return LinearSystem(in.n, in.d * m, std::move(constraints));
}

std::vector<Point> jets_points(const Json& input, std::size_t n, const RunConfig& config) {
  if (!input.contains("point") || (input.at("point").is_string() && input.at("point").get<std::string>() == "random")) {
    RandomPointSampler sampler(config.seed);
    return sampler.sample_many(n, config.samples);
  }
  Point p = point_from_json(input.at("point"), "point");
  if (p.size() != n) throw InputError("jets: point must have n coordinates");
  return {p};
}

Json cmd_jets(const Json& input, const RunConfig& config) {
  const std::string op = op_of(input, "seshadri");
  if (op == "curve_bound") {
    const std::uint64_t mult = get_uint(input, "mult");
    const CurveUpperBound b = seshadri_upper_via_curve(rational_from_json(require(input, "pairing"), "pairing"),
                                                       as_unsigned(mult, "mult"), get_bool(input, "meets_base_locus", false));
    Json out;
    out["bound"] = to_json(b.bound);
    out["strict"] = b.strict;
    return out;
  }
  const JetsInput in = parse_jets_input(input);
  const auto points = jets_points(input, in.n, config);
  if (op == "separation") {
    const LinearSystem w = jets_member(in, 1);
    Json out;
    out["dimension"] = w.dimension();
    out["s"] = jet_separation_max(w, points);
    return out;
  }
  if (op != "seshadri") throw InputError("jets: unknown op \"" + op + "\" (expected seshadri, separation, curve_bound)");
  const unsigned m_max = input.contains("m_max") ? as_unsigned(get_uint(input, "m_max"), "m_max") : config.m_max;
  if (!in.spans.empty() && m_max > 1) throw InputError("jets: span constraints do not scale with m; use m_max = 1");
  std::vector<CurveRegistration> curves;
  if (input.contains("curves")) {
    for (const auto& c : input.at("curves")) {
      curves.push_back({rational_from_json(require(c, "pairing"), "curve pairing"),
                        as_unsigned(get_uint(c, "mult"), "mult"), get_bool(c, "meets_base_locus", false)});
    }
  }
  const SeshadriEstimate est =
      moving_seshadri_lower([&](unsigned m) { return jets_member(in, m); }, points, m_max, curves);
  Json out;
  out["m_values"] = est.m_values;
  out["s_values"] = est.s_values;
  out["lower"] = to_json(est.lower);
  out["upper"] = est.upper ? to_json(*est.upper) : Json(nullptr);
  out["certified"] = est.certified_equal;
  out["points"] = points.size();
  return out;
}

// valuation

MonomialValuation valuation_from_json(const Json& input) {
  std::vector<unsigned> w = get_uint_list(input, "weights");
  std::optional<Twist> twist;
  if (input.contains("twist") && !input.at("twist").is_null()) {
    const Json& t = input.at("twist");
    Twist tw;
    tw.exponent = as_unsigned(get_uint(t, "e"), "twist.e");
    const std::uint64_t radicand = t.contains("D") ? get_uint(t, "D") : 2;
    if (radicand < 2 || !is_square_free(static_cast<long>(radicand))) {
      throw InputError("twist: D must be a square-free integer >= 2");
    }
    tw.constant = Quadratic::sqrt_of(static_cast<long>(radicand));
    if (t.contains("coordinate")) tw.coordinate = get_uint(t, "coordinate");
    if (t.contains("base")) tw.base = get_uint(t, "base");
    twist = tw;
  }
  return MonomialValuation(std::move(w), std::move(twist));
}

QuadraticPolynomial valuation_polynomial(const Json& input, const MonomialValuation& nu) {
  const std::string text = get_string(input, "f");
  if (!nu.is_twisted()) return to_quadratic(parse_rational_polynomial(text, nu.nvars()));
  return parse_polynomial(text, nu.nvars());
}

Json cmd_valuation(const Json& input, const RunConfig& config) {
  const std::string op = get_string(input, "op");
  if (op == "galois") {
    const unsigned m = as_unsigned(get_uint(input, "m"), "m");
    const unsigned k = as_unsigned(get_uint(input, "k"), "k");
    std::optional<unsigned> cap = config.degree_cap;
    if (auto c = get_optional_uint(input, "degree_cap")) cap = as_unsigned(*c, "degree_cap");
    const GaloisResult g = galois_min_mult(m, k, cap);
    Json out;
    out["m"] = m;
    out["k"] = k;
    out["min_mult"] = g.min_mult;
    out["bound"] = to_json(g.bound);
    out["witness"] = g.witness.str();
    out["degree_cap"] = g.degree_cap;
    out["complete"] = g.complete;
    return out;
  }
  const MonomialValuation nu = valuation_from_json(input);
  Json out;
  if (op == "eval") {
    out["value"] = to_json(valuation_eval(nu, valuation_polynomial(input, nu)));
  } else if (op == "discrepancy") {
    out["a"] = discrepancy(nu);
  } else if (op == "izumi") {
    const IzumiRecord r = izumi_check(nu, valuation_polynomial(input, nu));
    out["lower"] = to_json(r.lower);
    out["value"] = to_json(r.value);
    out["upper"] = to_json(r.upper);
    out["holds"] = r.holds;
    out["nu_mx"] = r.nu_mx;
    out["nu_mx_source"] = r.nu_mx_from_twist ? "coordinate functions after twist" : "min(w)";
  } else if (op == "minmult") {
    const MinMultiplicity r = ideal_min_multiplicity(nu, as_unsigned(get_uint(input, "k"), "k"));
    out["min_mult"] = r.min_mult;
    out["lambda"] = to_json(r.lambda);
  } else {
    throw InputError("valuation: unknown op \"" + op + "\" (expected eval, discrepancy, izumi, minmult, galois)");
  }
  return out;
}

// zariski

SurfaceLattice lattice_from_json(const Json& input) {
  std::vector<std::string> names;
  for (const auto& g : require(input, "generators")) {
    if (!g.is_string()) throw InputError("zariski: generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  const Json& gram_json = require(input, "gram");
  const auto n = static_cast<Eigen::Index>(names.size());
  if (!gram_json.is_array() || static_cast<Eigen::Index>(gram_json.size()) != n) {
    throw InputError("zariski: gram must be a square array matching the generators");
  }
  RationalMatrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point row = point_from_json(gram_json[static_cast<std::size_t>(i)], "gram row");
    if (static_cast<Eigen::Index>(row.size()) != n) throw InputError("zariski: gram rows must have one entry per generator");
    for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = row[static_cast<std::size_t>(j)];
  }
  std::vector<DeclaredCurve> curves;
  std::size_t index = 0;
  for (const auto& c : require(input, "curves")) {
    DeclaredCurve curve;
    curve.name = c.contains("name") ? get_string(c, "name") : "C" + std::to_string(index);
    curve.cls = divisor_from_json(require(c, "coords"), "curve coords");
    curve.through_point = get_bool(c, "through", false);
    curve.mult = c.contains("mult") ? as_unsigned(get_uint(c, "mult"), "mult") : (curve.through_point ? 1 : 0);
    curves.push_back(std::move(curve));
    ++index;
  }
  return SurfaceLattice(std::move(names), std::move(gram), std::move(curves));
}

Json decomposition_json(const SurfaceLattice& lat, const ZariskiDecomposition& z) {
  Json out;
  out["P"] = to_json(z.positive);
  out["N"] = to_json(z.negative);
  Json support = Json::array();
  for (auto i : z.support) support.push_back(lat.curves()[i].name);
  out["support"] = support;
  out["coefficients"] = to_json(z.coefficients);
  out["checks"] = {{"nef", z.checks.nef}, {"orthogonal", z.checks.orthogonal}, {"negdef", z.checks.negdef}};
  return out;
}

Json seshadri_json(const PointSeshadri& s) {
  Json out;
  out["value"] = to_json(s.value);
  out["certified"] = s.certified;
  out["minimizer"] = s.minimizer;
  out["value_squared"] = to_json(s.value_squared);
  out["L_squared"] = to_json(s.volume);
  return out;
}

Json cmd_zariski(const Json& input, const RunConfig&) {
  const SurfaceLattice lat = lattice_from_json(input);
  const std::string op = op_of(input, "decompose");
  Json out;
  if (op == "decompose") {
    out = decomposition_json(lat, zariski_decomposition(lat, divisor_from_json(require(input, "D"), "D")));
  } else if (op == "seshadri") {
    out = seshadri_json(seshadri_at_marked_point(lat, divisor_from_json(require(input, "L"), "L")));
  } else {
    throw InputError("zariski: unknown op \"" + op + "\" (expected decompose or seshadri)");
  }
  out["assumption"] = SurfaceLattice::kCompletenessAssumption;
  return out;
}

// ruled: {g, d} or the sweep {g_max, d_max}

Json ruled_record(unsigned g, unsigned d) {
  const RuledSurfaceModel model = ruled_surface_model(g, d);
  Json out;
  out["g"] = g;
  out["d"] = d;
  out["minus_K"] = to_json(model.minus_k);
  out["P"] = to_json(model.decomposition.positive);
  out["N"] = to_json(model.decomposition.negative);
  out["epsilon_m"] = to_json(model.epsilon_m);
  out["closed_form"] = to_json(model.closed_form);
  out["closed_form_applies"] = model.closed_form_applies;
  out["volume"] = to_json(model.seshadri.volume);
  out["certified"] = model.seshadri.certified;
  return out;
}

Json cmd_ruled(const Json& input, const RunConfig&) {
  if (input.contains("g_max")) {
    const unsigned g_max = as_unsigned(get_uint(input, "g_max"), "g_max");
    const unsigned d_max = as_unsigned(get_uint(input, "d_max"), "d_max");
    Json rows = Json::array();
    for (unsigned g = 0; g <= g_max; ++g) {
      for (unsigned d = 1; d <= d_max; ++d) {
        if (static_cast<long>(d) > 2 * static_cast<long>(g) - 2) rows.push_back(ruled_record(g, d));
      }
    }
    return rows;
  }
  return ruled_record(as_unsigned(get_uint(input, "g"), "g"), as_unsigned(get_uint(input, "d"), "d"));
}

Json cmd_bounds(const Json& input, const RunConfig&) {
  const unsigned n = as_unsigned(get_uint(input, "n"), "n");
  const Rational eps = rational_from_json(require(input, "eps"), "eps");
  const std::string op = op_of(input, "best");
  Json out;
  if (op == "params") {
    VolumeBoundParams p{n, eps, rational_from_json(require(input, "a"), "a"), rational_from_json(require(input, "b"), "b"),
                        rational_from_json(require(input, "c"), "c")};
    out["value"] = to_json(volume_bound(p));
    return out;
  }
  if (op == "predicate") {
    const Rational vol = rational_from_json(require(input, "vol"), "vol");
    out["vol"] = to_json(vol);
    out["M"] = to_json(best_volume_bound(n, eps).m);
    out["holds"] = volume_bound_predicate(vol, n, eps);
    return out;
  }
  if (op != "best") throw InputError("bounds: unknown op \"" + op + "\" (expected best, params, predicate)");
  const VolumeBoundResult r = best_volume_bound(n, eps);
  const GridBracket grid = volume_bound_grid(n, eps);
  out["n"] = n;
  out["eps"] = to_json(eps);
  out["M"] = to_json(r.m);
  out["a"] = to_json(r.a);
  out["b"] = to_json(r.b);
  out["c"] = to_json(r.c);
  out["attained"] = r.attained;
  out["oracle_checked"] = grid_confirms(grid, r.m);
  out["grid_resolution"] = grid.resolution;
  out["grid_lower"] = to_json(grid.lower);
  out["grid_upper"] = to_json(grid.upper);
  out["conjectured_optimal_comparison"] = to_json(conjectured_optimal(n, eps));
  return out;
}

using Handler = std::function<Json(const Json&, const RunConfig&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"wps", cmd_wps},         {"whs", cmd_whs},         {"jets", cmd_jets},     {"valuation", cmd_valuation},
      {"zariski", cmd_zariski}, {"ruled", cmd_ruled},     {"bounds", cmd_bounds},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"wps", "whs", "jets", "valuation", "zariski", "ruled", "bounds"};
  return names;
}

Json run_command(std::string_view name, const Json& input, const RunConfig& config) {
  const auto& table = handlers();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown command \"" + std::string(name) + "\"");
  if (!input.is_object()) throw InputError(std::string(name) + ": input must be a JSON object");
  return it->second(input, config);
}

}  // namespace seshadri::app
