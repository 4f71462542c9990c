#include "seshadri/app/json_io.hpp"

#include <limits>

namespace seshadri::app {

Json to_json(const Rational& x) { return x.str(); }
Json to_json(const Quadratic& x) { return x.str(); }

Json to_json(const ExtendedNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

Json to_json(const DivisorClass& d) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < d.coords.size(); ++i) out.push_back(d.coords(i).str());
  return out;
}

Json to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(static_cast<long long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  throw InputError(what + ": expected a rational as \"p/q\" or an integer");
}

Point point_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of coordinates");
  Point out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

DivisorClass divisor_from_json(const Json& j, const std::string& what) {
  const Json& coords = j.is_object() ? require(j, "coords") : j;
  const Point p = point_from_json(coords, what);
  DivisorClass out{RationalVector(static_cast<Eigen::Index>(p.size()))};
  for (std::size_t i = 0; i < p.size(); ++i) out.coords(static_cast<Eigen::Index>(i)) = p[i];
  return out;
}

const Json& require(const Json& obj, const std::string& key) {
  if (!obj.is_object()) throw InputError("expected a JSON object with field \"" + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + key + "\"");
  return *it;
}

std::uint64_t get_uint(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw InputError("field \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::optional<std::uint64_t> get_optional_uint(const Json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return get_uint(obj, key);
}

std::string get_string(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) throw InputError("field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

bool get_bool(const Json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_boolean()) throw InputError("field \"" + key + "\" must be true or false");
  return v.get<bool>();
}

std::vector<unsigned> get_uint_list(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_array()) throw InputError("field \"" + key + "\" must be an array of integers");
  std::vector<unsigned> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || (!x.is_number_unsigned() && x.get<std::int64_t>() < 0) ||
        x.get<std::uint64_t>() > std::numeric_limits<unsigned>::max()) {
      throw InputError("field \"" + key + "\" must contain non-negative integers");
    }
    out.push_back(x.get<unsigned>());
  }
  return out;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace seshadri::app
