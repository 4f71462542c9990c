#pragma once

#include "seshadri/extended_nat.hpp"
#include "seshadri/jets.hpp"
#include "seshadri/quadratic.hpp"
#include "seshadri/rational.hpp"
#include "seshadri/surfaces.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seshadri::app {

/// Insertion-ordered, so field order in every record is fixed by the code
/// that builds it.
using Json = nlohmann::ordered_json;

/// Malformed or out-of-range user input (exit status 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& x);
Json to_json(const Quadratic& x);
/// Integer, or the string "inf".
Json to_json(const ExtendedNat& x);
Json to_json(const DivisorClass& d);
Json to_json(const std::vector<Rational>& xs);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& what);
Point point_from_json(const Json& j, const std::string& what);
DivisorClass divisor_from_json(const Json& j, const std::string& what);

const Json& require(const Json& obj, const std::string& key);
std::uint64_t get_uint(const Json& obj, const std::string& key);
std::optional<std::uint64_t> get_optional_uint(const Json& obj, const std::string& key);
std::string get_string(const Json& obj, const std::string& key);
bool get_bool(const Json& obj, const std::string& key, bool fallback);
std::vector<unsigned> get_uint_list(const Json& obj, const std::string& key);

/// Parses JSON text, reporting syntax errors as InputError.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace seshadri::app
