#pragma once

// Frozen list of the published example values the reproduction table must
// carry, each with the expected record checked against the source text by
// hand. Adding a published example means adding a row here.

#include "seshadri/app/json_io.hpp"

#include <string>
#include <vector>

namespace manifest {

struct Entry {
  std::string id;
  std::string command;
  const char* expected;
};

inline const std::vector<Entry>& published_entries() {
  static const std::vector<Entry> rows = {
      {"ex1.3-wps-seshadri-p3", "wps", R"({"seshadri": "4"})"},
      {"ex1.3-wps-seshadri-p112", "wps", R"({"seshadri": "2"})"},
      {"ex1.3-wps-volume-p112", "wps", R"({"volume": "8"})"},
      {"ex7.1-whs-bound-3235", "whs", R"({"r": 0, "m": 5, "bound": "5/2", "equality": true})"},
      {"ex7.1-whs-volume-3235", "whs", R"({"volume": "45/2"})"},
      {"ex7.2-catalog-x6-n3", "wps", R"({"value": "2"})"},
      {"ex7.4-catalog-ruled-g2d10", "wps", R"({"value": "4/5"})"},
      {"lem3.7-curve-bound-line", "jets", R"({"bound": "3", "strict": true})"},
      {"lem6.3-discrepancy-m2", "valuation", R"({"a": 2})"},
      {"lem6.3-discrepancy-m3", "valuation", R"({"a": 3})"},
      {"lem6.3-discrepancy-m5", "valuation", R"({"a": 5})"},
      {"ex7.4-zariski-g2d10", "zariski", R"({"P": ["4/5", "8"], "N": ["6/5", "0"], "support": ["E"]})"},
      {"ex7.4-seshadri-g2d10", "zariski", R"({"value": "4/5", "certified": true, "value_squared": "16/25", "L_squared": "32/5"})"},
      {"ex7.4-ruled-g2d10", "ruled", R"({"epsilon_m": "4/5", "P": ["4/5", "8"], "N": ["6/5", "0"]})"},
  };
  return rows;
}

/// True when every field of `want` appears in `got` with the same value.
inline bool contains(const seshadri::app::Json& got, const seshadri::app::Json& want) {
  if (want.is_object()) {
    if (!got.is_object()) return false;
    for (const auto& [k, v] : want.items()) {
      if (!got.contains(k) || !contains(got.at(k), v)) return false;
    }
    return true;
  }
  return got == want;
}

}  // namespace manifest
