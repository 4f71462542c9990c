#pragma once

#include "seshadri/app/json_io.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri::app {

/// One frozen reproduction case: run `command` on `input` and compare the
/// fields listed in `expected` (a subset of the output record). An expected
/// record {"error": text} instead requires the command to fail with a message
/// containing text.
struct ReproductionCase {
  std::string id;
  std::string command;
  Json input;
  Json expected;
  std::string provenance;  ///< PAPER, DERIVED or TRIVIAL
  std::string citation;
};

class CaseTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates a case table: unique ids, known commands, a
/// provenance tag and a citation on every case. Throws CaseTableError.
std::vector<ReproductionCase> parse_case_table(std::string_view text);

/// The built-in table, validated on first use.
const std::vector<ReproductionCase>& builtin_cases();

/// Raw JSON text of the built-in table.
std::string_view builtin_case_table_text();

}  // namespace seshadri::app
