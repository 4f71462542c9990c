#pragma once

#include "seshadri/app/json_io.hpp"

#include <string>
#include <string_view>

namespace seshadri::app {

enum class Format { Json, Csv };

/// "json" or "csv"; anything else is an InputError.
Format parse_format(std::string_view name);

/// JSON: one compact line. CSV: a header row then one row per record, where
/// an array payload gives one record per element and an object payload gives
/// a single record. Nested values become compact JSON inside a quoted cell.
std::string emit(const Json& payload, Format format);

}  // namespace seshadri::app
