#pragma once

#include "seshadri/app/json_io.hpp"
#include "seshadri/jets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri::app {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  unsigned m_max = kDefaultMMax;
  std::optional<unsigned> degree_cap;
  std::size_t samples = kDefaultSamples;
};

/// wps, whs, jets, valuation, zariski, ruled, bounds.
const std::vector<std::string>& command_names();

/// Runs one subcommand on its JSON input. Bad input throws InputError (or
/// std::invalid_argument from the library); the result is a JSON record with
/// exact rational strings.
Json run_command(std::string_view name, const Json& input, const RunConfig& config);

}  // namespace seshadri::app
