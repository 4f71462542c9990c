#include "seshadri/app/emit.hpp"

#include <algorithm>

namespace seshadri::app {

namespace {

std::string csv_cell(const Json& v) {
  std::string text;
  if (v.is_null()) return "";
  if (v.is_string()) {
    text = v.get<std::string>();
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string emit_csv(const Json& payload) {
  Json records = payload.is_array() ? payload : Json::array({payload});
  std::vector<std::string> header;
  for (const auto& r : records) {
    if (!r.is_object()) throw InputError("csv: every record must be a JSON object");
    for (const auto& item : r.items()) {
      if (std::find(header.begin(), header.end(), item.key()) == header.end()) header.push_back(item.key());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + csv_cell(header[i]);
  out += "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += ",";
      auto it = r.find(header[i]);
      if (it != r.end()) out += csv_cell(*it);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InputError("unknown format \"" + std::string(name) + "\" (expected json or csv)");
}

std::string emit(const Json& payload, Format format) {
  if (format == Format::Json) return payload.dump() + "\n";
  return emit_csv(payload);
}

}  // namespace seshadri::app
