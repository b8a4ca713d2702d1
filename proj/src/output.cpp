#include "cuspdim/output.hpp"

#include <json.hpp>

namespace cuspdim {

std::string csv_row(const OutputRecord& r) {
  std::string row = r.family;
  row += ',';
  row += std::to_string(r.level);
  row += ',';
  row += std::to_string(r.k);
  row += ',';
  row += r.value;
  for (const auto& [key, val] : r.extras) {
    (void)key;  // CSV carries positional extras in declaration order
    row += ',';
    row += val;
  }
  return row;
}

std::string json_line(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["N"] = r.level;
  j["k"] = r.k;
  j["value"] = r.value;
  for (const auto& [key, val] : r.extras) j[key] = val;
  return j.dump();
}

}  // namespace cuspdim
