#pragma once

// Record rendering shared by the CLI output modes.  CSV carries the fixed
// header family,N,k,value; JSON lines carry the same four fields (plus any
// extras) with identical values.  Numbers are never locale-formatted.

#include <cstdint>
#include <string>
#include <vector>

namespace cuspdim {

struct OutputRecord {
  std::string family;
  std::int64_t level = 0;
  int k = 0;
  std::string value;  // integer, decimal, or exact fraction "p/q"
  std::vector<std::pair<std::string, std::string>> extras;
};

inline const char* csv_header() { return "family,N,k,value"; }
std::string csv_row(const OutputRecord& r);
std::string json_line(const OutputRecord& r);

}  // namespace cuspdim
