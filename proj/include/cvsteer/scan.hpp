#ifndef CVSTEER_SCAN_HPP
#define CVSTEER_SCAN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cvsteer {

// Evenly spaced grid, endpoints inclusive. count == 1 yields {lo}.
std::vector<double> linspace(double lo, double hi, int count);

struct Extremum {
  std::string kind;  // "max" or "min"
  double value = 0.0;
  std::vector<double> location;  // one coordinate per axis
  std::vector<int64_t> indices;
};

struct ScanMeta {
  int schema_version = 1;
  std::string tool_version;
  std::vector<int> dims;
  double tail_tolerance = 0.0;
  double bound_tolerance = 0.0;
  double beta_min = 0.0;
  uint64_t seed = 0;
  // Full effective configuration, flag -> rendered value.
  std::map<std::string, std::string> effective_config;
};

// Rectangular grid of functional values. values is row-major over the axes
// (axis 0 slowest); cells that could not be evaluated are nullopt.
struct ScanResult {
  std::vector<std::string> axis_names;
  std::vector<std::vector<double>> axes;
  std::vector<std::optional<double>> values;
  std::vector<Extremum> extrema;
  ScanMeta meta;

  int64_t cell_count() const;
  bool all_missing() const;
};

// One row of the paired-certainty extremal scan: the supremum of the even
// average certainty and infimum of the odd average certainty over beta.
struct Fig1Row {
  double gamma = 0.0;
  double even_sup = 0.0;
  double even_argmax_beta = 0.0;
  double odd_inf = 0.0;
  double odd_argmin_beta = 0.0;
  bool in_validity_region = false;
};

struct Fig1Scan {
  std::vector<double> gamma_grid;
  std::vector<double> beta_grid;
  std::vector<Fig1Row> rows;
};

}  // namespace cvsteer

#endif
