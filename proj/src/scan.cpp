#include "cvsteer/scan.hpp"

#include <cmath>

#include "cvsteer/errors.hpp"

namespace cvsteer {

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw EmptyGrid("grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw OutOfRange("grid bounds must be finite");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo + i * step;
  g.back() = hi;
  return g;
}

int64_t ScanResult::cell_count() const { return static_cast<int64_t>(values.size()); }

bool ScanResult::all_missing() const {
  for (const auto& v : values)
    if (v.has_value()) return false;
  return true;
}

}  // namespace cvsteer
