#ifndef CVSTEER_FUR_HPP
#define CVSTEER_FUR_HPP

#include "cvsteer/fock.hpp"
#include "cvsteer/scan.hpp"

namespace cvsteer {

inline constexpr double kDefaultBoundTol = 1e-4;

// Parameter domain where the averaged-certainty bounds are asserted:
// |beta| >= beta_min, or mean photon number >= photon_floor.
struct ValidityRegion {
  double beta_min = 0.05;
  double photon_floor = 1.0;
};

struct FurReport {
  double value = 0.0;
  Parity parity = Parity::even;
  double beta = 0.0;
  bool in_validity_region = false;
  bool within_bounds = false;  // 1/4 - tol <= value <= 3/4 + tol
  double tolerance = kDefaultBoundTol;
};

// 0.5 [<Pi(beta)> + <Pi(-beta)>] for a single-mode state, via the numeric
// projector path.
double average_certainty(const MultiModeState& state, double beta, Parity outcome,
                         double tail_tol = kDefaultTailTol);

// Evaluate and classify; reports, never throws on out-of-bound values.
FurReport check_fur(const MultiModeState& state, double beta, Parity outcome,
                    const ValidityRegion& region = {}, double tolerance = kDefaultBoundTol);

// For each gamma: supremum over beta of the even average certainty and
// infimum of the odd average certainty, by closed-form grid search refined
// with golden-section (1e-10 in beta). Ties break toward smallest |beta|,
// then positive sign.
Fig1Scan fig1_scan(const std::vector<double>& gamma_grid, const std::vector<double>& beta_grid,
                   const ValidityRegion& region = {});

}  // namespace cvsteer

#endif
