#include "cvsteer/fur.hpp"

#include <cmath>

#include "cvsteer/analytic.hpp"

namespace cvsteer {

namespace {

// Shared objective of both extremal curves: h(beta) =
// exp(-2(gamma-beta)^2) + exp(-2(gamma+beta)^2). The even average certainty
// is 1/2 + h/4 and the odd one 1/2 - h/4, so one maximization serves both.
double pair_mass(double gamma, double beta) {
  const double a = gamma - beta, b = gamma + beta;
  return std::exp(-2.0 * a * a) + std::exp(-2.0 * b * b);
}

double golden_maximize(double lo, double hi, double gamma, double* arg) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = pair_mass(gamma, x1);
  double f2 = pair_mass(gamma, x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = pair_mass(gamma, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = pair_mass(gamma, x1);
    }
  }
  *arg = 0.5 * (a + b);
  return pair_mass(gamma, *arg);
}

}  // namespace

double average_certainty(const MultiModeState& state, double beta, Parity outcome,
                         double tail_tol) {
  if (state.modes() != 1) throw DimensionMismatch("average certainty needs a single-mode state");
  const int dim = state.dims()[0];
  const DenseOperator plus = parity_projector({outcome, beta}, dim, tail_tol);
  const DenseOperator minus = parity_projector({outcome, -beta}, dim, tail_tol);
  const double p1 = expectation(state, {&plus}, ExpectationKind::probability);
  const double p2 = expectation(state, {&minus}, ExpectationKind::probability);
  return 0.5 * (p1 + p2);
}

FurReport check_fur(const MultiModeState& state, double beta, Parity outcome,
                    const ValidityRegion& region, double tolerance) {
  FurReport r;
  r.value = average_certainty(state, beta, outcome);
  r.parity = outcome;
  r.beta = beta;
  r.tolerance = tolerance;
  r.in_validity_region =
      std::abs(beta) >= region.beta_min || state.mean_photon_number(0) >= region.photon_floor;
  r.within_bounds = (r.value >= 0.25 - tolerance) && (r.value <= 0.75 + tolerance);
  return r;
}

Fig1Scan fig1_scan(const std::vector<double>& gamma_grid, const std::vector<double>& beta_grid,
                   const ValidityRegion& region) {
  if (gamma_grid.empty() || beta_grid.empty()) throw EmptyGrid("fig1 scan needs nonempty grids");
  for (double g : gamma_grid)
    if (!std::isfinite(g)) throw OutOfRange("gamma grid must be finite");
  for (double b : beta_grid)
    if (!std::isfinite(b)) throw OutOfRange("beta grid must be finite");

  Fig1Scan scan;
  scan.gamma_grid = gamma_grid;
  scan.beta_grid = beta_grid;
  scan.rows.reserve(gamma_grid.size());

  const int nb = static_cast<int>(beta_grid.size());
  for (double gamma : gamma_grid) {
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < nb; ++i) {
      const double v = pair_mass(gamma, beta_grid[i]);
      const bool better =
          v > best_val ||
          (v == best_val && (std::abs(beta_grid[i]) < std::abs(beta_grid[best]) ||
                             (std::abs(beta_grid[i]) == std::abs(beta_grid[best]) &&
                              beta_grid[i] > beta_grid[best])));
      if (better) {
        best = i;
        best_val = v;
      }
    }
    const double lo = beta_grid[std::max(0, best - 1)];
    const double hi = beta_grid[std::min(nb - 1, best + 1)];
    double arg = beta_grid[best];
    double h = best_val;
    if (hi > lo) h = golden_maximize(lo, hi, gamma, &arg);

    Fig1Row row;
    row.gamma = gamma;
    row.even_sup = 0.5 + 0.25 * h;
    row.even_argmax_beta = arg;
    row.odd_inf = 0.5 - 0.25 * h;
    row.odd_argmin_beta = arg;
    row.in_validity_region =
        std::abs(arg) >= region.beta_min || gamma * gamma >= region.photon_floor;
    scan.rows.push_back(row);
  }
  return scan;
}

}  // namespace cvsteer
