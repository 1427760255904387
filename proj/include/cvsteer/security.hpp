#ifndef CVSTEER_SECURITY_HPP
#define CVSTEER_SECURITY_HPP

#include <array>

#include "cvsteer/steering.hpp"

namespace cvsteer {

// Two-party steering sums against a shared Bob. combined = (S_BA + S_BC)/2
// is confined to [1/2, 3/2] for any local-hidden-state model within the
// averaged-certainty hypotheses.
struct MonogamyReport {
  double sigma_ba = 0.0;
  double sigma_bc = 0.0;
  double combined = 0.0;
  bool within_bounds = false;
  double tolerance = 1e-4;
};

// Mode convention: 0 = Alice, 1 = Bob, 2 = Charlie. Bob's settings are
// shared across both sums.
MonogamyReport monogamy_check(const MultiModeState& state,
                              const std::pair<ParitySetting, ParitySetting>& alice,
                              const std::pair<ParitySetting, ParitySetting>& bob,
                              const std::pair<ParitySetting, ParitySetting>& charlie,
                              double tol = 1e-4, double tail_tol = kDefaultTailTol);

MonogamyReport monogamy_check(const CoherentMixture& mix,
                              const std::pair<ParitySetting, ParitySetting>& alice,
                              const std::pair<ParitySetting, ParitySetting>& bob,
                              const std::pair<ParitySetting, ParitySetting>& charlie, int dim,
                              double tol = 1e-4, double tail_tol = kDefaultTailTol);

struct KeyRateResult {
  double delta = 0.0;
  double rate_lower_bound = 0.0;  // bits per shared state
};

// r >= log2((3/4 + delta)/(3/4 - delta)) for an upper-side violation by
// delta in (0, 1/4].
KeyRateResult key_rate_lower_bound(double delta);

// delta = value - 3/4 for value in (3/4, 1].
double delta_from_violation(double value);

// I(B:A) in bits for a 2x2 joint outcome table (entries >= 0, sum 1).
double mutual_information(const std::array<std::array<double, 2>, 2>& joint);

// Qubit-measurement reference constants for comparison with the
// continuous-variable bounds.
struct DiscreteBaseline {
  double lower = 0.0;                         // 1/2 - 1/(2 sqrt 2)
  double upper = 0.0;                         // 1/2 + 1/(2 sqrt 2)
  double steering_threshold_upper = 0.0;      // same as upper
  double discrete_key_rate_lower_bound = 0.0; // 1/2
  double continuous_upper = 0.0;              // 3/4
  double continuous_lower = 0.0;              // 1/4
};

DiscreteBaseline discrete_baseline();

// --- monogamy sampling -------------------------------------------------------

// Tripartite separable sampler. Amplitudes are drawn positive in
// [gamma_lo, gamma_hi]; Bob's mirrored displacement stays in
// [disp_lo, bob_disp_hi] with bob_disp_hi < gamma_lo so the two-sided bound
// holds with a provable margin. Alice/Charlie displacements roam
// [disp_lo, disp_hi].
struct MonogamySamplerConfig {
  int min_terms = 1;
  int max_terms = 5;
  double gamma_lo = 1.0;
  double gamma_hi = 2.5;
  double disp_lo = 0.05;
  double disp_hi = 1.5;
  double bob_disp_hi = 0.9;
};

struct MonogamySample {
  CoherentMixture mixture;
  std::pair<ParitySetting, ParitySetting> alice;
  std::pair<ParitySetting, ParitySetting> bob;
  std::pair<ParitySetting, ParitySetting> charlie;
};

MonogamySample sample_monogamy_case(std::mt19937_64& rng, const MonogamySamplerConfig& cfg);

}  // namespace cvsteer

#endif
