#ifndef CVSTEER_STEERING_HPP
#define CVSTEER_STEERING_HPP

#include <random>
#include <utility>

#include "cvsteer/fock.hpp"
#include "cvsteer/scan.hpp"

namespace cvsteer {

// Two settings per party. The conventional choice mirrors the second
// setting: alpha2 = -alpha1, beta2 = -beta1.
struct SteeringSettings {
  std::pair<ParitySetting, ParitySetting> alice;
  std::pair<ParitySetting, ParitySetting> bob;

  static SteeringSettings mirrored(Parity a, double alpha, Parity b, double beta) {
    return {{{a, alpha}, {a, -alpha}}, {{b, beta}, {b, -beta}}};
  }
};

enum class ViolationSide { none, upper, lower };

// margin: amount beyond the violated bound; when not violated it is
// max(value - 3/4, 1/4 - value), i.e. negative distance to the nearer bound.
struct SteeringReport {
  double value = 0.0;
  bool violated = false;
  ViolationSide side = ViolationSide::none;
  double margin = 0.0;
  SteeringSettings settings;
};

// Tr[rho (Pi^a(alpha) x Pi^b(beta))]; Alice is mode 0, Bob mode 1.
double joint_parity_prob(const MultiModeState& state, const ParitySetting& a,
                         const ParitySetting& b, double tail_tol = kDefaultTailTol);

// P(b|a) = joint / marginal, clamped to [0,1]. DegenerateConditioning when
// the conditioning marginal falls below 1e-12.
double conditional_prob(const MultiModeState& state, const ParitySetting& b,
                        const ParitySetting& a, double tail_tol = kDefaultTailTol);

// 0.5 [P(b1|a1) + P(b2|a2)]; values outside [1/4 - tol, 3/4 + tol] certify
// that no local-hidden-state model reproduces the correlations.
SteeringReport steering_functional(const MultiModeState& state, const SteeringSettings& settings,
                                   double tol = 1e-4, double tail_tol = kDefaultTailTol);

// Grid scan of the mirrored-settings functional ((alpha,-alpha),(beta,-beta))
// with fixed outcomes. Cells with degenerate conditioning become missing
// values; global max/min recorded with row-major first-occurrence ties.
ScanResult violation_search(const MultiModeState& state, const std::vector<double>& alpha_grid,
                            const std::vector<double>& beta_grid, Parity b, Parity a,
                            double tol = 1e-4, double tail_tol = kDefaultTailTol);

struct NoonCase {
  Parity b;
  Parity a;
  ViolationSide side;
};

// Outcome combinations that extremize the functional for the two-mode
// number-entangled state: which (b, a) pairs reach the upper and lower
// bounds depends on the photon-number parity.
std::vector<NoonCase> noon_case_table(int n_photons);

// --- separable coherent mixtures -------------------------------------------
//
// Finite convex mixture of products of single-mode coherent states: the
// local-hidden-state construction used by the containment property tests
// and the monogamy sampler. Evaluated per term with per-mode displaced
// vectors, so no joint density matrix is ever formed.
struct CoherentMixture {
  std::vector<double> weights;              // convex; normalized by normalize()
  std::vector<std::vector<double>> gammas;  // [term][mode]

  int modes() const { return gammas.empty() ? 0 : static_cast<int>(gammas.front().size()); }
  int terms() const { return static_cast<int>(weights.size()); }
  void validate() const;
  double max_abs_gamma() const;
};

// Single-mode parity probability of coherent |gamma> through the numeric
// displacement path (matches the projector expectation identically).
double coherent_parity_prob(double gamma, const ParitySetting& s, int dim,
                            double tail_tol = kDefaultTailTol);

// Joint P(a at cond_mode, b at outcome_mode) for the mixture.
double mixture_joint_prob(const CoherentMixture& mix, int cond_mode, const ParitySetting& a,
                          int outcome_mode, const ParitySetting& b, int dim,
                          double tail_tol = kDefaultTailTol);

double mixture_conditional_prob(const CoherentMixture& mix, int outcome_mode,
                                const ParitySetting& b, int cond_mode, const ParitySetting& a,
                                int dim, double tail_tol = kDefaultTailTol);

// Two-mode mixture functional (Alice mode 0, Bob mode 1).
SteeringReport steering_functional(const CoherentMixture& mix, const SteeringSettings& settings,
                                   int dim, double tol = 1e-4,
                                   double tail_tol = kDefaultTailTol);

struct MixtureSamplerConfig {
  int modes = 2;
  int min_terms = 1;
  int max_terms = 10;
  double gamma_lo = 1.0;  // amplitudes drawn positive: containment holds
  double gamma_hi = 2.0;  // provably only for same-sign ensembles
};

CoherentMixture sample_coherent_mixture(std::mt19937_64& rng, const MixtureSamplerConfig& cfg);

}  // namespace cvsteer

#endif
