#include "cvsteer/security.hpp"

#include <cmath>

namespace cvsteer {

namespace {

MonogamyReport make_report(double sba, double sbc, double tol) {
  MonogamyReport r;
  r.sigma_ba = sba;
  r.sigma_bc = sbc;
  r.combined = 0.5 * (sba + sbc);
  r.tolerance = tol;
  r.within_bounds = r.combined >= 0.5 - tol && r.combined <= 1.5 + tol;
  return r;
}

// P(b at mode 1 | cond at cond_mode) for a three-mode state, tracing out
// the uninvolved mode.
double cond3(const MultiModeState& state, const ParitySetting& b, int cond_mode,
             const ParitySetting& c, double tail_tol) {
  const DenseOperator pc = parity_projector(c, state.dims()[cond_mode], tail_tol);
  const DenseOperator pb = parity_projector(b, state.dims()[1], tail_tol);
  std::vector<const DenseOperator*> marg_ops(3, nullptr), joint_ops(3, nullptr);
  marg_ops[cond_mode] = &pc;
  joint_ops[cond_mode] = &pc;
  joint_ops[1] = &pb;
  const double marg = expectation(state, marg_ops);
  if (marg < kConditioningFloor)
    throw DegenerateConditioning("conditioning marginal below 1e-12");
  return std::clamp(expectation(state, joint_ops) / marg, 0.0, 1.0);
}

}  // namespace

MonogamyReport monogamy_check(const MultiModeState& state,
                              const std::pair<ParitySetting, ParitySetting>& alice,
                              const std::pair<ParitySetting, ParitySetting>& bob,
                              const std::pair<ParitySetting, ParitySetting>& charlie, double tol,
                              double tail_tol) {
  if (state.modes() != 3) throw DimensionMismatch("monogamy check needs a three-mode state");
  const double sba = cond3(state, bob.first, 0, alice.first, tail_tol) +
                     cond3(state, bob.second, 0, alice.second, tail_tol);
  const double sbc = cond3(state, bob.first, 2, charlie.first, tail_tol) +
                     cond3(state, bob.second, 2, charlie.second, tail_tol);
  return make_report(sba, sbc, tol);
}

MonogamyReport monogamy_check(const CoherentMixture& mix,
                              const std::pair<ParitySetting, ParitySetting>& alice,
                              const std::pair<ParitySetting, ParitySetting>& bob,
                              const std::pair<ParitySetting, ParitySetting>& charlie, int dim,
                              double tol, double tail_tol) {
  if (mix.modes() != 3) throw DimensionMismatch("monogamy check needs a three-mode mixture");
  const double sba = mixture_conditional_prob(mix, 1, bob.first, 0, alice.first, dim, tail_tol) +
                     mixture_conditional_prob(mix, 1, bob.second, 0, alice.second, dim, tail_tol);
  const double sbc =
      mixture_conditional_prob(mix, 1, bob.first, 2, charlie.first, dim, tail_tol) +
      mixture_conditional_prob(mix, 1, bob.second, 2, charlie.second, dim, tail_tol);
  return make_report(sba, sbc, tol);
}

KeyRateResult key_rate_lower_bound(double delta) {
  if (!(delta > 0.0) || delta > 0.25)
    throw OutOfRange("delta must lie in (0, 1/4], got " + std::to_string(delta));
  return {delta, std::log2((0.75 + delta) / (0.75 - delta))};
}

double delta_from_violation(double value) {
  if (!(value > 0.75) || value > 1.0)
    throw OutOfRange("violation value must lie in (3/4, 1], got " + std::to_string(value));
  return value - 0.75;
}

double mutual_information(const std::array<std::array<double, 2>, 2>& joint) {
  double sum = 0.0;
  for (const auto& row : joint)
    for (double p : row) {
      if (p < 0.0 || !std::isfinite(p))
        throw InvalidDistribution("joint table entries must be finite and >= 0");
      sum += p;
    }
  if (std::abs(sum - 1.0) > 1e-10)
    throw InvalidDistribution("joint table must sum to 1 within 1e-10");

  const std::array<double, 2> pa = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
  const std::array<double, 2> pb = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
  double mi = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double p = joint[i][j];
      if (p > 0.0) mi += p * std::log2(p / (pa[i] * pb[j]));
    }
  return std::max(mi, 0.0);
}

DiscreteBaseline discrete_baseline() {
  DiscreteBaseline b;
  const double half_inv_sqrt2 = 0.5 / std::sqrt(2.0);
  b.lower = 0.5 - half_inv_sqrt2;
  b.upper = 0.5 + half_inv_sqrt2;
  b.steering_threshold_upper = b.upper;
  b.discrete_key_rate_lower_bound = 0.5;
  b.continuous_upper = 0.75;
  b.continuous_lower = 0.25;
  return b;
}

MonogamySample sample_monogamy_case(std::mt19937_64& rng, const MonogamySamplerConfig& cfg) {
  MixtureSamplerConfig mcfg;
  mcfg.modes = 3;
  mcfg.min_terms = cfg.min_terms;
  mcfg.max_terms = cfg.max_terms;
  mcfg.gamma_lo = cfg.gamma_lo;
  mcfg.gamma_hi = cfg.gamma_hi;

  MonogamySample s;
  s.mixture = sample_coherent_mixture(rng, mcfg);

  std::uniform_real_distribution<double> bob_disp(cfg.disp_lo, cfg.bob_disp_hi);
  std::uniform_real_distribution<double> other_disp(cfg.disp_lo, cfg.disp_hi);
  std::uniform_int_distribution<int> bit(0, 1);

  const Parity b = static_cast<Parity>(bit(rng));
  const Parity a = static_cast<Parity>(bit(rng));
  const Parity c = static_cast<Parity>(bit(rng));
  const double beta = bob_disp(rng);
  const double alpha1 = other_disp(rng);
  const double alpha2 = other_disp(rng);
  const double chi1 = other_disp(rng);
  const double chi2 = other_disp(rng);

  s.bob = {{b, beta}, {b, -beta}};
  s.alice = {{a, alpha1}, {a, -alpha2}};
  s.charlie = {{c, chi1}, {c, -chi2}};
  return s;
}

}  // namespace cvsteer
