#include "cvsteer/steering.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cvsteer {

namespace {

void require_two_modes(const MultiModeState& state) {
  if (state.modes() != 2) throw DimensionMismatch("steering evaluation needs a two-mode state");
}

SteeringReport classify(double value, const SteeringSettings& settings, double tol) {
  SteeringReport r;
  r.value = value;
  r.settings = settings;
  if (value > 0.75 + tol) {
    r.violated = true;
    r.side = ViolationSide::upper;
    r.margin = value - 0.75;
  } else if (value < 0.25 - tol) {
    r.violated = true;
    r.side = ViolationSide::lower;
    r.margin = 0.25 - value;
  } else {
    r.side = ViolationSide::none;
    r.margin = std::max(value - 0.75, 0.25 - value);
  }
  return r;
}

}  // namespace

double joint_parity_prob(const MultiModeState& state, const ParitySetting& a,
                         const ParitySetting& b, double tail_tol) {
  require_two_modes(state);
  const DenseOperator pa = parity_projector(a, state.dims()[0], tail_tol);
  const DenseOperator pb = parity_projector(b, state.dims()[1], tail_tol);
  return expectation(state, {&pa, &pb}, ExpectationKind::probability);
}

double conditional_prob(const MultiModeState& state, const ParitySetting& b,
                        const ParitySetting& a, double tail_tol) {
  require_two_modes(state);
  const DenseOperator pa = parity_projector(a, state.dims()[0], tail_tol);
  const double marg = expectation(state, {&pa, nullptr}, ExpectationKind::probability);
  if (marg < kConditioningFloor)
    throw DegenerateConditioning("conditioning marginal " + std::to_string(marg) +
                                 " below 1e-12");
  const DenseOperator pb = parity_projector(b, state.dims()[1], tail_tol);
  const double joint = expectation(state, {&pa, &pb}, ExpectationKind::probability);
  return std::clamp(joint / marg, 0.0, 1.0);
}

SteeringReport steering_functional(const MultiModeState& state, const SteeringSettings& settings,
                                   double tol, double tail_tol) {
  const double p1 = conditional_prob(state, settings.bob.first, settings.alice.first, tail_tol);
  const double p2 = conditional_prob(state, settings.bob.second, settings.alice.second, tail_tol);
  return classify(0.5 * (p1 + p2), settings, tol);
}

ScanResult violation_search(const MultiModeState& state, const std::vector<double>& alpha_grid,
                            const std::vector<double>& beta_grid, Parity b, Parity a, double tol,
                            double tail_tol) {
  require_two_modes(state);
  if (alpha_grid.empty() || beta_grid.empty())
    throw EmptyGrid("violation search needs nonempty grids");

  const int da = state.dims()[0];
  const int db = state.dims()[1];
  const int na = static_cast<int>(alpha_grid.size());
  const int nb = static_cast<int>(beta_grid.size());

  // Alice projectors and conditioning marginals depend only on alpha.
  std::vector<DenseOperator> pa_pos, pa_neg;
  std::vector<double> marg_pos, marg_neg;
  pa_pos.reserve(na);
  pa_neg.reserve(na);
  for (double alpha : alpha_grid) {
    pa_pos.push_back(parity_projector({a, alpha}, da, tail_tol));
    pa_neg.push_back(parity_projector({a, -alpha}, da, tail_tol));
    marg_pos.push_back(expectation(state, {&pa_pos.back(), nullptr}));
    marg_neg.push_back(expectation(state, {&pa_neg.back(), nullptr}));
  }
  std::vector<DenseOperator> pb_pos, pb_neg;
  pb_pos.reserve(nb);
  pb_neg.reserve(nb);
  for (double beta : beta_grid) {
    pb_pos.push_back(parity_projector({b, beta}, db, tail_tol));
    pb_neg.push_back(parity_projector({b, -beta}, db, tail_tol));
  }

  ScanResult result;
  result.axis_names = {"alpha", "beta"};
  result.axes = {alpha_grid, beta_grid};
  result.values.assign(static_cast<size_t>(na) * nb, std::nullopt);
  result.meta.dims = state.dims();

  bool have = false;
  double vmax = 0.0, vmin = 0.0;
  int64_t imax = 0, imin = 0;
  for (int i = 0; i < na; ++i) {
    const bool ok1 = marg_pos[i] >= kConditioningFloor;
    const bool ok2 = marg_neg[i] >= kConditioningFloor;
    if (!ok1 || !ok2) continue;  // degenerate conditioning: whole row missing
    for (int j = 0; j < nb; ++j) {
      const double j1 = expectation(state, {&pa_pos[i], &pb_pos[j]});
      const double j2 = expectation(state, {&pa_neg[i], &pb_neg[j]});
      const double value =
          0.5 * (std::clamp(j1 / marg_pos[i], 0.0, 1.0) + std::clamp(j2 / marg_neg[i], 0.0, 1.0));
      const int64_t cell = static_cast<int64_t>(i) * nb + j;
      result.values[cell] = value;
      if (!have || value > vmax) {
        vmax = value;
        imax = cell;
      }
      if (!have || value < vmin) {
        vmin = value;
        imin = cell;
      }
      have = true;
    }
  }

  if (have) {
    auto loc = [&](int64_t cell) {
      return std::vector<double>{alpha_grid[cell / nb], beta_grid[cell % nb]};
    };
    result.extrema.push_back({"max", vmax, loc(imax), {imax / nb, imax % nb}});
    result.extrema.push_back({"min", vmin, loc(imin), {imin / nb, imin % nb}});
  }
  result.meta.bound_tolerance = tol;
  result.meta.tail_tolerance = tail_tol;
  return result;
}

std::vector<NoonCase> noon_case_table(int n_photons) {
  if (n_photons < 1) throw OutOfRange("photon number must be >= 1");
  using enum Parity;
  if (n_photons % 2 == 0)
    return {{even, even, ViolationSide::upper},
            {even, odd, ViolationSide::upper},
            {odd, even, ViolationSide::lower},
            {odd, odd, ViolationSide::lower}};
  return {{even, odd, ViolationSide::upper},
          {odd, even, ViolationSide::upper},
          {even, even, ViolationSide::lower},
          {odd, odd, ViolationSide::lower}};
}

// --- coherent mixtures -------------------------------------------------------

void CoherentMixture::validate() const {
  if (weights.empty() || weights.size() != gammas.size())
    throw InvalidDistribution("mixture needs matching weights and terms");
  const size_t m = gammas.front().size();
  if (m == 0) throw DimensionMismatch("mixture terms need at least one mode");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) throw InvalidDistribution("mixture weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw InvalidDistribution("mixture weights must sum to 1");
  for (const auto& term : gammas)
    if (term.size() != m) throw DimensionMismatch("mixture terms must share the mode count");
}

double CoherentMixture::max_abs_gamma() const {
  double m = 0.0;
  for (const auto& term : gammas)
    for (double g : term) m = std::max(m, std::abs(g));
  return m;
}

double coherent_parity_prob(double gamma, const ParitySetting& s, int dim, double tail_tol) {
  const FockVector state = coherent_state(gamma, dim, tail_tol);
  const DenseOperator d = displacement_operator(s.displacement, dim, tail_tol);
  const Vec u = d.entries().adjoint() * state.amps();
  double even = 0.0;
  for (int n = 0; n < dim; n += 2) even += std::norm(u[n]);
  even = std::clamp(even, 0.0, 1.0);
  return s.outcome == Parity::even ? even : 1.0 - even;
}

namespace {

// Per-call cache of single-mode parity probs keyed by (gamma, displacement).
class MixtureProbCache {
 public:
  MixtureProbCache(int dim, double tail_tol) : dim_(dim), tail_tol_(tail_tol) {}

  double prob(double gamma, const ParitySetting& s) {
    const auto key = std::make_pair(gamma, s.displacement);
    auto it = even_.find(key);
    if (it == even_.end())
      it = even_.emplace(key, coherent_parity_prob(gamma, {Parity::even, s.displacement}, dim_,
                                                   tail_tol_))
               .first;
    return s.outcome == Parity::even ? it->second : 1.0 - it->second;
  }

 private:
  int dim_;
  double tail_tol_;
  std::map<std::pair<double, double>, double> even_;
};

}  // namespace

double mixture_joint_prob(const CoherentMixture& mix, int cond_mode, const ParitySetting& a,
                          int outcome_mode, const ParitySetting& b, int dim, double tail_tol) {
  mix.validate();
  if (cond_mode < 0 || cond_mode >= mix.modes() || outcome_mode < 0 ||
      outcome_mode >= mix.modes() || cond_mode == outcome_mode)
    throw DimensionMismatch("mixture joint needs two distinct valid modes");
  MixtureProbCache cache(dim, tail_tol);
  double acc = 0.0;
  for (int t = 0; t < mix.terms(); ++t)
    acc += mix.weights[t] *
           cache.prob(mix.gammas[t][cond_mode], a) * cache.prob(mix.gammas[t][outcome_mode], b);
  return acc;
}

double mixture_conditional_prob(const CoherentMixture& mix, int outcome_mode,
                                const ParitySetting& b, int cond_mode, const ParitySetting& a,
                                int dim, double tail_tol) {
  mix.validate();
  MixtureProbCache cache(dim, tail_tol);
  double joint = 0.0, marg = 0.0;
  for (int t = 0; t < mix.terms(); ++t) {
    const double pa = cache.prob(mix.gammas[t][cond_mode], a);
    joint += mix.weights[t] * pa * cache.prob(mix.gammas[t][outcome_mode], b);
    marg += mix.weights[t] * pa;
  }
  if (marg < kConditioningFloor)
    throw DegenerateConditioning("mixture conditioning marginal below 1e-12");
  return std::clamp(joint / marg, 0.0, 1.0);
}

SteeringReport steering_functional(const CoherentMixture& mix, const SteeringSettings& settings,
                                   int dim, double tol, double tail_tol) {
  const double p1 =
      mixture_conditional_prob(mix, 1, settings.bob.first, 0, settings.alice.first, dim, tail_tol);
  const double p2 = mixture_conditional_prob(mix, 1, settings.bob.second, 0,
                                             settings.alice.second, dim, tail_tol);
  return classify(0.5 * (p1 + p2), settings, tol);
}

CoherentMixture sample_coherent_mixture(std::mt19937_64& rng, const MixtureSamplerConfig& cfg) {
  std::uniform_int_distribution<int> nterms(cfg.min_terms, cfg.max_terms);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> gamma(cfg.gamma_lo, cfg.gamma_hi);

  CoherentMixture mix;
  const int k = nterms(rng);
  mix.weights.resize(k);
  double sum = 0.0;
  for (double& w : mix.weights) {
    w = unit(rng) + 1e-6;
    sum += w;
  }
  for (double& w : mix.weights) w /= sum;
  mix.gammas.resize(k, std::vector<double>(cfg.modes));
  for (auto& term : mix.gammas)
    for (double& g : term) g = gamma(rng);
  return mix;
}

}  // namespace cvsteer
