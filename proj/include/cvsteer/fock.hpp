#ifndef CVSTEER_FOCK_HPP
#define CVSTEER_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cvsteer/errors.hpp"

namespace cvsteer {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kDefaultTailTol = 1e-10;
inline constexpr double kProbabilitySlack = 1e-10;   // clamp window around [0,1]
inline constexpr double kConditioningFloor = 1e-12;  // smallest usable marginal

// Dichotomic parity outcome: even photon number = 0, odd = 1.
enum class Parity : int { even = 0, odd = 1 };

inline Parity other(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// One measurement setting: a parity outcome label at a real phase-space
// displacement. Displacements are real in the public API; the matrix
// arithmetic underneath is fully complex.
struct ParitySetting {
  Parity outcome = Parity::even;
  double displacement = 0.0;
};

// Single-mode pure state over the truncated number basis |0>..|dim-1>.
// Normalized to unit 2-norm on construction.
class FockVector {
 public:
  explicit FockVector(Vec amps, double tail_mass = 0.0);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vec& amps() const { return amps_; }
  double tail_mass() const { return tail_mass_; }
  double mean_photon_number() const;

 private:
  Vec amps_;
  double tail_mass_;  // recorded estimate of mass lost to truncation
};

// Dense square operator on one truncated mode (or a small joint space).
class DenseOperator {
 public:
  explicit DenseOperator(Mat entries, double tail_mass = 0.0);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Mat& entries() const { return entries_; }
  double tail_mass() const { return tail_mass_; }
  bool is_hermitian(double tol = 1e-12) const;

 private:
  Mat entries_;
  double tail_mass_;
};

enum class StateKind { pure, density };

// State of one or more truncated modes. Pure states hold a joint amplitude
// vector in row-major mode order (mode 0 slowest); densities hold the full
// matrix over the same joint index. Densities are only practical at small
// joint dimensions; separable mixtures should use CoherentMixture instead
// (see steering.hpp).
class MultiModeState {
 public:
  static MultiModeState pure(std::vector<int> dims, Vec amplitudes);
  static MultiModeState density(std::vector<int> dims, Mat rho);
  static MultiModeState from_single_mode(const FockVector& v);
  static MultiModeState product(const std::vector<FockVector>& factors);

  int modes() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  StateKind kind() const { return kind_; }
  int joint_dim() const;

  const Vec& amplitudes() const;      // pure only
  const Mat& density_matrix() const;  // density only

  // Mean photon number of one mode (diagonal number-operator expectation).
  double mean_photon_number(int mode) const;

 private:
  MultiModeState() = default;
  std::vector<int> dims_;
  StateKind kind_ = StateKind::pure;
  Vec amps_;
  Mat rho_;
};

// --- constructors ---------------------------------------------------------

// Coherent state amplitudes exp(-g^2/2) g^m / sqrt(m!), renormalized.
// Errors with TruncationError when the Poisson(g^2) mass beyond dim-1
// reaches tail_tol.
FockVector coherent_state(double gamma, int dim, double tail_tol = kDefaultTailTol);

// Exact Poisson(gamma^2) mass beyond index dim-1 (the truncation deficit of
// a coherent state, and the vacuum-row deficit of a displacement operator).
double coherent_tail_mass(double gamma, int dim);

// Displacement matrix <m|D(beta)|n> from the closed-form displaced-number
// elements, filled diagonal-by-diagonal with a two-term recurrence. The
// recorded tail is the vacuum-row deficit; pass tail_tol <= 0 to skip the
// gate (used internally when probing oversized matrices).
DenseOperator displacement_operator(double beta, int dim, double tail_tol = kDefaultTailTol);

// Displaced parity projector D(beta) P D(beta)^dagger. The odd projector is
// built as I - Pi_even so the pair sums to the identity exactly.
DenseOperator parity_projector(const ParitySetting& setting, int dim,
                               double tail_tol = kDefaultTailTol);

// Two-mode number-entangled state (|N,0> - |0,N>)/sqrt(2).
MultiModeState noon_state(int n_photons, int dim);

// Documented truncation-tail bound used by the block invariants: leaked
// mass of the displaced midpoint state |floor(dim/2)-1> beyond index
// floor(3*dim/4), floored at dim*1e-16 for pure-roundoff regimes. The
// low-index-block (< dim/2) idempotence and inverse defects stay below
// 10x this bound.
double truncation_tail(double beta, int dim);

// Truncation policy: max(32, ceil((max_amplitude + max_displacement + 6)^2)).
// Six standard deviations of Poisson headroom keeps coherent tails below
// 1e-10 at desk scale.
int auto_dim(double max_amplitude, double max_displacement);

// --- evaluation -----------------------------------------------------------

enum class ExpectationKind { plain, probability };

// Tr[rho (op_0 x op_1 x ...)] by per-mode contraction; nullptr entries act
// as the identity. The joint Kronecker product is never materialized.
// With ExpectationKind::probability each supplied operator must be
// Hermitian, and the result is clamped to [0,1] (excursions beyond 1e-10
// raise NumericalConsistencyError).
double expectation(const MultiModeState& state, const std::vector<const DenseOperator*>& ops,
                   ExpectationKind kind = ExpectationKind::probability);

// Partial trace over all modes not in `keep`. Output is a density over the
// kept modes in ascending original order.
MultiModeState marginal(const MultiModeState& state, const std::vector<int>& keep);

// Apply one single-mode operator along `mode` of a joint amplitude vector.
Vec apply_mode_op(const Vec& amps, const std::vector<int>& dims, int mode, const Mat& op);

}  // namespace cvsteer

#endif
