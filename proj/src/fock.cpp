#include "cvsteer/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cvsteer {

namespace {

int64_t product_of(const std::vector<int>& dims) {
  int64_t p = 1;
  for (int d : dims) p *= d;
  return p;
}

void require_dim(int dim) {
  if (dim < 2) throw InvalidDim("truncation dimension must be >= 2, got " + std::to_string(dim));
}

}  // namespace

// --- FockVector -------------------------------------------------------------

FockVector::FockVector(Vec amps, double tail_mass) : amps_(std::move(amps)), tail_mass_(tail_mass) {
  require_dim(static_cast<int>(amps_.size()));
  const double norm = amps_.norm();
  if (norm <= 0.0 || !std::isfinite(norm))
    throw NumericalConsistencyError("cannot normalize zero or non-finite amplitude vector");
  amps_ /= norm;
}

double FockVector::mean_photon_number() const {
  double acc = 0.0;
  for (int n = 0; n < dim(); ++n) acc += n * std::norm(amps_[n]);
  return acc;
}

// --- DenseOperator -----------------------------------------------------------

DenseOperator::DenseOperator(Mat entries, double tail_mass)
    : entries_(std::move(entries)), tail_mass_(tail_mass) {
  if (entries_.rows() != entries_.cols())
    throw DimensionMismatch("operator matrix must be square");
  require_dim(static_cast<int>(entries_.rows()));
}

bool DenseOperator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// --- MultiModeState ----------------------------------------------------------

MultiModeState MultiModeState::pure(std::vector<int> dims, Vec amplitudes) {
  if (dims.empty()) throw DimensionMismatch("state needs at least one mode");
  for (int d : dims) require_dim(d);
  if (amplitudes.size() != product_of(dims))
    throw DimensionMismatch("amplitude vector length does not match product of mode dims");
  const double norm = amplitudes.norm();
  if (norm <= 0.0 || !std::isfinite(norm))
    throw NumericalConsistencyError("cannot normalize zero or non-finite amplitude vector");
  MultiModeState s;
  s.dims_ = std::move(dims);
  s.kind_ = StateKind::pure;
  s.amps_ = amplitudes / norm;
  return s;
}

MultiModeState MultiModeState::density(std::vector<int> dims, Mat rho) {
  if (dims.empty()) throw DimensionMismatch("state needs at least one mode");
  for (int d : dims) require_dim(d);
  const int64_t jd = product_of(dims);
  if (rho.rows() != jd || rho.cols() != jd)
    throw DimensionMismatch("density matrix shape does not match product of mode dims");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw NonHermitianOperator("density matrix is not Hermitian within 1e-12");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-12)
    throw NumericalConsistencyError("density matrix trace deviates from 1 beyond 1e-12");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NumericalConsistencyError("density matrix has eigenvalue below -1e-10");
  MultiModeState s;
  s.dims_ = std::move(dims);
  s.kind_ = StateKind::density;
  s.rho_ = std::move(rho);
  s.rho_ /= tr;
  return s;
}

MultiModeState MultiModeState::from_single_mode(const FockVector& v) {
  return pure({v.dim()}, v.amps());
}

MultiModeState MultiModeState::product(const std::vector<FockVector>& factors) {
  if (factors.empty()) throw DimensionMismatch("product state needs at least one factor");
  std::vector<int> dims;
  dims.reserve(factors.size());
  Vec joint = factors.front().amps();
  dims.push_back(factors.front().dim());
  for (size_t i = 1; i < factors.size(); ++i) {
    const Vec& f = factors[i].amps();
    Vec next(joint.size() * f.size());
    for (Eigen::Index a = 0; a < joint.size(); ++a)
      next.segment(a * f.size(), f.size()) = joint[a] * f;
    joint = std::move(next);
    dims.push_back(factors[i].dim());
  }
  return pure(std::move(dims), std::move(joint));
}

int MultiModeState::joint_dim() const { return static_cast<int>(product_of(dims_)); }

const Vec& MultiModeState::amplitudes() const {
  if (kind_ != StateKind::pure) throw DimensionMismatch("state is not pure");
  return amps_;
}

const Mat& MultiModeState::density_matrix() const {
  if (kind_ != StateKind::density) throw DimensionMismatch("state is not a density");
  return rho_;
}

double MultiModeState::mean_photon_number(int mode) const {
  if (mode < 0 || mode >= modes()) throw DimensionMismatch("mode index out of range");
  const int d = dims_[mode];
  int64_t post = 1;
  for (int m = mode + 1; m < modes(); ++m) post *= dims_[m];
  const int64_t jd = joint_dim();
  double acc = 0.0;
  for (int64_t idx = 0; idx < jd; ++idx) {
    const int n = static_cast<int>((idx / post) % d);
    const double w = (kind_ == StateKind::pure) ? std::norm(amps_[idx]) : rho_(idx, idx).real();
    acc += n * w;
  }
  return acc;
}

// --- coherent states ---------------------------------------------------------

FockVector coherent_state(double gamma, int dim, double tail_tol) {
  require_dim(dim);
  const double tail = coherent_tail_mass(gamma, dim);
  if (tail >= tail_tol)
    throw TruncationError("coherent state tail mass " + std::to_string(tail) +
                          " exceeds tolerance at dim " + std::to_string(dim));
  Vec amps(dim);
  const double pref = std::exp(-gamma * gamma / 2.0);
  double a = pref;
  for (int m = 0; m < dim; ++m) {
    amps[m] = a;
    a *= gamma / std::sqrt(static_cast<double>(m + 1));
  }
  return FockVector(std::move(amps), tail);
}

double coherent_tail_mass(double gamma, int dim) {
  const double lambda = gamma * gamma;
  if (lambda == 0.0) return 0.0;
  // Sum the upper Poisson terms starting at dim; stable for small tails.
  double logterm = -lambda + dim * std::log(lambda) - std::lgamma(dim + 1.0);
  double term = std::exp(logterm);
  double acc = 0.0;
  for (int m = dim; m < dim + 4096; ++m) {
    acc += term;
    term *= lambda / (m + 1);
    if (term < acc * 1e-18 + 1e-300) break;
  }
  return acc;
}

// --- displacement operator ---------------------------------------------------

namespace {

// Fill one diagonal (row = col + offset) of the displaced-number matrix via
// the two-term recurrence along the diagonal. Entries are
//   E_n = <n+offset|D(alpha)|n>, n = 0..count-1.
void fill_upper_diagonal(Mat& m, Complex alpha, int offset, bool transpose) {
  const int dim = static_cast<int>(m.rows());
  const double x = std::norm(alpha);
  const double expf = std::exp(-x / 2.0);

  // E_0 = alpha^offset exp(-x/2)/sqrt(offset!)
  Complex e0 = expf;
  for (int k = 1; k <= offset; ++k) e0 *= alpha / std::sqrt(static_cast<double>(k));
  auto put = [&](int n, Complex v) {
    if (transpose)
      m(n, n + offset) = v;
    else
      m(n + offset, n) = v;
  };
  put(0, e0);
  if (dim - offset < 2) return;
  Complex e1 = e0 * (offset + 1.0 - x) / std::sqrt(offset + 1.0);
  put(1, e1);
  for (int n = 2; n < dim - offset; ++n) {
    const double nd = n, d = offset;
    const Complex e2 = ((2.0 * nd + d - 1.0 - x) * e1 -
                        std::sqrt((nd - 1.0) * (nd - 1.0 + d)) * e0) /
                       std::sqrt(nd * (nd + d));
    put(n, e2);
    e0 = e1;
    e1 = e2;
  }
}

Mat displacement_matrix(Complex alpha, int dim) {
  Mat m = Mat::Zero(dim, dim);
  if (alpha == Complex(0.0, 0.0)) return Mat::Identity(dim, dim);
  fill_upper_diagonal(m, alpha, 0, false);
  for (int offset = 1; offset < dim; ++offset) {
    fill_upper_diagonal(m, alpha, offset, false);
    // <m|D(alpha)|n> for n > m follows the same recurrence with -conj(alpha).
    fill_upper_diagonal(m, -std::conj(alpha), offset, true);
  }
  return m;
}

}  // namespace

DenseOperator displacement_operator(double beta, int dim, double tail_tol) {
  require_dim(dim);
  const double tail = coherent_tail_mass(beta, dim);
  if (tail_tol > 0.0 && tail >= tail_tol)
    throw TruncationError("displacement with beta " + std::to_string(beta) +
                          " is not representable at dim " + std::to_string(dim));
  return DenseOperator(displacement_matrix(Complex(beta, 0.0), dim), tail);
}

DenseOperator parity_projector(const ParitySetting& setting, int dim, double tail_tol) {
  require_dim(dim);
  if (!std::isfinite(setting.displacement))
    throw OutOfRange("displacement must be finite");
  const double beta = setting.displacement;
  const double tail = coherent_tail_mass(beta, dim);
  if (tail_tol > 0.0 && tail >= tail_tol)
    throw TruncationError("parity projector displacement " + std::to_string(beta) +
                          " is not representable at dim " + std::to_string(dim));
  Mat d = displacement_matrix(Complex(beta, 0.0), dim);
  Mat scaled = d;
  for (int n = 1; n < dim; n += 2) scaled.col(n).setZero();  // D * P_even
  Mat even = scaled * d.adjoint();
  even = 0.5 * (even + Mat(even.adjoint()));  // kill matmul roundoff asymmetry
  if (setting.outcome == Parity::even) return DenseOperator(std::move(even), tail);
  Mat odd = Mat::Identity(dim, dim) - even;
  return DenseOperator(std::move(odd), tail);
}

MultiModeState noon_state(int n_photons, int dim) {
  if (n_photons < 1) throw OutOfRange("photon number must be >= 1");
  if (dim <= n_photons)
    throw InvalidDim("dim " + std::to_string(dim) + " cannot hold photon number " +
                     std::to_string(n_photons));
  Vec amps = Vec::Zero(static_cast<int64_t>(dim) * dim);
  const double r = 1.0 / std::sqrt(2.0);
  amps[static_cast<int64_t>(n_photons) * dim + 0] = r;   // |N,0>
  amps[0 * dim + n_photons] = -r;                        // -|0,N>
  return MultiModeState::pure({dim, dim}, std::move(amps));
}

double truncation_tail(double beta, int dim) {
  const int n0 = dim / 2 - 1;
  const int kcut = (3 * dim) / 4;
  const int ext = 2 * dim + 32;
  const Mat d = displacement_matrix(Complex(std::abs(beta), 0.0), ext);
  double leak = 0.0;
  for (int k = kcut; k < ext; ++k) leak += std::norm(d(k, n0));
  return std::max(leak, dim * 1e-16);
}

int auto_dim(double max_amplitude, double max_displacement) {
  const double r = std::abs(max_amplitude) + std::abs(max_displacement) + 6.0;
  return std::max(32, static_cast<int>(std::ceil(r * r)));
}

// --- expectation -------------------------------------------------------------

Vec apply_mode_op(const Vec& amps, const std::vector<int>& dims, int mode, const Mat& op) {
  const int d = dims[mode];
  int64_t post = 1;
  for (size_t m = mode + 1; m < dims.size(); ++m) post *= dims[m];
  int64_t pre = 1;
  for (int m = 0; m < mode; ++m) pre *= dims[m];

  Vec out(amps.size());
  Vec fiber(d), mixed(d);
  for (int64_t p = 0; p < pre; ++p) {
    const int64_t base = p * d * post;
    for (int64_t q = 0; q < post; ++q) {
      for (int i = 0; i < d; ++i) fiber[i] = amps[base + i * post + q];
      mixed.noalias() = op * fiber;
      for (int i = 0; i < d; ++i) out[base + i * post + q] = mixed[i];
    }
  }
  return out;
}

namespace {

// Apply op along the column (ket) factor `mode` of a density matrix:
// rho -> rho (I x ... x op x ... x I).
Mat apply_mode_op_right(const Mat& rho, const std::vector<int>& dims, int mode, const Mat& op) {
  Mat out(rho.rows(), rho.cols());
  // Transposing reuses the vector kernel: each row of rho is a joint ket.
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    Vec row = rho.row(r).transpose();
    out.row(r) = apply_mode_op(row, dims, mode, op.transpose()).transpose();
  }
  return out;
}

double finalize_real(Complex value, ExpectationKind kind) {
  if (std::abs(value.imag()) > 1e-10)
    throw NumericalConsistencyError("expectation has imaginary part " +
                                    std::to_string(value.imag()));
  double v = value.real();
  if (kind == ExpectationKind::probability) {
    if (v < -kProbabilitySlack || v > 1.0 + kProbabilitySlack)
      throw NumericalConsistencyError("probability " + std::to_string(v) +
                                      " outside [0,1] beyond slack");
    v = std::clamp(v, 0.0, 1.0);
  }
  return v;
}

}  // namespace

double expectation(const MultiModeState& state, const std::vector<const DenseOperator*>& ops,
                   ExpectationKind kind) {
  if (static_cast<int>(ops.size()) != state.modes())
    throw DimensionMismatch("need one (possibly null) operator per mode");
  for (int m = 0; m < state.modes(); ++m) {
    if (!ops[m]) continue;
    if (ops[m]->dim() != state.dims()[m])
      throw DimensionMismatch("operator dim does not match mode " + std::to_string(m));
    if (kind == ExpectationKind::probability && !ops[m]->is_hermitian())
      throw NonHermitianOperator("probability requested with non-Hermitian operator on mode " +
                                 std::to_string(m));
  }

  if (state.kind() == StateKind::pure) {
    Vec v = state.amplitudes();
    for (int m = 0; m < state.modes(); ++m)
      if (ops[m]) v = apply_mode_op(v, state.dims(), m, ops[m]->entries());
    return finalize_real(state.amplitudes().dot(v), kind);
  }

  Mat acc = state.density_matrix();
  for (int m = 0; m < state.modes(); ++m)
    if (ops[m]) acc = apply_mode_op_right(acc, state.dims(), m, ops[m]->entries());
  return finalize_real(acc.trace(), kind);
}

// --- marginal ---------------------------------------------------------------

MultiModeState marginal(const MultiModeState& state, const std::vector<int>& keep_in) {
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw DimensionMismatch("keep set must be nonempty");
  for (int m : keep)
    if (m < 0 || m >= state.modes()) throw DimensionMismatch("keep index out of range");

  std::vector<int> drop;
  for (int m = 0; m < state.modes(); ++m)
    if (!std::binary_search(keep.begin(), keep.end(), m)) drop.push_back(m);

  std::vector<int> kept_dims;
  int64_t kd = 1, dd = 1;
  for (int m : keep) {
    kept_dims.push_back(state.dims()[m]);
    kd *= state.dims()[m];
  }
  for (int m : drop) dd *= state.dims()[m];

  // Strides of each mode in the row-major joint index.
  std::vector<int64_t> stride(state.modes(), 1);
  for (int m = state.modes() - 2; m >= 0; --m) stride[m] = stride[m + 1] * state.dims()[m + 1];

  auto joint_index = [&](int64_t ki, int64_t di) {
    int64_t idx = 0;
    int64_t rk = ki;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      const int d = state.dims()[keep[i]];
      idx += (rk % d) * stride[keep[i]];
      rk /= d;
    }
    int64_t rd = di;
    for (int i = static_cast<int>(drop.size()) - 1; i >= 0; --i) {
      const int d = state.dims()[drop[i]];
      idx += (rd % d) * stride[drop[i]];
      rd /= d;
    }
    return idx;
  };

  Mat rho = Mat::Zero(kd, kd);
  if (state.kind() == StateKind::pure) {
    // rho = M M^dagger with M(kept, dropped).
    Mat m(kd, dd);
    for (int64_t ki = 0; ki < kd; ++ki)
      for (int64_t di = 0; di < dd; ++di) m(ki, di) = state.amplitudes()[joint_index(ki, di)];
    rho.noalias() = m * m.adjoint();
  } else {
    const Mat& full = state.density_matrix();
    for (int64_t ki = 0; ki < kd; ++ki)
      for (int64_t kj = 0; kj < kd; ++kj) {
        Complex acc = 0.0;
        for (int64_t di = 0; di < dd; ++di) acc += full(joint_index(ki, di), joint_index(kj, di));
        rho(ki, kj) = acc;
      }
  }
  rho = 0.5 * (rho + Mat(rho.adjoint()));
  return MultiModeState::density(std::move(kept_dims), std::move(rho));
}

}  // namespace cvsteer
