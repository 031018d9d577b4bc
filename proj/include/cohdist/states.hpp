// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "cohdist/tolerances.hpp"

namespace cohdist {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A unit-norm state vector in the fixed incoherent basis.
class PureState {
 public:
  /// Checks the norm against tol.norm; throws NotNormalized.
  static PureState validated(Vector amplitudes, const ToleranceConfig& tol = {});
  /// Rescales to unit norm; throws NotNormalized on a (near-)zero vector.
  static PureState normalized(Vector amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(int i) const { return amps_(i); }

  /// Squared moduli |amp_i|^2 in basis order (not sorted).
  std::vector<double> moduli_squared() const;
  /// Number of amplitudes with |amp_i|^2 above the support cutoff.
  int coherence_rank(const ToleranceConfig& tol = {}) const;
  /// Copy embedded into `dim` dimensions by zero padding.
  PureState padded(int dim) const;

 private:
  explicit PureState(Vector v) : amps_(std::move(v)) {}
  Vector amps_;
};

/// A d x d density matrix in the fixed incoherent basis.
///
/// Instances come from validate_density (checked) or from operations that
/// preserve the invariants and construct via unchecked().
class DensityMatrix {
 public:
  /// Wraps a matrix the caller guarantees to be Hermitian, PSD and unit trace.
  static DensityMatrix unchecked(Matrix m) { return DensityMatrix(std::move(m)); }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& entries() const { return mat_; }
  Complex entry(int i, int j) const { return mat_(i, j); }
  /// Real diagonal (basis populations).
  Eigen::VectorXd diagonal() const { return mat_.diagonal().real(); }

 private:
  explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {}
  Matrix mat_;
};

struct EnsembleMember {
  double probability = 0.0;
  PureState state;
};

/// A list of (probability, pure state) pairs. Sub-normalized ensembles are
/// allowed (stochastic outcomes); `complete()` tells whether the weights sum
/// to one within tolerance.
class PureStateEnsemble {
 public:
  static PureStateEnsemble validated(std::vector<EnsembleMember> members,
                                     const ToleranceConfig& tol = {});

  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  double total_probability() const;
  bool complete(const ToleranceConfig& tol = {}) const;
  /// Largest member dimension.
  int dim() const;

 private:
  explicit PureStateEnsemble(std::vector<EnsembleMember> m) : members_(std::move(m)) {}
  std::vector<EnsembleMember> members_;
};

enum class KrausClass { StrictlyIncoherent, Incoherent, General };

std::string to_string(KrausClass c);

/// A set of Kraus operators with the coherence classification of the set
/// (the weakest label among its operators).
struct KrausSet {
  std::vector<Matrix> operators;
  KrausClass classification = KrausClass::General;

  /// Checks that operators are square with one common dimension.
  static KrausSet from_operators(std::vector<Matrix> ops, const ToleranceConfig& tol = {});

  int dim() const { return operators.empty() ? 0 : static_cast<int>(operators.front().rows()); }
  Matrix completeness_sum() const;
  /// True when sum K^dag K equals the identity within tol.complete.
  bool is_complete(const ToleranceConfig& tol = {}) const;
  /// True when sum K^dag K <= identity (max eigenvalue <= 1 + tol.complete).
  bool is_substochastic(const ToleranceConfig& tol = {}) const;
};

// ---- operations ----

/// Validates Hermiticity, positive semidefiniteness and unit trace.
/// Throws NotHermitian, NotPSD or TraceNotOne naming the violated bound.
DensityMatrix validate_density(const Matrix& m, const ToleranceConfig& tol = {});

/// The fully dephasing channel: keeps the diagonal, zeroes the rest.
DensityMatrix dephase(const DensityMatrix& rho);

/// |<a|b>|.
double fidelity_pure_pure(const PureState& a, const PureState& b);

/// <a|rho|a>. Note this is the squared-overlap convention: it equals the
/// square of fidelity_general restricted to a pure/mixed pair.
double fidelity_pure_mixed(const PureState& a, const DensityMatrix& rho);

/// Tr sqrt(sqrt(r1) r2 sqrt(r1)) via spectral decomposition.
double fidelity_general(const DensityMatrix& r1, const DensityMatrix& r2);

/// Classifies one Kraus operator. Entries below tol.unit_entry * max|k_ij|
/// count as zero. Strictly incoherent: at most one nonzero per row and per
/// column. Incoherent: at most one nonzero per column.
KrausClass classify_kraus(const Matrix& k, const ToleranceConfig& tol = {});

/// Applies a complete Kraus set: sum_mu K rho K^dag. Throws IncompleteKrausSet.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks,
                            const ToleranceConfig& tol = {});

struct StochasticOutcome {
  DensityMatrix state;
  double probability = 0.0;
};

/// Applies a sub-normalized Kraus set; returns the renormalized output and
/// the success probability P = Tr(sum K rho K^dag). Throws ZeroProbability
/// when P < tol.trace.
StochasticOutcome apply_stochastic(const DensityMatrix& rho, const KrausSet& ks,
                                   const ToleranceConfig& tol = {});

/// Rank-1 projector onto a pure state, as a density matrix.
DensityMatrix density_from_pure(const PureState& s);

/// Principal square root of a Hermitian PSD matrix (eigenvalues clamped at 0).
Matrix matrix_sqrt_psd(const Matrix& m);

}  // namespace cohdist
