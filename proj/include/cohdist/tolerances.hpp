// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cohdist {

/// Numerical tolerances used by validators and comparisons.
///
/// Defaults are tuned for dense double-precision algebra at dimensions
/// up to a few dozen. All fields must be nonnegative.
struct ToleranceConfig {
  double hermitian = 1e-9;     ///< max |m_ij - conj(m_ji)| for Hermiticity
  double psd = 1e-9;           ///< eigenvalue floor / support cutoff
  double trace = 1e-9;         ///< |trace - 1| and probability bookkeeping
  double norm = 1e-9;          ///< state-vector and ensemble normalization
  double complete = 1e-9;      ///< Kraus completeness deviation
  double unit_entry = 1e-9;    ///< comparison-matrix unit-entry threshold
  double majorization = 1e-12; ///< slack in tail-sum comparisons
  double fidelity = 1e-9;      ///< fidelity comparisons and thresholds
};

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validation failures. Messages name the violated bound and its magnitude.
struct NotHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };

// Shape and precondition failures.
struct DimMismatch : Error { using Error::Error; };
struct IncompleteKrausSet : Error { using Error::Error; };
struct ZeroProbability : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct MassMismatch : Error { using Error::Error; };
struct IncompleteEnsemble : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct BlockNotPure : Error { using Error::Error; };
struct ZeroBlock : Error { using Error::Error; };
struct InvalidThreshold : Error { using Error::Error; };

}  // namespace cohdist
