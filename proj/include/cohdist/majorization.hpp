// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

/// Tail sums C_s = sum_{i>=s} w_i of a weight vector sorted descending.
/// c[s-1] holds C_s for s = 1..dim; C_1 is the total mass.
struct TailSumProfile {
  int dim = 0;
  std::vector<double> c;

  /// C_s with the convention C_{dim+1} = 0. `s` is 1-based.
  double at(int s) const;
};

/// Builds the tail-sum profile. Weights slightly below zero (within
/// tol.majorization) are clamped; anything lower throws NegativeWeight.
TailSumProfile tail_sums(std::span<const double> weights, const ToleranceConfig& tol = {});

/// Tests p "majorized by" q. Vectors are sorted internally and the shorter
/// one is zero padded. Total masses must agree within tol.majorization
/// (MassMismatch otherwise). True iff every prefix sum of sorted p stays
/// within tol.majorization of not exceeding the corresponding prefix of q.
bool majorizes(std::span<const double> p, std::span<const double> q,
               const ToleranceConfig& tol = {});

/// Exact pure-to-pure convertibility: true iff the dephased initial state is
/// majorized by the dephased target. Squared moduli are rescaled to exact
/// unit mass before comparison so that independently normalized states never
/// trip the mass check.
bool pure_to_pure_feasible(const PureState& phi, const PureState& psi,
                           const ToleranceConfig& tol = {});

/// Pure-to-ensemble convertibility: true iff C_s(phi) dominates the
/// probability-weighted tail sums of the ensemble members for every s.
/// The ensemble must be complete (IncompleteEnsemble otherwise).
bool pure_to_ensemble_feasible(const PureState& phi, const PureStateEnsemble& ens,
                               const ToleranceConfig& tol = {});

}  // namespace cohdist
