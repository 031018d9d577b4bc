// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/subspaces.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

/// Result of the staircase construction for a pure initial state and a pure
/// target. Breakpoints and ratios live in the canonical frame where both
/// states are sorted by descending modulus; `breakpoints` holds the 1-based
/// ranks s_0 > s_1 > ... > s_k with s_0 = d + 1 and s_k = 1. Segment j covers
/// ranks [s_j, s_{j-1} - 1] and carries the squared-moduli masses
/// A_j (initial) and B_j (target), with ratio q_j = A_j / B_j.
///
/// `intermediate` is expressed in the target's original basis with the
/// target's phases, so fidelity_pure_pure(intermediate, target) == f_max and
/// pure_to_pure_feasible(initial, intermediate) always holds.
struct StaircaseResult {
  std::vector<int> breakpoints;
  std::vector<double> ratios;
  std::vector<std::pair<double, double>> segment_masses;
  double f_max = 0.0;
  PureState intermediate;
  /// target_order[r] = original index holding the rank-(r+1) target modulus.
  std::vector<int> target_order;
};

/// Maximal fidelity to `psi` over all pure states reachable from `phi` with
/// certainty, f_max = sum_j sqrt(A_j B_j), and the optimal intermediate state.
StaircaseResult distill_pure(const PureState& phi, const PureState& psi);

/// Mixed-state report: the subspace decomposition, one staircase per maximal
/// block (block states embedded in the full dimension), and the overall
/// f_max = min over blocks.
struct MixedDistillReport {
  SubspaceDecomposition decomposition;
  std::vector<std::pair<double, StaircaseResult>> per_block;  ///< (p_mu, staircase)
  double f_max = 0.0;
  std::size_t limiting_block = 0;  ///< position of the minimizing block
};

MixedDistillReport distill_mixed(const DensityMatrix& rho, const PureState& psi,
                                 const ToleranceConfig& tol = {});

/// Whether a state within `f0` of the target is reachable with certainty:
/// distill_mixed(...).f_max >= f0 - tol.fidelity. Throws InvalidThreshold
/// unless f0 lies in [0, 1].
bool can_reach(const DensityMatrix& rho, const PureState& psi, double f0,
               const ToleranceConfig& tol = {});

struct ProbabilityReport {
  double probability = 0.0;
  std::vector<std::size_t> succeeding_blocks;
};

/// Maximal success probability of reaching fidelity f0: the summed weights
/// of the blocks whose per-block f_max meets the threshold.
ProbabilityReport p_max(const DensityMatrix& rho, const PureState& psi, double f0,
                        const ToleranceConfig& tol = {});

}  // namespace cohdist
