// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

/// Per-branch record of a full transformation check: the projector indices,
/// the branch weight p = Tr(P rho P), the compressed block state when the
/// block is rank 1, the target members assigned to the branch (with their
/// joint weights), and whether the branch condition holds.
struct BranchCondition {
  std::vector<int> indices;
  double probability = 0.0;
  std::optional<PureState> block_state;
  std::vector<EnsembleMember> assigned;
  bool condition_holds = false;
};

struct PartitionCertificate {
  std::vector<BranchCondition> branches;
  bool feasible = false;
};

/// Target ensemble grouped by branch; member probabilities are joint weights,
/// so each group is expected to sum to its branch weight.
using GroupedEnsemble = std::vector<std::vector<EnsembleMember>>;

/// Full feasibility check for rho -> grouped pure-state ensemble: for every
/// branch, the projected block must be rank 1 with its dephased state
/// dominated (in tail sums) by the weighted tails of the branch targets, and
/// the branch weight must match the group weight within tol.trace.
/// `partition` must cover 0..d-1 disjointly and align with `groups`
/// (InvalidPartition otherwise).
PartitionCertificate check_transformation(const DensityMatrix& rho, const GroupedEnsemble& groups,
                                          const std::vector<std::vector<int>>& partition,
                                          const ToleranceConfig& tol = {});

/// Searches for a feasible (partition, member assignment) pair for an
/// ungrouped target ensemble. Candidate partitions are refinements of the
/// maximal pure blocks, enumerated by block count ascending then
/// lexicographically; member assignments are enumerated per partition.
/// Returns the first feasible certificate, or nullopt.
/// Throws DimensionTooLarge when dim exceeds `enumeration_bound`.
std::optional<PartitionCertificate> find_feasible_partition(const DensityMatrix& rho,
                                                            const PureStateEnsemble& ens,
                                                            const ToleranceConfig& tol = {},
                                                            int enumeration_bound = 12);

/// Best fidelity achievable between two pure states under incoherent
/// unitaries (permutations with phases): sum_i |phi_i^sorted| |psi_i^sorted|,
/// together with a permutation and phases achieving it.
/// The unitary maps basis element j to e^{i theta_j} |perm[j]>.
struct AlignmentResult {
  double fidelity = 0.0;
  std::vector<int> permutation;
  std::vector<double> phases;
};

AlignmentResult incoherent_unitary_align(const PureState& phi, const PureState& psi);

/// Materializes the unitary described by an AlignmentResult.
Matrix alignment_unitary(const AlignmentResult& a, int dim);

/// Collapses a complete ensemble to the single pure state with
/// |amp_i|^2 = sum_mu p_mu |c_i^mu|^2, after canonicalizing every member
/// (moduli sorted descending, phases dropped). The result is always at least
/// as close to any sorted target as the ensemble average fidelity.
PureState ensemble_collapse(const PureStateEnsemble& ens, const ToleranceConfig& tol = {});

/// sum_mu p_mu |<psi|phi_mu>| for a complete ensemble.
double ensemble_average_fidelity(const PureState& psi, const PureStateEnsemble& ens,
                                 const ToleranceConfig& tol = {});

}  // namespace cohdist
