// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

/// Entrywise overlap ratios A_ij = |rho_ij| / sqrt(rho_ii rho_jj) on the
/// support of the diagonal; rows and columns of unpopulated indices are zero.
/// An all-unit principal block certifies a pure subspace.
struct ComparisonMatrix {
  int dim = 0;
  Eigen::MatrixXd entries;
  std::vector<int> support;  ///< indices with rho_ii > tol.psd
};

ComparisonMatrix comparison_matrix(const DensityMatrix& rho, const ToleranceConfig& tol = {});

/// One maximal pure block: the projector index set, the block state embedded
/// in the full dimension, and its weight p = Tr(P rho P).
struct PureBlock {
  std::vector<int> indices;  ///< ascending; may include appended unpopulated indices
  PureState state;
  double probability = 0.0;
};

/// What to do when a connected component of the unit-entry graph fails the
/// rank-1 verification (a tolerance inconsistency, not a generic input).
enum class ImpureBlockPolicy {
  GreedySplit,  ///< drop the weakest edge until all parts verify; record a warning
  Throw,        ///< raise BlockNotPure
};

struct SubspaceDecomposition {
  int dim = 0;
  std::vector<PureBlock> blocks;        ///< sorted by smallest index
  std::vector<int> zero_population;     ///< indices with rho_ii <= tol.psd
  std::vector<std::string> warnings;
};

/// Detects the maximal pure coherent-state subspaces: connected components
/// of the graph with an edge (i, j) whenever A_ij >= 1 - tol.unit_entry,
/// each verified rank 1 by eigendecomposition. Unpopulated indices are
/// appended to the largest block's projector, which leaves P rho P unchanged.
SubspaceDecomposition pure_blocks(const DensityMatrix& rho, const ToleranceConfig& tol = {},
                                  ImpureBlockPolicy policy = ImpureBlockPolicy::GreedySplit);

/// The block-diagonal compression sum_mu P_mu rho P_mu assembled from
/// pure_blocks. Its diagonal equals the input diagonal.
DensityMatrix decompose(const DensityMatrix& rho, const ToleranceConfig& tol = {},
                        ImpureBlockPolicy policy = ImpureBlockPolicy::GreedySplit);

/// Independent purity oracle: true iff the principal submatrix on `indices`
/// has exactly one eigenvalue above tol.psd * trace. Throws ZeroBlock when
/// the block carries no population.
bool verify_block_purity(const DensityMatrix& rho, std::span<const int> indices,
                         const ToleranceConfig& tol = {});

}  // namespace cohdist
