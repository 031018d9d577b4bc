// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "cohdist/states.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

/// Knobs for the brute-force verifiers. Everything is seeded and
/// deterministic.
struct OracleConfig {
  double grid_step = 1e-3;      ///< simplex grid resolution for dim <= 3
  int restarts = 64;            ///< random restarts for the ascent path
  int ascent_iterations = 10000;///< max coordinate sweeps per restart
  std::uint64_t seed = 0;
  double tolerance = 1e-4;      ///< advertised accuracy of the result
};

/// Brute-force maximum of sum_i sqrt(e_i) |psi_i^sorted| over descending
/// probability vectors e whose tail sums never exceed those of phi.
/// Exhaustive simplex grid (with local refinement) for dim <= 3, projected
/// coordinate ascent with random restarts for dim 4..6.
/// Throws DimensionTooLarge above dim 6.
double oracle_fmax(const PureState& phi, const PureState& psi, const OracleConfig& cfg = {});

/// Exhaustive maximum of |<phi|U|psi>| over incoherent unitaries: all
/// permutations with per-branch optimal phases. Throws DimensionTooLarge
/// above dim 8.
double oracle_unitary_fidelity(const PureState& phi, const PureState& psi);

/// Seeded generators for test corpora. Same seed, same output.
PureState random_pure_state(int dim, std::uint64_t seed);
DensityMatrix random_mixed_state(int dim, std::uint64_t seed);

/// The block structure planted by random_block_pure_state.
struct PlantedBlocks {
  std::vector<std::vector<int>> blocks;  ///< sorted by smallest index
  std::vector<double> weights;
  std::vector<PureState> states;         ///< embedded in the full dimension
};

/// Random direct sum of pure blocks: disjoint index sets, one pure state per
/// block with well-separated moduli, convex weights bounded away from zero.
DensityMatrix random_block_pure_state(int dim, std::uint64_t seed,
                                      PlantedBlocks* planted = nullptr);

namespace detail {
// Both maximization routes, exposed for cross-checks in tests.
double oracle_fmax_grid(const std::vector<double>& phi_tails,
                        const std::vector<double>& psi_sorted_moduli, const OracleConfig& cfg);
double oracle_fmax_ascent(const std::vector<double>& phi_tails,
                          const std::vector<double>& psi_sorted_moduli, const OracleConfig& cfg);
// Canonical ingredients: descending sorted moduli of psi, tail sums of phi.
std::vector<double> sorted_moduli(const PureState& s, int dim);
std::vector<double> squared_tails(const PureState& s, int dim);
}  // namespace detail

}  // namespace cohdist
